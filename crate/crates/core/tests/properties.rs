mod common;

use std::sync::OnceLock;

use brandt_nsr::brandt::{Brandt, Code};
use brandt_nsr::congruence::{congruence_closure, congruence_lattice, CompatibilityMode, Congruence};
use brandt_nsr::generation::generate;
use brandt_nsr::maps::{canonical_forms, classify, map_add, map_compose, realize, MapTable};
use brandt_nsr::table::{NearSemiringTable, NsrElement};
use proptest::prelude::*;

use common::{stable, Stability};

const MODES: [CompatibilityMode; 3] = [
    CompatibilityMode::PlusOnly,
    CompatibilityMode::RightAction,
    CompatibilityMode::TwoSided,
];

fn b3() -> &'static Brandt {
    static B: OnceLock<Brandt> = OnceLock::new();
    B.get_or_init(|| Brandt::new(3).unwrap())
}

fn algebra(n: usize) -> &'static NearSemiringTable {
    static A: [OnceLock<NearSemiringTable>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    A[n - 1].get_or_init(|| generate(n).unwrap().algebra)
}

fn any_map() -> impl Strategy<Value = MapTable> {
    prop::collection::vec(0..10 as Code, 10).prop_map(|codes| MapTable::from_codes(b3(), codes).unwrap())
}

fn stability(mode: CompatibilityMode) -> Stability {
    Stability {
        right_mul: mode != CompatibilityMode::PlusOnly,
        left_mul: mode == CompatibilityMode::TwoSided,
    }
}

proptest! {
    #[test]
    fn left_distributive_on_all_self_maps(f in any_map(), g in any_map(), h in any_map()) {
        let b = b3();
        let lhs = map_compose(b, &f, &map_add(b, &g, &h).unwrap()).unwrap();
        let rhs = map_add(b, &map_compose(b, &f, &g).unwrap(), &map_compose(b, &f, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn map_operations_associate(f in any_map(), g in any_map(), h in any_map()) {
        let b = b3();
        let add = |x: &MapTable, y: &MapTable| map_add(b, x, y).unwrap();
        let compose = |x: &MapTable, y: &MapTable| map_compose(b, x, y).unwrap();
        prop_assert_eq!(add(&add(&f, &g), &h), add(&f, &add(&g, &h)));
        prop_assert_eq!(compose(&compose(&f, &g), &h), compose(&f, &compose(&g, &h)));
    }

    #[test]
    fn classify_inverts_realize(i in 0usize..146) {
        let nsr = algebra(3);
        if let NsrElement::Map(m) = &nsr.elements()[i] {
            let form = classify(b3(), m);
            prop_assert!(!form.is_other());
            prop_assert_eq!(&realize(b3(), &form).unwrap(), m);
            prop_assert_eq!(nsr.form(i), Some(&form));
        }
    }

    #[test]
    fn closure_is_a_stable_idempotent_extension(
        pairs in prop::collection::vec((0usize..30, 0usize..30), 1..4),
        m in 0usize..3,
    ) {
        let nsr = algebra(2);
        let mode = MODES[m];
        let c = congruence_closure(nsr, &pairs, mode);
        for &(a, b) in &pairs {
            prop_assert!(c.related(a, b));
        }
        prop_assert!(mode.strategy().is_compatible(nsr, c.encoding()));
        let labels: Vec<usize> = c.encoding().iter().map(|&r| r as usize).collect();
        prop_assert!(stable(nsr, &labels, stability(mode)));
        let spanning: Vec<(usize, usize)> = c.spanning_pairs().collect();
        prop_assert_eq!(congruence_closure(nsr, &spanning, mode), c);
    }
}

#[test]
fn every_canonical_form_is_realized_and_named() {
    for form in canonical_forms(b3()) {
        let map = realize(b3(), &form).unwrap();
        assert_eq!(classify(b3(), &map), form);
        assert!(algebra(3).index_of_name(&form.name().unwrap()).is_some());
    }
}

#[test]
fn stronger_modes_give_fewer_congruences() {
    for n in [1, 2] {
        let nsr = algebra(n);
        let lattices: Vec<Vec<Congruence>> = MODES
            .iter()
            .map(|&mode| {
                congruence_lattice(nsr, mode)
                    .into_iter()
                    .map(|c| c.with_mode(CompatibilityMode::PlusOnly))
                    .collect()
            })
            .collect();
        let [plus, right, twosided] = &lattices[..] else { unreachable!() };
        assert!(twosided.iter().all(|c| right.contains(c)), "n={n}");
        assert!(right.iter().all(|c| plus.contains(c)), "n={n}");
        assert!(twosided.len() < right.len() && right.len() < plus.len(), "n={n}");
    }
}
