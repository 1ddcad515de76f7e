//! Congruence closures, principal congruences and congruence lattices of
//! `N` under the three compatibility modes.

mod closure;
mod mode;

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

pub use closure::{congruence_closure, extend_congruence, join, kernel, Congruence};
pub use mode::{
    lookup, registry, Compatibility, CompatibilityMode, PlusOnly, RightAction, Translation, TwoSided,
};

use crate::table::NearSemiringTable;

/// `{ closure({(a, b)}) : a < b }`, deduplicated and in report order.
pub fn principal_congruences(algebra: &NearSemiringTable, mode: CompatibilityMode) -> Vec<Congruence> {
    let size = algebra.size();
    let found: Vec<Congruence> = (0..size)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut seen = HashSet::new();
            let mut local = Vec::new();
            for b in a + 1..size {
                let c = congruence_closure(algebra, &[(a, b)], mode);
                if seen.insert(c.encoding().to_vec()) {
                    local.push(c);
                }
            }
            local
        })
        .collect();
    let mut out = dedup(found);
    out.sort();
    out
}

/// Every congruence of `mode`: all joins of principal congruences, plus the
/// equality relation. Report order (fewest classes first).
pub fn congruence_lattice(algebra: &NearSemiringTable, mode: CompatibilityMode) -> Vec<Congruence> {
    let principals = principal_congruences(algebra, mode);
    let base = Congruence::equality(algebra.size(), mode);
    lattice_above(algebra, &base, &principals)
}

/// Every congruence of `base`'s mode that contains `base`.
pub fn congruences_above(algebra: &NearSemiringTable, base: &Congruence) -> Vec<Congruence> {
    let principals = principal_congruences(algebra, base.mode());
    lattice_above(algebra, base, &principals)
}

/// Breadth-first join closure of `base` with the principal congruences.
/// Every congruence above `base` is `base` joined with the principal
/// congruences of its pairs, so the search is complete.
fn lattice_above(algebra: &NearSemiringTable, base: &Congruence, principals: &[Congruence]) -> Vec<Congruence> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(base.encoding().to_vec());
    queue.push_back(base.clone());
    out.push(base.clone());
    while let Some(current) = queue.pop_front() {
        for p in principals {
            if p.refines(&current) {
                continue;
            }
            let joined = join(algebra, &current, p);
            if seen.insert(joined.encoding().to_vec()) {
                queue.push_back(joined.clone());
                out.push(joined);
            }
        }
    }
    out.sort();
    out
}

fn dedup(items: Vec<Congruence>) -> Vec<Congruence> {
    let mut seen = HashSet::new();
    items
        .into_iter()
        .filter(|c| seen.insert(c.encoding().to_vec()))
        .collect()
}

/// The relation `(A⁺ x A⁺) ∪ {(0, 0)}`: everything nonzero in one class.
pub fn nonzero_collapse(algebra: &NearSemiringTable, mode: CompatibilityMode) -> Congruence {
    let labels: Vec<bool> = (0..algebra.size()).map(|i| i == algebra.zero_idx()).collect();
    Congruence::from_labels(&labels, mode)
}

/// Every kernel (zero class) of a congruence of `mode`, sorted.
///
/// A congruence `c` and the join of `closure({(x, 0)})` over `x ∈ ker c`
/// have the same kernel, so joining those zero-principal congruences
/// reaches every kernel without enumerating the whole lattice.
pub fn kernel_set(algebra: &NearSemiringTable, mode: CompatibilityMode) -> Vec<Vec<usize>> {
    let zero = algebra.zero_idx();
    let generators = dedup(
        (0..algebra.size())
            .into_par_iter()
            .filter(|&x| x != zero)
            .map(|x| congruence_closure(algebra, &[(x, zero)], mode))
            .collect(),
    );
    let base = Congruence::equality(algebra.size(), mode);
    kernels(algebra, &lattice_above(algebra, &base, &generators))
}

/// Set of kernels (zero classes) over a list of congruences, sorted.
pub fn kernels(algebra: &NearSemiringTable, congruences: &[Congruence]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = congruences.iter().map(|c| kernel(c, algebra)).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::build_nsr;

    #[test]
    fn empty_closure_is_equality() {
        let nsr = build_nsr(2).unwrap();
        for mode in CompatibilityMode::ALL {
            assert!(congruence_closure(&nsr, &[], mode).is_equality());
        }
    }

    #[test]
    fn constant_against_theta_collapses_nonzero_part() {
        let nsr = build_nsr(2).unwrap();
        let f = nsr.index_of_name("c:1,1").unwrap();
        let c = congruence_closure(&nsr, &[(f, nsr.xi_theta_idx())], CompatibilityMode::PlusOnly);
        assert_eq!(c, nonzero_collapse(&nsr, CompatibilityMode::PlusOnly));
        assert_eq!(kernel(&c, &nsr), vec![0]);
    }

    #[test]
    fn anything_against_zero_is_universal_for_right_action() {
        let nsr = build_nsr(2).unwrap();
        for f in 1..nsr.size() {
            let c = congruence_closure(&nsr, &[(f, 0)], CompatibilityMode::RightAction);
            assert!(c.is_universal(), "{}", nsr.name(f));
        }
    }

    #[test]
    fn twosided_lattice_of_b2() {
        let nsr = build_nsr(2).unwrap();
        let lattice = congruence_lattice(&nsr, CompatibilityMode::TwoSided);
        assert_eq!(lattice.len(), 3);
        assert!(lattice[0].is_universal());
        assert_eq!(lattice[1], nonzero_collapse(&nsr, CompatibilityMode::TwoSided));
        assert!(lattice[2].is_equality());
        let principals = principal_congruences(&nsr, CompatibilityMode::TwoSided);
        assert!(principals.contains(&nonzero_collapse(&nsr, CompatibilityMode::TwoSided)));
        let strategy = CompatibilityMode::TwoSided.strategy();
        assert!(principals.iter().all(|c| strategy.is_compatible(&nsr, c.encoding())));
    }

    #[test]
    fn kernels_of_extremes() {
        let nsr = build_nsr(2).unwrap();
        let eq = Congruence::equality(nsr.size(), CompatibilityMode::RightAction);
        let all = Congruence::universal(nsr.size(), CompatibilityMode::RightAction);
        assert_eq!(kernel(&eq, &nsr), vec![0]);
        assert_eq!(kernel(&all, &nsr), (0..nsr.size()).collect::<Vec<_>>());
    }

    #[test]
    fn kernel_set_matches_lattice() {
        for n in 1..=2 {
            let nsr = build_nsr(n).unwrap();
            for mode in CompatibilityMode::ALL {
                let lattice = congruence_lattice(&nsr, mode);
                assert_eq!(kernel_set(&nsr, mode), kernels(&nsr, &lattice), "n={n} {mode}");
            }
        }
    }

    #[test]
    fn b1_principal_congruences_are_compatible() {
        let nsr = build_nsr(1).unwrap();
        for mode in CompatibilityMode::ALL {
            let ps = principal_congruences(&nsr, mode);
            assert!(!ps.is_empty());
            assert!(ps.iter().all(|c| mode.strategy().is_compatible(&nsr, c.encoding())));
            assert!(ps.iter().all(|c| !c.is_equality()));
        }
    }
}
