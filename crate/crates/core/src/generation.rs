//! Generation of `End(B_n)`, `Aff(B_n)` and the additive closure `A⁺(B_n)`.

use std::collections::HashSet;

use crate::brandt::{Brandt, Code};
use crate::error::{NsrError, Result};
use crate::maps::{add_unchecked, MapTable};
use crate::table::NearSemiringTable;

/// How each element of `B_n` is reached from the generating set: either it
/// is a generator (assigned freely) or the sum of two earlier elements.
#[derive(Clone, Copy, Debug)]
enum Derivation {
    Generator,
    Sum(Code, Code),
}

/// Precomputed search plan for the endomorphism backtracking.
struct Plan {
    /// Free variables: the cycle generators, plus any element they do not
    /// reach (only `θ` when `n = 1`).
    generators: Vec<Code>,
    /// Elements in discovery order with their derivation and the index of
    /// the last generator they depend on.
    order: Vec<(Code, Derivation, usize)>,
    /// `(a, b)` pairs bucketed by the first level at which `a`, `b` and
    /// `a + b` all have images.
    checks: Vec<Vec<(Code, Code)>>,
}

impl Plan {
    fn new(brandt: &Brandt) -> Self {
        let order_len = brandt.order();
        let mut generators = brandt.cycle_generators();
        let reached = brandt.generated_by(&generators);
        generators.extend((0..order_len as Code).filter(|c| reached.binary_search(c).is_err()));

        let mut level = vec![usize::MAX; order_len];
        let mut order = Vec::with_capacity(order_len);
        for (k, &g) in generators.iter().enumerate() {
            level[g as usize] = k;
            order.push((g, Derivation::Generator, k));
        }
        // Grow by sums, always preferring the lowest level so elements become
        // determined as early in the search as possible.
        loop {
            let mut best: Option<(usize, Code, Code, Code)> = None;
            for &(a, _, la) in &order {
                for &(b, _, lb) in &order {
                    let s = brandt.add_codes(a, b);
                    if level[s as usize] != usize::MAX {
                        continue;
                    }
                    let l = la.max(lb);
                    if best.is_none_or(|(bl, ..)| l < bl) {
                        best = Some((l, s, a, b));
                    }
                }
            }
            match best {
                Some((l, s, a, b)) => {
                    level[s as usize] = l;
                    order.push((s, Derivation::Sum(a, b), l));
                }
                None => break,
            }
        }
        debug_assert_eq!(order.len(), order_len);

        let mut checks = vec![Vec::new(); generators.len()];
        for a in 0..order_len as Code {
            for b in 0..order_len as Code {
                let s = brandt.add_codes(a, b);
                let l = level[a as usize].max(level[b as usize]).max(level[s as usize]);
                checks[l].push((a, b));
            }
        }
        Plan {
            generators,
            order,
            checks,
        }
    }
}

/// All semigroup endomorphisms of `B_n`, sorted lexicographically by table.
///
/// Backtracks over the images of the generators; after each assignment the
/// images of every element derived from the assigned generators are forced,
/// and the branch is pruned as soon as some `(a + b)g != ag + bg` among
/// determined elements.
pub fn endomorphisms(brandt: &Brandt) -> Vec<MapTable> {
    let plan = Plan::new(brandt);
    let mut image = vec![0 as Code; brandt.order()];
    let mut out = Vec::new();
    extend(brandt, &plan, 0, &mut image, &mut out);
    out.sort();
    out.dedup();
    out
}

fn extend(brandt: &Brandt, plan: &Plan, level: usize, image: &mut [Code], out: &mut Vec<MapTable>) {
    if level == plan.generators.len() {
        out.push(MapTable::from_codes_unchecked(brandt.n(), image.to_vec()));
        return;
    }
    for candidate in 0..brandt.order() as Code {
        image[plan.generators[level] as usize] = candidate;
        for &(x, derivation, l) in &plan.order {
            if l == level {
                if let Derivation::Sum(a, b) = derivation {
                    image[x as usize] = brandt.add_codes(image[a as usize], image[b as usize]);
                }
            }
        }
        let consistent = plan.checks[level].iter().all(|&(a, b)| {
            image[brandt.add_codes(a, b) as usize]
                == brandt.add_codes(image[a as usize], image[b as usize])
        });
        if consistent {
            extend(brandt, plan, level + 1, image, out);
        }
    }
}

/// `{ g + ξ_c : g ∈ End(B_n), c ∈ B_n }`, deduplicated, in first-seen order
/// (endomorphisms outer, constants inner).
pub fn affine_maps(brandt: &Brandt, endos: &[MapTable]) -> Vec<MapTable> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in endos {
        for c in 0..brandt.order() as Code {
            let f = add_unchecked(brandt, g, &MapTable::constant(brandt, c));
            if seen.insert(f.clone()) {
                out.push(f);
            }
        }
    }
    out
}

/// Smallest set containing `gens` and closed under pointwise addition.
/// Breadth-first with hashed deduplication; order is discovery order.
pub fn additive_closure(brandt: &Brandt, gens: &[MapTable]) -> Result<Vec<MapTable>> {
    if gens.is_empty() {
        return Err(NsrError::invariant("additive closure needs at least one generator"));
    }
    let mut seen: HashSet<MapTable> = HashSet::new();
    let mut members: Vec<MapTable> = Vec::new();
    for g in gens {
        if g.n() != brandt.n() {
            return Err(NsrError::MismatchedN {
                left: brandt.n(),
                right: g.n(),
            });
        }
        if seen.insert(g.clone()) {
            members.push(g.clone());
        }
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..=i {
            let sums = [
                add_unchecked(brandt, &members[i], &members[j]),
                add_unchecked(brandt, &members[j], &members[i]),
            ];
            for s in sums {
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    members.push(s);
                }
            }
        }
        i += 1;
    }
    Ok(members)
}

/// Intermediate products of a build, kept for reporting.
#[derive(Clone, Debug)]
pub struct Generation {
    pub endomorphisms: Vec<MapTable>,
    pub affine: Vec<MapTable>,
    pub algebra: NearSemiringTable,
}

pub fn generate(n: usize) -> Result<Generation> {
    let brandt = Brandt::new(n)?;
    let endomorphisms = endomorphisms(&brandt);
    let affine = affine_maps(&brandt, &endomorphisms);
    let closure = additive_closure(&brandt, &affine)?;
    let algebra = NearSemiringTable::from_maps(brandt, closure)?;
    if n >= 2 {
        let expected = expected_breakdown(n);
        if algebra.breakdown() != expected {
            return Err(NsrError::invariant(format!(
                "breakdown {:?} differs from {:?}",
                algebra.breakdown(),
                expected
            )));
        }
    }
    Ok(Generation {
        endomorphisms,
        affine,
        algebra,
    })
}

/// Builds `N = A⁺(B_n) ∪ {0}` with its tables.
pub fn build_nsr(n: usize) -> Result<NearSemiringTable> {
    generate(n).map(|g| g.algebra)
}

/// `(n! + 1)n² + n⁴ + 1` for `n >= 2`; `None` for `n = 1`, where
/// `|A⁺(B_1)| = 3` instead, or on overflow.
pub fn count_formula(n: u32) -> Option<u128> {
    if n < 2 {
        return None;
    }
    let n = n as u128;
    let mut fact: u128 = 1;
    for k in 2..=n {
        fact = fact.checked_mul(k)?;
    }
    let n2 = n.checked_mul(n)?;
    (fact.checked_add(1)?)
        .checked_mul(n2)?
        .checked_add(n2.checked_mul(n2)?)?
        .checked_add(1)
}

/// The family sizes `(n² + 1, n⁴, n!·n²)` for `n >= 2`.
pub fn expected_breakdown(n: usize) -> crate::table::Breakdown {
    let fact: usize = (1..=n).product();
    crate::table::Breakdown {
        constants: n * n + 1,
        singletons: n.pow(4),
        n_support: fact * n * n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{Permutation, THETA};
    use crate::maps::{classify, CanonicalForm};

    #[test]
    fn endomorphisms_of_b1() {
        let b1 = Brandt::new(1).unwrap();
        let endos = endomorphisms(&b1);
        assert_eq!(
            endos,
            vec![
                MapTable::constant(&b1, THETA),
                MapTable::identity(&b1),
                MapTable::constant(&b1, 1),
            ]
        );
    }

    #[test]
    fn automorphisms_are_endomorphisms() {
        for n in 1..=4 {
            let b = Brandt::new(n).unwrap();
            let endos: HashSet<MapTable> = endomorphisms(&b).into_iter().collect();
            for sigma in Permutation::all(n) {
                let mut entries = vec![THETA; b.order()];
                for i in 1..=n {
                    for j in 1..=n {
                        entries[b.code(i, j) as usize] = b.code(sigma.apply(i), sigma.apply(j));
                    }
                }
                assert!(endos.contains(&MapTable::from_codes(&b, entries).unwrap()));
            }
        }
    }

    #[test]
    fn endomorphisms_are_homomorphisms_and_sorted() {
        for n in 1..=3 {
            let b = Brandt::new(n).unwrap();
            let endos = endomorphisms(&b);
            assert!(endos.windows(2).all(|w| w[0] < w[1]));
            for g in &endos {
                for x in 0..b.order() as Code {
                    for y in 0..b.order() as Code {
                        assert_eq!(g.image(b.add_codes(x, y)), b.add_codes(g.image(x), g.image(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn affine_maps_contain_theta_and_translates() {
        let b = Brandt::new(2).unwrap();
        let endos = endomorphisms(&b);
        let aff = affine_maps(&b, &endos);
        assert!(aff.contains(&MapTable::constant(&b, THETA)));
        let id = MapTable::identity(&b);
        // id + ξ_(1,2): (i,1) -> (i,2), everything else -> θ
        let shifted = aff
            .iter()
            .find(|f| **f == add_unchecked(&b, &id, &MapTable::constant(&b, b.code(1, 2))))
            .unwrap();
        assert_eq!(shifted.image(b.code(2, 1)), b.code(2, 2));
        assert_eq!(shifted.image(b.code(2, 2)), THETA);
    }

    #[test]
    fn closure_examples() {
        let b = Brandt::new(2).unwrap();
        let theta = MapTable::constant(&b, THETA);
        assert_eq!(additive_closure(&b, &[theta.clone()]).unwrap(), vec![theta]);
        assert!(additive_closure(&b, &[]).is_err());
    }

    #[test]
    fn b1_algebra() {
        let nsr = build_nsr(1).unwrap();
        assert_eq!(nsr.size(), 4);
        assert_eq!(nsr.names(), &["0", "c:t", "c:1,1", "n:1,1;1"]);
    }

    #[test]
    fn counts_for_two_and_three() {
        for (n, total) in [(2, 30), (3, 146)] {
            let nsr = build_nsr(n).unwrap();
            assert_eq!(nsr.size(), total);
            assert_eq!(nsr.xi_theta_idx(), 1);
            for i in 1..nsr.size() {
                let crate::table::NsrElement::Map(m) = &nsr.elements()[i] else {
                    panic!("zero away from index 0");
                };
                assert!(!classify(nsr.brandt(), m).is_other());
            }
        }
    }

    #[test]
    fn deterministic_builds() {
        let a = build_nsr(2).unwrap();
        let b = build_nsr(2).unwrap();
        assert_eq!(a.names(), b.names());
        assert_eq!(a.add_table(), b.add_table());
        assert_eq!(a.mul_table(), b.mul_table());
        assert_eq!(a.form(1), Some(&CanonicalForm::ConstTheta));
    }

    #[test]
    fn formula() {
        assert_eq!(count_formula(1), None);
        assert_eq!(count_formula(2), Some(29));
        assert_eq!(count_formula(3), Some(145));
        assert_eq!(count_formula(4), Some(25 * 16 + 256 + 1));
        assert_eq!(count_formula(10), Some(3_628_801 * 100 + 10_000 + 1));
        assert_eq!(count_formula(60), None);
    }
}
