//! One-shot theorem verification over a built algebra.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::congruence::{
    congruence_closure, congruence_lattice, congruences_above, kernel_set, nonzero_collapse, CompatibilityMode,
    Congruence,
};
use crate::error::{NsrError, Result};
use crate::generation::{count_formula, endomorphisms, expected_breakdown};
use crate::identities::proof_identities;
use crate::maps::CanonicalForm;
use crate::oracle::{brute_force_congruences, brute_force_endomorphisms};
use crate::structure::{
    build_c, has_left_identity, j_name, radical_report, LeftIdentity, RadicalValue, J_PAIRS, R_NAMES,
};
use crate::table::NearSemiringTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs every check that applies to `algebra`'s `n`.
///
/// The endomorphism oracle runs for `n <= 2` and the partition oracle for
/// `n = 1`; both are exhaustive and would not finish for larger `n`.
pub fn verify(algebra: &NearSemiringTable) -> Result<VerificationReport> {
    let n = algebra.n();
    let mut report = VerificationReport::default();
    let mut push = |id: &'static str, passed: bool, detail: String| {
        report.checks.push(Check { id, n, passed, detail });
    };

    let (id, ok, detail) = count_theorem(algebra);
    push(id, ok, detail);

    let twosided = congruence_lattice(algebra, CompatibilityMode::TwoSided);
    let expected = expected_twosided(algebra);
    push(
        "congruence-theorem",
        twosided == expected,
        format!("{} two-sided congruences", twosided.len()),
    );

    let kernels = kernel_set(algebra, CompatibilityMode::RightAction);
    let everything: Vec<usize> = (0..algebra.size()).collect();
    push(
        "rideal-theorem",
        kernels == vec![vec![algebra.zero_idx()], everything],
        format!("{} right ideals", kernels.len()),
    );

    let (ok, detail) = constant_collapse(algebra);
    push("constant-collapse-lemma", ok, detail);

    let (ok, detail) = annihilator_c(algebra)?;
    push("annihilator-C", ok, detail);

    if n == 1 {
        // (1,1;id) is the identity map of B_1, hence a left identity of N.
        // The R2/R3 premise fails, and the radical report must refuse.
        let left = has_left_identity(algebra);
        let expected_u = algebra.index_of_name("n:1,1;1");
        push(
            "left-identity-boundary",
            matches!(left, LeftIdentity::Found(u) if Some(u) == expected_u),
            "at n = 1, (1,1;id) is a left identity, outside the no-left-identity claim".to_string(),
        );
        let refused = radical_report(algebra);
        push(
            "radicals-boundary",
            matches!(&refused, Err(NsrError::PremiseFailed { claim, .. }) if claim == "N has no left identity"),
            match refused {
                Ok(_) => "radical report was emitted despite a left identity".to_string(),
                Err(e) => format!("report refused: {e}"),
            },
        );
    } else {
        let (ok, detail) = match radical_report(algebra) {
            Ok(r) => {
                let j_ok = J_PAIRS
                    .iter()
                    .all(|&p| r.value(&j_name(p)) == Some(RadicalValue::Zero));
                let r_ok = R_NAMES.iter().enumerate().all(|(i, name)| {
                    let want = if i < 2 { RadicalValue::Zero } else { RadicalValue::Whole };
                    r.value(name) == Some(want)
                });
                (
                    j_ok && r_ok,
                    format!("{} J values, R0..R3, {} premises", J_PAIRS.len(), r.premises.len()),
                )
            }
            Err(e) => (false, e.to_string()),
        };
        push("radicals", ok, detail);

        let left = has_left_identity(algebra);
        push(
            "left-identity",
            !left.exists(),
            match left {
                LeftIdentity::Found(u) => format!("{} is a left identity", algebra.name(u)),
                LeftIdentity::Absent { counterexamples } => {
                    format!("each of the {} elements moves some x", counterexamples.len())
                }
            },
        );
    }

    if n <= 2 {
        let fast = endomorphisms(algebra.brandt());
        let slow = brute_force_endomorphisms(algebra.brandt())?;
        push(
            "endomorphism-oracle",
            fast == slow,
            format!("backtracking {} vs brute force {}", fast.len(), slow.len()),
        );
    }

    if n == 1 {
        let mut agree = true;
        let mut counts = Vec::new();
        for mode in CompatibilityMode::ALL {
            let fast = congruence_lattice(algebra, mode);
            let slow = brute_force_congruences(algebra, mode)?;
            agree &= fast == slow;
            counts.push(format!("{mode}: {}", fast.len()));
        }
        push("lattice-oracle", agree, counts.join(", "));
    }

    let laws = algebra.validate();
    push(
        "algebraic-laws",
        laws.is_ok(),
        laws.err().map_or_else(
            || "associativity, left distributivity and zero laws hold".to_string(),
            |e| e.to_string(),
        ),
    );

    if n >= 2 {
        let witness = algebra.right_distributivity_counterexample();
        push(
            "right-distributivity",
            witness.is_some(),
            witness.map_or_else(
                || "no counterexample found".to_string(),
                |(f, g, h)| {
                    format!(
                        "(g + h)f != gf + hf for f = {}, g = {}, h = {}",
                        algebra.name(f),
                        algebra.name(g),
                        algebra.name(h)
                    )
                },
            ),
        );
    }

    let identities = proof_identities(n)?;
    let failing: Vec<&str> = identities.iter().filter(|c| !c.holds()).map(|c| c.name).collect();
    let instances: usize = identities.iter().map(|c| c.instances).sum();
    push(
        "proof-identities",
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} identities, {instances} instances", identities.len())
        } else {
            format!("failing: {}", failing.join(", "))
        },
    );

    Ok(report)
}

/// Equality, universal and `(A⁺ x A⁺) ∪ {(0,0)}`, in report order.
pub fn expected_twosided(algebra: &NearSemiringTable) -> Vec<Congruence> {
    let mode = CompatibilityMode::TwoSided;
    let mut out = vec![
        Congruence::equality(algebra.size(), mode),
        Congruence::universal(algebra.size(), mode),
        nonzero_collapse(algebra, mode),
    ];
    out.sort();
    out.dedup();
    out
}

fn count_theorem(algebra: &NearSemiringTable) -> (&'static str, bool, String) {
    let n = algebra.n();
    let nonzero = algebra.size() - 1;
    let b = algebra.breakdown();
    let detail = format!(
        "|A⁺(B_{n})| = {nonzero} (constants {}, singletons {}, n-support {})",
        b.constants, b.singletons, b.n_support
    );
    let ok = match count_formula(n as u32) {
        Some(f) => nonzero as u128 == f && b == expected_breakdown(n),
        None => nonzero == 3,
    };
    ("count-theorem", ok, detail)
}

/// Every full-support constant, paired with `ξ_θ`, generates the nonzero
/// collapse under addition alone, and nothing lies strictly between the
/// collapse and the universal relation.
fn constant_collapse(algebra: &NearSemiringTable) -> (bool, String) {
    let mode = CompatibilityMode::PlusOnly;
    let collapse = nonzero_collapse(algebra, mode);
    let n = algebra.n();
    let mut bad = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            let Some(f) = algebra.index_of_form(&CanonicalForm::Const { p, q }) else {
                bad.push(format!("ξ({p},{q}) missing"));
                continue;
            };
            if congruence_closure(algebra, &[(f, algebra.xi_theta_idx())], mode) != collapse {
                bad.push(algebra.name(f).to_string());
            }
        }
    }
    let above = congruences_above(algebra, &collapse);
    let interval_ok = above.len() == 2 && above[0].is_universal() && above[1] == collapse;
    let ok = bad.is_empty() && interval_ok;
    let detail = if ok {
        format!("{} constants collapse; {} congruences at or above the collapse", n * n, above.len())
    } else {
        format!("failing constants: [{}]; {} congruences above", bad.join(", "), above.len())
    };
    (ok, detail)
}

fn annihilator_c(algebra: &NearSemiringTable) -> Result<(bool, String)> {
    let c = build_c(algebra)?;
    let all: Vec<usize> = (0..c.size()).collect();
    let zero_only = vec![algebra.zero_idx()];
    let everything: BTreeSet<usize> = all.iter().copied().collect();
    let orbits = all
        .iter()
        .filter(|&&g| g != c.zero())
        .all(|&g| c.orbit(g) == everything);
    let zero_orbit = c.orbit(c.zero()) == BTreeSet::from([c.zero()]);
    let ann_g = all
        .iter()
        .filter(|&&g| g != c.zero())
        .all(|&g| c.annihilator(g).annihilator == zero_only);
    let ann_c = c.annihilator_of_set(&all).annihilator == zero_only && c.annihilator_of_set_direct(&all) == zero_only;
    let subs = c.n_subsemigroups()?;
    let subs_ok = subs == vec![BTreeSet::from([c.zero()]), everything];
    Ok((
        orbits && zero_orbit && ann_g && ann_c && subs_ok,
        format!(
            "|C| = {}; gN = C: {orbits}; 0N = {{0}}: {zero_orbit}; A(g) = {{0}}: {ann_g}; A(C) = {{0}}: {ann_c}; \
             {} N-subsemigroups",
            c.size(),
            subs.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::build_nsr;

    #[test]
    fn verify_small() {
        for n in [1, 2] {
            let nsr = build_nsr(n).unwrap();
            let report = verify(&nsr).unwrap();
            for c in &report.checks {
                assert!(c.passed, "n={n} {}: {}", c.id, c.detail);
            }
        }
    }
}
