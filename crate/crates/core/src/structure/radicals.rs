//! Radical values of `N` with the computational premises they rest on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::action::{build_c, has_left_identity, LeftIdentity};
use crate::congruence::{kernel, kernel_set, nonzero_collapse, Congruence, CompatibilityMode};
use crate::error::{NsrError, Result};
use crate::table::NearSemiringTable;

/// The `(ν, µ)` pairs indexing the `J` radicals.
pub const J_PAIRS: [(u8, u8); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 0),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 0),
    (2, 1),
];

pub const R_NAMES: [&str; 4] = ["R0", "R1", "R2", "R3"];

/// Containment arrows between radicals of a zero-symmetric near-semiring,
/// `(a, b)` meaning `a ⊆ b`.
pub const CONTAINMENTS: [(&str, &str); 18] = [
    ("J(2,0)", "J(2,1)"),
    ("J(1,0)", "J(1,1)"),
    ("J(1,0)", "J(2,0)"),
    ("J(1,1)", "J(2,1)"),
    ("J(1,1)", "J(1,3)"),
    ("J(1,2)", "J(1,3)"),
    ("J(0,0)", "J(0,1)"),
    ("J(0,0)", "J(1,0)"),
    ("J(0,0)", "R1"),
    ("J(0,1)", "J(1,1)"),
    ("J(0,1)", "J(0,3)"),
    ("J(0,2)", "J(0,3)"),
    ("J(0,2)", "J(1,2)"),
    ("J(0,3)", "J(1,3)"),
    ("R0", "R1"),
    ("R1", "R3"),
    ("R1", "J(1,1)"),
    ("R2", "R3"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RadicalValue {
    #[serde(rename = "{0}")]
    Zero,
    #[serde(rename = "N")]
    Whole,
}

impl fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadicalValue::Zero => "{0}",
            RadicalValue::Whole => "N",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub claim: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalEntry {
    pub name: String,
    pub value: RadicalValue,
    /// Indices into [`RadicalReport::premises`].
    pub premises: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub n: usize,
    pub entries: Vec<RadicalEntry>,
    pub premises: Vec<Premise>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct RadicalReportJson<'a> {
    pub n: usize,
    #[serde(rename = "J")]
    pub j: BTreeMap<String, RadicalValue>,
    #[serde(rename = "R")]
    pub r: BTreeMap<String, RadicalValue>,
    pub premises: &'a [Premise],
    pub entries: &'a [RadicalEntry],
    pub notes: &'a [String],
}

impl RadicalReport {
    pub fn value(&self, name: &str) -> Option<RadicalValue> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.value)
    }

    pub fn json(&self) -> RadicalReportJson<'_> {
        let mut j = BTreeMap::new();
        let mut r = BTreeMap::new();
        for e in &self.entries {
            match e.name.strip_prefix('J') {
                Some(pair) => j.insert(pair.to_string(), e.value),
                None => r.insert(e.name.clone(), e.value),
            };
        }
        RadicalReportJson {
            n: self.n,
            j,
            r,
            premises: &self.premises,
            entries: &self.entries,
            notes: &self.notes,
        }
    }
}

pub fn j_name((nu, mu): (u8, u8)) -> String {
    format!("J({nu},{mu})")
}

/// Some `u` with `(ux, x) ∈ c` for every `x`, least index first. This is the
/// operational modularity test used for right ideals given as kernels.
pub fn modularity_witness(c: &Congruence, algebra: &NearSemiringTable) -> Option<usize> {
    let size = algebra.size();
    (0..size).find(|&u| (0..size).all(|x| c.related(algebra.mul(u, x), x)))
}

/// Whether every arrow of [`CONTAINMENTS`] holds for `values`; on failure,
/// the first violated arrow.
pub fn containment_violation(values: &BTreeMap<String, RadicalValue>) -> Option<(String, String)> {
    CONTAINMENTS.iter().find_map(|&(a, b)| match (values.get(a), values.get(b)) {
        (Some(x), Some(y)) if x <= y => None,
        _ => Some((a.to_string(), b.to_string())),
    })
}

struct Premises<'a> {
    algebra: &'a NearSemiringTable,
    list: Vec<Premise>,
}

impl Premises<'_> {
    fn push(&mut self, claim: &str, holds: bool, witness: Option<String>) -> usize {
        self.list.push(Premise {
            claim: claim.to_string(),
            holds,
            witness,
        });
        self.list.len() - 1
    }

    /// Renders a set of element indices, with all of `N` shown as `N`.
    fn names(&self, set: &[usize]) -> String {
        if set.len() == self.algebra.size() {
            return "N".to_string();
        }
        let inner: Vec<&str> = set.iter().map(|&x| self.algebra.name(x)).collect();
        format!("{{{}}}", inner.join(", "))
    }
}

/// Computes every premise and, if all hold, the radical values.
///
/// Fails with [`NsrError::PremiseFailed`] naming the first broken premise;
/// no value is returned alongside a failed check.
pub fn radical_report(algebra: &NearSemiringTable) -> Result<RadicalReport> {
    let report = radical_premises(algebra)?;
    for entry in &report.entries {
        for &p in &entry.premises {
            let premise = &report.premises[p];
            if !premise.holds {
                return Err(NsrError::PremiseFailed {
                    theorem: format!("{} = {}", entry.name, entry.value),
                    claim: premise.claim.clone(),
                });
            }
        }
    }
    let values: BTreeMap<String, RadicalValue> =
        report.entries.iter().map(|e| (e.name.clone(), e.value)).collect();
    if let Some((a, b)) = containment_violation(&values) {
        return Err(NsrError::PremiseFailed {
            theorem: "radical containments".to_string(),
            claim: format!("{a} ⊆ {b}"),
        });
    }
    Ok(report)
}

/// The report with every premise evaluated, whether or not it holds.
pub fn radical_premises(algebra: &NearSemiringTable) -> Result<RadicalReport> {
    let c = build_c(algebra)?;
    let mut ps = Premises {
        algebra,
        list: Vec::new(),
    };
    let zero_only = vec![algebra.zero_idx()];
    let everything: Vec<usize> = (0..algebra.size()).collect();

    let mono = c.strong_monogenicity();
    let p_mono = ps.push(
        "C is strongly monogenic: gN = C for every nonzero g in C, and 0N = {0}",
        mono.holds,
        mono.witness.map(|g| format!("generator {}", c.name(g))),
    );

    let bad_annihilator = (0..c.size())
        .filter(|&g| g != c.zero())
        .find(|&g| c.annihilator(g).annihilator != zero_only);
    let p_ann_g = ps.push(
        "A(g) = {0} for every nonzero g in C",
        bad_annihilator.is_none(),
        bad_annihilator.map(|g| {
            format!("A({}) = {}", c.name(g), ps.names(&c.annihilator(g).annihilator))
        }),
    );

    let all_c: Vec<usize> = (0..c.size()).collect();
    let intersected = c.annihilator_of_set(&all_c).annihilator;
    let direct = c.annihilator_of_set_direct(&all_c);
    let p_ann_c = ps.push(
        "A(C) = {0}, computed as an intersection and directly",
        intersected == zero_only && direct == zero_only,
        Some(format!("A(C) = {}", ps.names(&direct))),
    );

    let subs = c.n_subsemigroups()?;
    let expected: Vec<BTreeSet<usize>> = vec![BTreeSet::from([c.zero()]), all_c.iter().copied().collect()];
    let p_subs = ps.push(
        "the N-subsemigroups of C are exactly {0} and C",
        subs == expected,
        Some(format!("{} N-subsemigroups", subs.len())),
    );

    let kernels = kernel_set(algebra, CompatibilityMode::RightAction);
    let kernel_names: Vec<String> = kernels.iter().map(|k| ps.names(k)).collect();
    let p_kernels = ps.push(
        "the right ideals of N (kernels of congruences of N⁺) are exactly {0} and N",
        kernels == vec![zero_only.clone(), everything.clone()],
        Some(kernel_names.join("; ")),
    );

    let collapse = nonzero_collapse(algebra, CompatibilityMode::RightAction);
    let compatible = CompatibilityMode::RightAction
        .strategy()
        .is_compatible(algebra, collapse.encoding());
    let u = modularity_witness(&collapse, algebra);
    let p_modular = ps.push(
        "(A⁺ × A⁺) ∪ {(0,0)} is a congruence of N⁺ with kernel {0} and some u has (ux, x) in it for all x \
         [operational modularity surrogate]",
        compatible && kernel(&collapse, algebra) == zero_only && u.is_some(),
        u.map(|u| format!("u = {}", algebra.name(u))),
    );

    let left = has_left_identity(algebra);
    let p_left = ps.push(
        "N has no left identity",
        !left.exists(),
        Some(match &left {
            LeftIdentity::Found(u) => format!("{} is a left identity", algebra.name(*u)),
            LeftIdentity::Absent { counterexamples } => {
                let shown: Vec<String> = counterexamples
                    .iter()
                    .take(3)
                    .map(|&(u, x)| format!("{}·{} ≠ {}", algebra.name(u), algebra.name(x), algebra.name(x)))
                    .collect();
                format!("{} of {} candidates refuted, e.g. {}", counterexamples.len(), algebra.size(), shown.join(", "))
            }
        }),
    );

    let equality = Congruence::equality(algebra.size(), CompatibilityMode::PlusOnly);
    let eq_witness = modularity_witness(&equality, algebra);
    let p_lambda = ps.push(
        "the identity morphism λ_{0} (from the equality congruence on (N, +)) admits no u with ux = x for all x \
         [operational λ-modularity surrogate, Δ = {0} only]",
        eq_witness.is_none(),
        eq_witness.map(|u| format!("u = {}", algebra.name(u))),
    );

    let j_premises = vec![p_mono, p_ann_g, p_ann_c, p_subs, p_kernels];
    let mut entries: Vec<RadicalEntry> = J_PAIRS
        .iter()
        .map(|&pair| RadicalEntry {
            name: j_name(pair),
            value: RadicalValue::Zero,
            premises: j_premises.clone(),
        })
        .collect();
    for (i, name) in R_NAMES.iter().enumerate() {
        let (value, premises) = if i < 2 {
            (RadicalValue::Zero, vec![p_kernels, p_modular])
        } else {
            (RadicalValue::Whole, vec![p_left, p_lambda])
        };
        entries.push(RadicalEntry {
            name: name.to_string(),
            value,
            premises,
        });
    }

    Ok(RadicalReport {
        n: algebra.n(),
        entries,
        premises: ps.list,
        notes: vec![
            "Each J value is an intersection of annihilators that includes A(C) = {0}; that C has every \
             type (ν,µ) is taken from the cited type judgments and is not re-derived here."
                .to_string(),
            "Modularity and λ-modularity are checked operationally as the existence of u with ux related to x \
             for all x; these are surrogates, not the cited definitions."
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::build_nsr;

    #[test]
    fn modularity_witnesses() {
        let nsr = build_nsr(2).unwrap();
        let all = Congruence::universal(nsr.size(), CompatibilityMode::RightAction);
        assert_eq!(modularity_witness(&all, &nsr), Some(0));
        let eq = Congruence::equality(nsr.size(), CompatibilityMode::RightAction);
        assert_eq!(modularity_witness(&eq, &nsr), None);
        let collapse = nonzero_collapse(&nsr, CompatibilityMode::RightAction);
        assert_eq!(modularity_witness(&collapse, &nsr), Some(nsr.xi_theta_idx()));
    }

    #[test]
    fn report_for_two() {
        let nsr = build_nsr(2).unwrap();
        let report = radical_report(&nsr).unwrap();
        assert!(report.premises.iter().all(|p| p.holds));
        for pair in J_PAIRS {
            assert_eq!(report.value(&j_name(pair)), Some(RadicalValue::Zero));
        }
        assert_eq!(report.value("R0"), Some(RadicalValue::Zero));
        assert_eq!(report.value("R1"), Some(RadicalValue::Zero));
        assert_eq!(report.value("R2"), Some(RadicalValue::Whole));
        assert_eq!(report.value("R3"), Some(RadicalValue::Whole));
        let ann_c = report
            .premises
            .iter()
            .position(|p| p.claim.starts_with("A(C)"))
            .unwrap();
        assert!(report
            .entries
            .iter()
            .filter(|e| e.name.starts_with('J'))
            .all(|e| e.premises.contains(&ann_c)));
        let json = serde_json::to_value(report.json()).unwrap();
        assert_eq!(json["J"]["(0,0)"], "{0}");
        assert_eq!(json["R"]["R2"], "N");
    }

    #[test]
    fn containment_check_detects_violation() {
        let mut values: BTreeMap<String, RadicalValue> = J_PAIRS
            .iter()
            .map(|&p| (j_name(p), RadicalValue::Zero))
            .chain(R_NAMES.iter().map(|r| (r.to_string(), RadicalValue::Zero)))
            .collect();
        assert_eq!(containment_violation(&values), None);
        values.insert("R0".into(), RadicalValue::Whole);
        assert_eq!(containment_violation(&values), Some(("R0".into(), "R1".into())));
    }
}
