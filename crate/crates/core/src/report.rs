//! Serializable reports shared by the CLI and the tests.

use serde::Serialize;

use crate::brandt::Brandt;
use crate::congruence::{kernel, kernel_set, CompatibilityMode, Congruence};
use crate::error::Result;
use crate::generation::{count_formula, endomorphisms, Generation};
use crate::maps::{classify, MapTable};
use crate::structure::build_c;
use crate::table::{Breakdown, NearSemiringTable};

/// Partitions are listed in congruence reports only up to this many elements.
pub const PARTITION_LISTING_LIMIT: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct GenReport {
    pub n: usize,
    /// `|A⁺(B_n)|`.
    pub nonzero: usize,
    /// `|N|`, including the adjoined zero.
    pub total: usize,
    pub formula: Option<u128>,
    pub breakdown: Breakdown,
    /// `|End(B_n)|` and the number of distinct affine maps, when the build
    /// was run rather than loaded from a cache.
    pub endomorphisms: Option<usize>,
    pub affine: Option<usize>,
    pub elements: Vec<String>,
}

impl GenReport {
    pub fn from_generation(g: &Generation) -> Self {
        let mut out = GenReport::from_algebra(&g.algebra);
        out.endomorphisms = Some(g.endomorphisms.len());
        out.affine = Some(g.affine.len());
        out
    }

    pub fn from_algebra(algebra: &NearSemiringTable) -> Self {
        GenReport {
            n: algebra.n(),
            nonzero: algebra.size() - 1,
            total: algebra.size(),
            formula: count_formula(algebra.n() as u32),
            breakdown: algebra.breakdown(),
            endomorphisms: None,
            affine: None,
            elements: algebra.names().to_vec(),
        }
    }
}

/// Predicted sizes only, for `n` too large to build.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaReport {
    pub n: usize,
    pub formula: Option<u128>,
    pub total: Option<u128>,
}

impl FormulaReport {
    pub fn new(n: usize) -> Self {
        let formula = u32::try_from(n).ok().and_then(count_formula);
        FormulaReport {
            n,
            formula,
            total: formula.and_then(|f| f.checked_add(1)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EndoEntry {
    /// Canonical name when the map is in one of the families of `A⁺(B_n)`.
    pub form: Option<String>,
    /// Images of `θ, (1,1), (1,2), ...` in code order.
    pub images: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndosReport {
    pub n: usize,
    pub count: usize,
    pub endomorphisms: Vec<EndoEntry>,
}

impl EndosReport {
    pub fn new(brandt: &Brandt) -> Self {
        EndosReport::from_maps(brandt, &endomorphisms(brandt))
    }

    pub fn from_maps(brandt: &Brandt, maps: &[MapTable]) -> Self {
        let endomorphisms = maps
            .iter()
            .map(|m| EndoEntry {
                form: classify(brandt, m).name(),
                images: m.raw_name(brandt),
            })
            .collect();
        EndosReport {
            n: brandt.n(),
            count: maps.len(),
            endomorphisms,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceEntry {
    pub classes: usize,
    pub kernel: Vec<String>,
    pub is_equality: bool,
    pub is_universal: bool,
    pub partition: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub n: usize,
    pub mode: CompatibilityMode,
    pub count: usize,
    pub congruences: Vec<CongruenceEntry>,
}

impl CongruenceReport {
    pub fn new(algebra: &NearSemiringTable, mode: CompatibilityMode, lattice: &[Congruence]) -> Self {
        let list = algebra.size() <= PARTITION_LISTING_LIMIT;
        let congruences = lattice
            .iter()
            .map(|c| CongruenceEntry {
                classes: c.class_count(),
                kernel: names(algebra, &kernel(c, algebra)),
                is_equality: c.is_equality(),
                is_universal: c.is_universal(),
                partition: list.then(|| c.blocks().iter().map(|b| names(algebra, b)).collect()),
            })
            .collect();
        CongruenceReport {
            n: algebra.n(),
            mode,
            count: lattice.len(),
            congruences,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RightIdealsReport {
    pub n: usize,
    pub count: usize,
    pub right_ideals: Vec<Vec<String>>,
}

impl RightIdealsReport {
    pub fn new(algebra: &NearSemiringTable) -> Self {
        let kernels = kernel_set(algebra, CompatibilityMode::RightAction);
        RightIdealsReport {
            n: algebra.n(),
            count: kernels.len(),
            right_ideals: kernels.iter().map(|k| names(algebra, k)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnihilatorEntry {
    pub subject: String,
    pub annihilator: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnihilatorsReport {
    pub n: usize,
    pub carrier: Vec<String>,
    pub annihilators: Vec<AnnihilatorEntry>,
    /// `A(C)`, computed directly from the subset definition.
    pub annihilator_of_c: Vec<String>,
    pub strongly_monogenic: bool,
    pub witness: Option<String>,
    pub n_subsemigroups: Vec<Vec<String>>,
}

impl AnnihilatorsReport {
    pub fn new(algebra: &NearSemiringTable) -> Result<Self> {
        let c = build_c(algebra)?;
        let all: Vec<usize> = (0..c.size()).collect();
        let annihilators = all
            .iter()
            .map(|&s| AnnihilatorEntry {
                subject: c.name(s).to_string(),
                annihilator: names(algebra, &c.annihilator(s).annihilator),
            })
            .collect();
        let mono = c.strong_monogenicity();
        let subs = c
            .n_subsemigroups()?
            .iter()
            .map(|t| t.iter().map(|&s| c.name(s).to_string()).collect())
            .collect();
        Ok(AnnihilatorsReport {
            n: algebra.n(),
            carrier: c.names().to_vec(),
            annihilators,
            annihilator_of_c: names(algebra, &c.annihilator_of_set_direct(&all)),
            strongly_monogenic: mono.holds,
            witness: mono.witness.map(|g| c.name(g).to_string()),
            n_subsemigroups: subs,
        })
    }
}

pub fn names(algebra: &NearSemiringTable, set: &[usize]) -> Vec<String> {
    set.iter().map(|&x| algebra.name(x).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::congruence_lattice;
    use crate::generation::{build_nsr, generate};

    #[test]
    fn gen_report_three() {
        let report = GenReport::from_generation(&generate(3).unwrap());
        assert_eq!(report.nonzero, 145);
        assert_eq!(report.formula, Some(145));
        assert_eq!(report.endomorphisms, Some(10));
        assert_eq!(report.affine, Some(64));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["breakdown"]["singletons"], 81);
    }

    #[test]
    fn formula_report() {
        let r = FormulaReport::new(5);
        assert_eq!(r.formula, Some(121 * 25 + 625 + 1));
        assert_eq!(FormulaReport::new(1).formula, None);
    }

    #[test]
    fn congruence_report_twosided() {
        let nsr = build_nsr(2).unwrap();
        let lattice = congruence_lattice(&nsr, CompatibilityMode::TwoSided);
        let report = CongruenceReport::new(&nsr, CompatibilityMode::TwoSided, &lattice);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["mode"], "twosided");
        assert_eq!(json["count"], 3);
        assert_eq!(json["congruences"][1]["kernel"], serde_json::json!(["0"]));
        assert_eq!(json["congruences"][1]["partition"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn endos_report_two() {
        let report = EndosReport::new(&Brandt::new(2).unwrap());
        assert_eq!(report.count, 5);
        assert!(report.endomorphisms.iter().any(|e| e.form.as_deref() == Some("c:t")));
    }
}
