//! `N`-semigroups, annihilators and the radicals of `N`.

mod action;
mod radicals;

pub use action::{
    build_c, has_left_identity, left_identity_in, ActionStructure, AnnihilatorResult, LeftIdentity, Monogenicity,
    SUBSEMIGROUP_LIMIT,
};
pub use radicals::{
    containment_violation, j_name, modularity_witness, radical_premises, radical_report, Premise, RadicalEntry,
    RadicalReport, RadicalReportJson, RadicalValue, CONTAINMENTS, J_PAIRS, R_NAMES,
};
