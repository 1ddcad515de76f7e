//! Computational workbench for the zero-symmetric affine near-semiring
//! `N = A⁺(B_n) ∪ {0}` over the Brandt semigroup `B_n`.

pub mod brandt;
pub mod cache;
pub mod congruence;
pub mod error;
pub mod generation;
pub mod identities;
pub mod maps;
pub mod oracle;
pub mod report;
pub mod structure;
pub mod table;
pub mod verify;

pub use error::{NsrError, Result};
