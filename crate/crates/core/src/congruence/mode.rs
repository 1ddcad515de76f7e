//! Compatibility modes as interchangeable strategies.
//!
//! Each mode decides which translates of a related pair `(a, b)` must also be
//! related. Modes are registered by name so callers (the CLI in particular)
//! select them at runtime.

use std::fmt;

use serde::Serialize;

use crate::error::{NsrError, Result};
use crate::table::NearSemiringTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompatibilityMode {
    /// Semigroup congruence of `(N, +)`.
    PlusOnly,
    /// Additionally `a ~ b => ac ~ bc`: congruences of the `N`-semigroup `N⁺`.
    RightAction,
    /// Additionally `a ~ b => ca ~ cb`: near-semiring congruences.
    TwoSided,
}

impl CompatibilityMode {
    pub const ALL: [CompatibilityMode; 3] = [
        CompatibilityMode::PlusOnly,
        CompatibilityMode::RightAction,
        CompatibilityMode::TwoSided,
    ];

    pub fn strategy(self) -> &'static dyn Compatibility {
        match self {
            CompatibilityMode::PlusOnly => &PlusOnly,
            CompatibilityMode::RightAction => &RightAction,
            CompatibilityMode::TwoSided => &TwoSided,
        }
    }

    pub fn name(self) -> &'static str {
        self.strategy().name()
    }
}

impl fmt::Display for CompatibilityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CompatibilityMode {
    type Err = NsrError;

    fn from_str(s: &str) -> Result<Self> {
        lookup(s).map(|c| c.mode())
    }
}

/// One family of unary translations `x -> t(x)` indexed by `c ∈ N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Translation {
    /// `x -> x + c`
    AddRight,
    /// `x -> c + x`
    AddLeft,
    /// `x -> xc`
    MulRight,
    /// `x -> cx`
    MulLeft,
}

impl Translation {
    #[inline]
    fn apply(self, algebra: &NearSemiringTable, x: usize, c: usize) -> usize {
        match self {
            Translation::AddRight => algebra.add(x, c),
            Translation::AddLeft => algebra.add(c, x),
            Translation::MulRight => algebra.mul(x, c),
            Translation::MulLeft => algebra.mul(c, x),
        }
    }

    /// Translating by a generating set of the relevant semigroup is enough:
    /// `x + (c + d) = (x + c) + d`, `x(cd) = (xc)d`, and mirror images.
    fn generators(self, algebra: &NearSemiringTable) -> &[usize] {
        match self {
            Translation::AddRight | Translation::AddLeft => algebra.additive_generators(),
            Translation::MulRight | Translation::MulLeft => algebra.multiplicative_generators(),
        }
    }
}

/// A compatibility rule for the congruence closure.
pub trait Compatibility: Send + Sync {
    /// Registry key, as accepted by `--mode`.
    fn name(&self) -> &'static str;

    fn mode(&self) -> CompatibilityMode;

    fn description(&self) -> &'static str;

    /// The translation families a congruence of this mode is stable under.
    fn translations(&self) -> &'static [Translation];

    /// Appends the translates `(t(a), t(b))` the closure must relate next,
    /// skipping reflexive ones. Only generator translations are emitted.
    fn translates(&self, algebra: &NearSemiringTable, a: usize, b: usize, out: &mut Vec<(u32, u32)>) {
        for &t in self.translations() {
            for &c in t.generators(algebra) {
                let (s, u) = (t.apply(algebra, a, c), t.apply(algebra, b, c));
                if s != u {
                    out.push((s as u32, u as u32));
                }
            }
        }
    }

    /// Direct check, over every `c ∈ N`, that the partition `rep` (each index
    /// mapped to its class representative) is stable under this mode.
    fn is_compatible(&self, algebra: &NearSemiringTable, rep: &[u32]) -> bool {
        let size = algebra.size();
        (0..size).all(|x| {
            let r = rep[x] as usize;
            self.translations().iter().all(|&t| {
                (0..size).all(|c| rep[t.apply(algebra, x, c)] == rep[t.apply(algebra, r, c)])
            })
        })
    }
}

pub struct PlusOnly;

impl Compatibility for PlusOnly {
    fn name(&self) -> &'static str {
        "plus"
    }

    fn mode(&self) -> CompatibilityMode {
        CompatibilityMode::PlusOnly
    }

    fn description(&self) -> &'static str {
        "congruences of the additive semigroup (N, +)"
    }

    fn translations(&self) -> &'static [Translation] {
        &[Translation::AddRight, Translation::AddLeft]
    }
}

pub struct RightAction;

impl Compatibility for RightAction {
    fn name(&self) -> &'static str {
        "right"
    }

    fn mode(&self) -> CompatibilityMode {
        CompatibilityMode::RightAction
    }

    fn description(&self) -> &'static str {
        "congruences of the N-semigroup N⁺ (additive, stable under right multiplication)"
    }

    fn translations(&self) -> &'static [Translation] {
        &[Translation::AddRight, Translation::AddLeft, Translation::MulRight]
    }
}

pub struct TwoSided;

impl Compatibility for TwoSided {
    fn name(&self) -> &'static str {
        "twosided"
    }

    fn mode(&self) -> CompatibilityMode {
        CompatibilityMode::TwoSided
    }

    fn description(&self) -> &'static str {
        "near-semiring congruences (additive, stable under multiplication on both sides)"
    }

    fn translations(&self) -> &'static [Translation] {
        &[
            Translation::AddRight,
            Translation::AddLeft,
            Translation::MulRight,
            Translation::MulLeft,
        ]
    }
}

static REGISTRY: [&dyn Compatibility; 3] = [&PlusOnly, &RightAction, &TwoSided];

/// Every registered mode, weakest first.
pub fn registry() -> &'static [&'static dyn Compatibility] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static dyn Compatibility> {
    registry()
        .iter()
        .copied()
        .find(|c| c.name() == name)
        .ok_or_else(|| NsrError::UnknownMode(name.to_string()))
}
