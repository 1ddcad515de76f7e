//! `N`-semigroups given by explicit tables, and the predicates evaluated on
//! them: annihilators, strong monogenicity, `N`-subsemigroups.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{NsrError, Result};
use crate::table::{CayleyTable, NearSemiringTable};

/// Largest carrier for which `N`-subsemigroups are enumerated.
pub const SUBSEMIGROUP_LIMIT: usize = 512;

/// A semigroup `(S, +)` with identity `0_S`, acted on by `N` from the right.
#[derive(Clone, Debug)]
pub struct ActionStructure {
    names: Vec<String>,
    zero: usize,
    plus: CayleyTable,
    /// `act[s * |N| + a] = sa`, as a carrier index.
    act: Vec<u32>,
    algebra_size: usize,
}

impl ActionStructure {
    /// Builds and validates an action from raw tables.
    pub fn new(
        algebra: &NearSemiringTable,
        names: Vec<String>,
        zero: usize,
        plus: CayleyTable,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let size = names.len();
        if plus.size() != size || zero >= size {
            return Err(NsrError::invariant("carrier tables do not match the carrier"));
        }
        let algebra_size = algebra.size();
        let mut table = Vec::with_capacity(size * algebra_size);
        for s in 0..size {
            for a in 0..algebra_size {
                let v = act(s, a);
                if v >= size {
                    return Err(NsrError::invariant(format!(
                        "{} acted on by {} leaves the carrier",
                        names[s],
                        algebra.name(a)
                    )));
                }
                table.push(v as u32);
            }
        }
        let out = ActionStructure {
            names,
            zero,
            plus,
            act: table,
            algebra_size,
        };
        out.check_axioms(algebra)?;
        Ok(out)
    }

    /// The action with carrier `{0}`.
    pub fn trivial(algebra: &NearSemiringTable) -> Result<Self> {
        ActionStructure::new(
            algebra,
            vec!["0".to_string()],
            0,
            CayleyTable::from_fn(1, |_, _| 0),
            |_, _| 0,
        )
    }

    /// `N⁺`: `N` acting on its own additive monoid by right multiplication.
    pub fn regular(algebra: &NearSemiringTable) -> Result<Self> {
        ActionStructure::new(
            algebra,
            algebra.names().to_vec(),
            algebra.zero_idx(),
            algebra.add_table().clone(),
            |s, a| algebra.mul(s, a),
        )
    }

    /// `s(a + b) = sa + sb`, `s(ab) = (sa)b`, `s0 = 0_S`, and `0_S` is an
    /// identity of the associative carrier addition.
    fn check_axioms(&self, algebra: &NearSemiringTable) -> Result<()> {
        let carrier = self.size();
        if let Some((a, b, c)) = self.plus.associativity_failure() {
            return Err(NsrError::invariant(format!(
                "carrier addition is not associative at ({}, {}, {})",
                self.names[a], self.names[b], self.names[c]
            )));
        }
        for s in 0..carrier {
            if self.plus.get(self.zero, s) != s || self.plus.get(s, self.zero) != s {
                return Err(NsrError::invariant(format!(
                    "0_S is not an identity for {}",
                    self.names[s]
                )));
            }
            if self.act(s, algebra.zero_idx()) != self.zero {
                return Err(NsrError::invariant(format!("{} · 0 is not 0_S", self.names[s])));
            }
            for a in 0..self.algebra_size {
                let sa = self.act(s, a);
                for b in 0..self.algebra_size {
                    if self.act(s, algebra.add(a, b)) != self.plus.get(sa, self.act(s, b)) {
                        return Err(NsrError::invariant(format!(
                            "s(a + b) != sa + sb at s = {}, a = {}, b = {}",
                            self.names[s],
                            algebra.name(a),
                            algebra.name(b)
                        )));
                    }
                    if self.act(s, algebra.mul(a, b)) != self.act(sa, b) {
                        return Err(NsrError::invariant(format!(
                            "s(ab) != (sa)b at s = {}, a = {}, b = {}",
                            self.names[s],
                            algebra.name(a),
                            algebra.name(b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn plus(&self, s: usize, t: usize) -> usize {
        self.plus.get(s, t)
    }

    #[inline]
    pub fn act(&self, s: usize, a: usize) -> usize {
        self.act[s * self.algebra_size + a] as usize
    }

    /// `sN` as a sorted set of carrier indices.
    pub fn orbit(&self, s: usize) -> BTreeSet<usize> {
        (0..self.algebra_size).map(|a| self.act(s, a)).collect()
    }

    /// `A(s) = { a ∈ N : sa = 0_S }`.
    pub fn annihilator(&self, s: usize) -> AnnihilatorResult {
        let annihilator = (0..self.algebra_size)
            .filter(|&a| self.act(s, a) == self.zero)
            .collect();
        AnnihilatorResult {
            subject: vec![s],
            annihilator,
        }
    }

    /// `A(T) = ⋂_{s ∈ T} A(s)`, as an intersection of the per-element sets.
    pub fn annihilator_of_set(&self, subset: &[usize]) -> AnnihilatorResult {
        let mut acc: BTreeSet<usize> = (0..self.algebra_size).collect();
        for &s in subset {
            let own: BTreeSet<usize> = self.annihilator(s).annihilator.into_iter().collect();
            acc = acc.intersection(&own).copied().collect();
        }
        AnnihilatorResult {
            subject: subset.to_vec(),
            annihilator: acc.into_iter().collect(),
        }
    }

    /// `A(T) = { a ∈ N : Ta = 0_S }`, read off directly.
    pub fn annihilator_of_set_direct(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.algebra_size)
            .filter(|&a| subset.iter().all(|&s| self.act(s, a) == self.zero))
            .collect()
    }

    /// Strongly monogenic: some nonzero element exists, every nonzero `g`
    /// has `gN = S`, and `0N = {0}`. The witness is a nonzero generator,
    /// preferring one that is not additively absorbing in `S`.
    pub fn strong_monogenicity(&self) -> Monogenicity {
        let carrier = self.size();
        let zero_orbit_trivial = self.orbit(self.zero).into_iter().eq([self.zero]);
        let nonzero: Vec<usize> = (0..carrier).filter(|&s| s != self.zero).collect();
        let failing: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&g| self.orbit(g).len() != carrier)
            .collect();
        let absorbing = |g: usize| {
            nonzero
                .iter()
                .all(|&s| self.plus(g, s) == g && self.plus(s, g) == g)
        };
        let generators: Vec<usize> = nonzero.iter().copied().filter(|g| !failing.contains(g)).collect();
        let witness = generators
            .iter()
            .copied()
            .find(|&g| !absorbing(g))
            .or_else(|| generators.first().copied());
        Monogenicity {
            holds: !nonzero.is_empty() && failing.is_empty() && zero_orbit_trivial,
            witness,
            non_generators: failing,
            zero_orbit_trivial,
        }
    }

    /// Every `T ⊆ S` with `0_S ∈ T`, `T + T ⊆ T` and `TN ⊆ T`, sorted.
    ///
    /// Grows closed sets from `{0_S}` one element at a time; every closed
    /// set is the closure of its members, so all are reached.
    pub fn n_subsemigroups(&self) -> Result<Vec<BTreeSet<usize>>> {
        if self.size() > SUBSEMIGROUP_LIMIT {
            return Err(NsrError::CarrierTooLarge {
                size: self.size(),
                limit: SUBSEMIGROUP_LIMIT,
            });
        }
        let start = self.closure(&BTreeSet::from([self.zero]));
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for x in 0..self.size() {
                if t.contains(&x) {
                    continue;
                }
                let mut grown = t.clone();
                grown.insert(x);
                let closed = self.closure(&grown);
                if seen.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Least `N`-subsemigroup containing `set`.
    fn closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut member = vec![false; self.size()];
        let mut members: Vec<usize> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let admit = |x: usize, member: &mut Vec<bool>, members: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
            if !member[x] {
                member[x] = true;
                members.push(x);
                queue.push_back(x);
            }
        };
        for &x in set {
            admit(x, &mut member, &mut members, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            for a in 0..self.algebra_size {
                admit(self.act(x, a), &mut member, &mut members, &mut queue);
            }
            let snapshot = members.clone();
            for y in snapshot {
                admit(self.plus(x, y), &mut member, &mut members, &mut queue);
                admit(self.plus(y, x), &mut member, &mut members, &mut queue);
            }
        }
        members.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorResult {
    pub subject: Vec<usize>,
    pub annihilator: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monogenicity {
    pub holds: bool,
    pub witness: Option<usize>,
    pub non_generators: Vec<usize>,
    pub zero_orbit_trivial: bool,
}

/// The `N`-semigroup `C = C_{B_n} ∪ {0}`: the constant maps with the adjoined
/// zero, under addition and right multiplication inherited from `N`.
pub fn build_c(algebra: &NearSemiringTable) -> Result<ActionStructure> {
    let mut carrier = vec![algebra.zero_idx()];
    carrier.extend(algebra.constants());
    let mut slot = vec![usize::MAX; algebra.size()];
    for (i, &x) in carrier.iter().enumerate() {
        slot[x] = i;
    }
    let locate = |x: usize| slot[x];
    let names = carrier.iter().map(|&x| algebra.name(x).to_string()).collect();
    let mut plus_rows = Vec::with_capacity(carrier.len());
    for &s in &carrier {
        let mut row = Vec::with_capacity(carrier.len());
        for &t in &carrier {
            let v = locate(algebra.add(s, t));
            if v == usize::MAX {
                return Err(NsrError::invariant("constants are not closed under addition"));
            }
            row.push(v);
        }
        plus_rows.push(row);
    }
    let plus = CayleyTable::from_rows(&plus_rows)?;
    ActionStructure::new(algebra, names, 0, plus, |s, a| {
        slot.get(algebra.mul(carrier[s], a)).copied().unwrap_or(usize::MAX)
    })
}

/// Whether some `u` satisfies `ux = x` for every `x`. On failure, every `u`
/// is paired with an `x` it moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeftIdentity {
    Found(usize),
    Absent { counterexamples: Vec<(usize, usize)> },
}

impl LeftIdentity {
    pub fn exists(&self) -> bool {
        matches!(self, LeftIdentity::Found(_))
    }
}

pub fn left_identity_in(mul: &CayleyTable) -> LeftIdentity {
    let size = mul.size();
    let mut counterexamples = Vec::with_capacity(size);
    for u in 0..size {
        match (0..size).find(|&x| mul.get(u, x) != x) {
            None => return LeftIdentity::Found(u),
            Some(x) => counterexamples.push((u, x)),
        }
    }
    LeftIdentity::Absent { counterexamples }
}

pub fn has_left_identity(algebra: &NearSemiringTable) -> LeftIdentity {
    left_identity_in(algebra.mul_table())
}
