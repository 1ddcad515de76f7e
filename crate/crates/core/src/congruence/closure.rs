use std::cmp::Ordering;

use super::mode::CompatibilityMode;
use crate::table::NearSemiringTable;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
        }
    }

    fn from_congruence(c: &Congruence) -> Self {
        let mut size = vec![0; c.rep.len()];
        for &r in &c.rep {
            size[r as usize] += 1;
        }
        UnionFind {
            parent: c.rep.clone(),
            size,
        }
    }

    #[inline]
    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns `true` when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        true
    }
}

/// An equivalence on the element indices of an algebra, canonically encoded
/// by mapping every index to the least index of its class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    rep: Vec<u32>,
    classes: usize,
    mode: CompatibilityMode,
}

impl Congruence {
    /// Canonicalizes an arbitrary class labelling.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L], mode: CompatibilityMode) -> Self {
        let mut first: std::collections::HashMap<L, u32> = std::collections::HashMap::new();
        let rep: Vec<u32> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(*l).or_insert(i as u32))
            .collect();
        let classes = first.len();
        Congruence { rep, classes, mode }
    }

    fn from_union_find(mut uf: UnionFind, mode: CompatibilityMode) -> Self {
        let roots: Vec<u32> = (0..uf.parent.len() as u32).map(|x| uf.find(x)).collect();
        Congruence::from_labels(&roots, mode)
    }

    pub fn equality(size: usize, mode: CompatibilityMode) -> Self {
        Congruence {
            rep: (0..size as u32).collect(),
            classes: size,
            mode,
        }
    }

    pub fn universal(size: usize, mode: CompatibilityMode) -> Self {
        Congruence {
            rep: vec![0; size],
            classes: usize::from(size > 0),
            mode,
        }
    }

    pub fn mode(&self) -> CompatibilityMode {
        self.mode
    }

    /// Same partition, relabelled with another mode.
    pub fn with_mode(mut self, mode: CompatibilityMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn size(&self) -> usize {
        self.rep.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn is_equality(&self) -> bool {
        self.classes == self.rep.len()
    }

    pub fn is_universal(&self) -> bool {
        self.classes <= 1
    }

    /// Least member of the class of `x`.
    pub fn representative(&self, x: usize) -> usize {
        self.rep[x] as usize
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    /// The canonical least-member array.
    pub fn encoding(&self) -> &[u32] {
        &self.rep
    }

    /// Classes in order of their least member, members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut slot = vec![usize::MAX; self.rep.len()];
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(self.classes);
        for (x, &r) in self.rep.iter().enumerate() {
            let r = r as usize;
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }

    /// The class of `x`.
    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let r = self.rep[x];
        (0..self.rep.len()).filter(|&y| self.rep[y] == r).collect()
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.rep
            .iter()
            .enumerate()
            .all(|(x, &r)| other.rep[x] == other.rep[r as usize])
    }

    /// A spanning set of pairs: every non-least member with its class's
    /// least member.
    pub fn spanning_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rep
            .iter()
            .enumerate()
            .filter(|&(x, &r)| x != r as usize)
            .map(|(x, &r)| (x, r as usize))
    }
}

impl PartialOrd for Congruence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Report order: fewer classes first, then the canonical encoding.
impl Ord for Congruence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.classes
            .cmp(&other.classes)
            .then_with(|| self.rep.cmp(&other.rep))
            .then_with(|| self.mode.cmp(&other.mode))
    }
}

/// The least congruence of `mode` containing `pairs`.
///
/// Union-find with a merge worklist: each pair that joins two classes
/// enqueues its translates under the mode, until nothing new merges.
pub fn congruence_closure(
    algebra: &NearSemiringTable,
    pairs: &[(usize, usize)],
    mode: CompatibilityMode,
) -> Congruence {
    run_closure(algebra, UnionFind::new(algebra.size()), pairs.iter().copied(), mode)
}

/// The least congruence of `base`'s mode containing `base` and `pairs`.
/// `base` must already be closed.
pub fn extend_congruence(
    algebra: &NearSemiringTable,
    base: &Congruence,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Congruence {
    run_closure(algebra, UnionFind::from_congruence(base), pairs, base.mode)
}

/// The join of two congruences of the same mode.
pub fn join(algebra: &NearSemiringTable, a: &Congruence, b: &Congruence) -> Congruence {
    debug_assert_eq!(a.mode, b.mode);
    extend_congruence(algebra, a, b.spanning_pairs())
}

fn run_closure(
    algebra: &NearSemiringTable,
    mut uf: UnionFind,
    pairs: impl IntoIterator<Item = (usize, usize)>,
    mode: CompatibilityMode,
) -> Congruence {
    let strategy = mode.strategy();
    let mut pending: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (a as u32, b as u32)).collect();
    while let Some((a, b)) = pending.pop() {
        if uf.union(a, b) {
            strategy.translates(algebra, a as usize, b as usize, &mut pending);
        }
    }
    Congruence::from_union_find(uf, mode)
}

/// The class of the adjoined zero.
pub fn kernel(c: &Congruence, algebra: &NearSemiringTable) -> Vec<usize> {
    c.class_of(algebra.zero_idx())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_merges() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 4));
        let c = Congruence::from_union_find(uf, CompatibilityMode::PlusOnly);
        assert_eq!(c.encoding(), &[0, 1, 2, 0, 0]);
        assert_eq!(c.class_count(), 3);
        assert_eq!(c.blocks(), vec![vec![0, 3, 4], vec![1], vec![2]]);
        assert_eq!(c.spanning_pairs().collect::<Vec<_>>(), vec![(3, 0), (4, 0)]);
    }

    #[test]
    fn canonical_labels() {
        let c = Congruence::from_labels(&['b', 'a', 'b', 'c'], CompatibilityMode::TwoSided);
        assert_eq!(c.encoding(), &[0, 1, 0, 3]);
        let eq = Congruence::equality(4, CompatibilityMode::TwoSided);
        let all = Congruence::universal(4, CompatibilityMode::TwoSided);
        assert!(eq.refines(&c) && c.refines(&all) && !all.refines(&c));
        assert!(eq.is_equality() && all.is_universal());
        let mut sorted = vec![eq.clone(), c.clone(), all.clone()];
        sorted.sort();
        assert_eq!(sorted, vec![all, c, eq]);
    }
}
