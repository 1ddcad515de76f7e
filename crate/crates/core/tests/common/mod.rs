//! Reference computations written directly from the definitions. Nothing
//! here calls into the library except to read its tables back out.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use brandt_nsr::table::{NearSemiringTable, NsrElement};

/// `None` is θ.
pub type Elem = Option<(usize, usize)>;

/// A self-map of `B_n` as images indexed by code: θ is 0, `(i,j)` is
/// `(i-1)n + j`.
pub type Map = Vec<usize>;

pub struct Reference {
    pub n: usize,
    pub elems: Vec<Elem>,
}

impl Reference {
    pub fn new(n: usize) -> Self {
        let mut elems = vec![None];
        for i in 1..=n {
            for j in 1..=n {
                elems.push(Some((i, j)));
            }
        }
        Reference { n, elems }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn code(&self, e: Elem) -> usize {
        match e {
            None => 0,
            Some((i, j)) => (i - 1) * self.n + j,
        }
    }

    pub fn plus(&self, a: usize, b: usize) -> usize {
        match (self.elems[a], self.elems[b]) {
            (Some((i, j)), Some((k, l))) if j == k => self.code(Some((i, l))),
            _ => 0,
        }
    }

    pub fn add_maps(&self, f: &Map, g: &Map) -> Map {
        (0..self.order()).map(|x| self.plus(f[x], g[x])).collect()
    }

    /// Apply `f`, then `g`.
    pub fn compose(&self, f: &Map, g: &Map) -> Map {
        (0..self.order()).map(|x| g[f[x]]).collect()
    }

    pub fn is_hom(&self, f: &Map) -> bool {
        let m = self.order();
        (0..m).all(|a| (0..m).all(|b| f[self.plus(a, b)] == self.plus(f[a], f[b])))
    }

    /// Every homomorphism among the `|B_n|^|B_n|` self-maps, with the number
    /// of maps visited.
    pub fn brute_force_endomorphisms(&self) -> (Vec<Map>, u64) {
        let m = self.order();
        let mut out = Vec::new();
        let mut visited = 0u64;
        let mut f = vec![0usize; m];
        loop {
            visited += 1;
            if self.is_hom(&f) {
                out.push(f.clone());
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == m {
                    out.sort();
                    return (out, visited);
                }
                f[pos] += 1;
                if f[pos] < m {
                    break;
                }
                f[pos] = 0;
                pos += 1;
            }
        }
    }

    /// `{ g + ξ_c : g ∈ endos, c ∈ B_n }`.
    pub fn affine(&self, endos: &[Map]) -> BTreeSet<Map> {
        let mut out = BTreeSet::new();
        for g in endos {
            for c in 0..self.order() {
                out.insert((0..self.order()).map(|x| self.plus(g[x], c)).collect());
            }
        }
        out
    }

    /// Closure of `gens` under pointwise addition.
    pub fn additive_closure(&self, gens: &BTreeSet<Map>) -> BTreeSet<Map> {
        let mut seen: BTreeSet<Map> = gens.clone();
        let mut queue: VecDeque<Map> = gens.iter().cloned().collect();
        while let Some(f) = queue.pop_front() {
            let current: Vec<Map> = seen.iter().cloned().collect();
            for g in current {
                for h in [self.add_maps(&f, &g), self.add_maps(&g, &f)] {
                    if seen.insert(h.clone()) {
                        queue.push_back(h);
                    }
                }
            }
        }
        seen
    }

    pub fn support(&self, f: &Map) -> usize {
        f.iter().filter(|&&y| y != 0).count()
    }

    /// `(constants, singletons, n-support)` by support size.
    pub fn breakdown(&self, maps: &BTreeSet<Map>) -> (usize, usize, usize) {
        let full = self.order();
        let mut out = (0, 0, 0);
        for f in maps {
            match self.support(f) {
                0 => out.0 += 1,
                s if s == full => out.0 += 1,
                1 => out.1 += 1,
                s if s == self.n => out.2 += 1,
                _ => {}
            }
        }
        out
    }
}

/// The nonzero elements of the library's algebra as reference maps.
pub fn library_maps(algebra: &NearSemiringTable) -> BTreeSet<Map> {
    algebra
        .elements()
        .iter()
        .filter_map(|e| match e {
            NsrElement::Zero => None,
            NsrElement::Map(m) => Some(m.entries().iter().map(|&c| c as usize).collect()),
        })
        .collect()
}

/// All set partitions of `0..size` as block-label vectors, built by placing
/// each element in an existing block or a new one.
pub fn partitions(size: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..size {
        let mut next = Vec::new();
        for p in out {
            let blocks = p.iter().max().map_or(0, |&m| m + 1);
            for b in 0..=blocks {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Copy, Debug)]
pub struct Stability {
    pub right_mul: bool,
    pub left_mul: bool,
}

/// Checks stability of the partition `labels` on the algebra's tables.
pub fn stable(algebra: &NearSemiringTable, labels: &[usize], s: Stability) -> bool {
    let size = algebra.size();
    let same = |x: usize, y: usize| labels[x] == labels[y];
    for a in 0..size {
        for b in 0..size {
            if a == b || !same(a, b) {
                continue;
            }
            for c in 0..size {
                if !same(algebra.add(a, c), algebra.add(b, c)) || !same(algebra.add(c, a), algebra.add(c, b)) {
                    return false;
                }
                if s.right_mul && !same(algebra.mul(a, c), algebra.mul(b, c)) {
                    return false;
                }
                if s.left_mul && !same(algebra.mul(c, a), algebra.mul(c, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least-member encoding of a labelling, for comparison with the library.
pub fn least_members(labels: &[usize]) -> Vec<u32> {
    labels
        .iter()
        .map(|l| labels.iter().position(|m| m == l).unwrap() as u32)
        .collect()
}
