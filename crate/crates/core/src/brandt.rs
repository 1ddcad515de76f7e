//! The Brandt semigroup `B_n = ([n] x [n]) ∪ {θ}`.
//!
//! Elements are addressed by a dense code so that every higher layer can work
//! with flat arrays: code `0` is `θ` and the pair `(i, j)` has code
//! `(i - 1) * n + j`.

use std::fmt;

use itertools::Itertools;

use crate::error::{NsrError, Result};

/// Dense element code in `0..=n²`.
pub type Code = u16;

/// Code of the absorbing element `θ`.
pub const THETA: Code = 0;

/// Largest `n` for which tables are materialized. Permutation words are
/// rendered one digit per image, so `n` stays below ten.
pub const MAX_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrandtElement {
    Theta,
    Pair { row: u16, col: u16 },
}

impl BrandtElement {
    pub fn pair(row: usize, col: usize) -> Self {
        BrandtElement::Pair {
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn is_theta(self) -> bool {
        matches!(self, BrandtElement::Theta)
    }
}

impl fmt::Display for BrandtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtElement::Theta => f.write_str("t"),
            BrandtElement::Pair { row, col } => write!(f, "{row},{col}"),
        }
    }
}

/// The Brandt rule: `(i,j) + (k,l) = (i,l)` when `j = k`, and `θ` otherwise.
/// `θ` absorbs from both sides.
pub fn brandt_add(a: BrandtElement, b: BrandtElement) -> BrandtElement {
    match (a, b) {
        (BrandtElement::Pair { row, col: j }, BrandtElement::Pair { row: k, col }) if j == k => {
            BrandtElement::Pair { row, col }
        }
        _ => BrandtElement::Theta,
    }
}

/// Context object for a fixed `n`. Holds the precomputed addition table over
/// codes; every element handed to it is range-checked against `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brandt {
    n: usize,
    add: Vec<Code>,
}

impl Brandt {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(NsrError::InvalidN { got: n, max: MAX_N });
        }
        let order = n * n + 1;
        let mut add = vec![THETA; order * order];
        for i in 1..=n {
            for j in 1..=n {
                for l in 1..=n {
                    let a = pair_code(n, i, j);
                    let b = pair_code(n, j, l);
                    add[a as usize * order + b as usize] = pair_code(n, i, l);
                }
            }
        }
        Ok(Brandt { n, add })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|B_n| = n² + 1`.
    pub fn order(&self) -> usize {
        self.n * self.n + 1
    }

    pub fn pair(&self, row: usize, col: usize) -> Result<BrandtElement> {
        let e = BrandtElement::pair(row, col);
        self.check(e)?;
        Ok(e)
    }

    pub fn contains(&self, e: BrandtElement) -> bool {
        match e {
            BrandtElement::Theta => true,
            BrandtElement::Pair { row, col } => {
                (1..=self.n).contains(&(row as usize)) && (1..=self.n).contains(&(col as usize))
            }
        }
    }

    fn check(&self, e: BrandtElement) -> Result<()> {
        match e {
            BrandtElement::Pair { row, col } if !self.contains(e) => Err(NsrError::PairOutOfRange {
                row: row as usize,
                col: col as usize,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    pub fn encode(&self, e: BrandtElement) -> Result<Code> {
        self.check(e)?;
        Ok(match e {
            BrandtElement::Theta => THETA,
            BrandtElement::Pair { row, col } => pair_code(self.n, row as usize, col as usize),
        })
    }

    pub fn decode(&self, code: usize) -> Result<BrandtElement> {
        if code >= self.order() {
            return Err(NsrError::CodeOutOfRange {
                code,
                n: self.n,
                max: self.order() - 1,
            });
        }
        Ok(self.decode_unchecked(code as Code))
    }

    pub(crate) fn decode_unchecked(&self, code: Code) -> BrandtElement {
        if code == THETA {
            BrandtElement::Theta
        } else {
            let c = code as usize - 1;
            BrandtElement::pair(c / self.n + 1, c % self.n + 1)
        }
    }

    /// Code of `(row, col)`; callers guarantee the range.
    #[inline]
    pub fn code(&self, row: usize, col: usize) -> Code {
        debug_assert!((1..=self.n).contains(&row) && (1..=self.n).contains(&col));
        pair_code(self.n, row, col)
    }

    /// Checked addition of two elements of this `B_n`.
    pub fn add(&self, a: BrandtElement, b: BrandtElement) -> Result<BrandtElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(brandt_add(a, b))
    }

    #[inline]
    pub fn add_codes(&self, a: Code, b: Code) -> Code {
        self.add[a as usize * self.order() + b as usize]
    }

    /// All elements in code order, `θ` first.
    pub fn elements(&self) -> impl Iterator<Item = BrandtElement> + '_ {
        (0..self.order() as Code).map(|c| self.decode_unchecked(c))
    }

    /// The cycle `(1,2), (2,3), ..., (n-1,n), (n,1)`; `{(1,1)}` when `n = 1`.
    pub fn cycle_generators(&self) -> Vec<Code> {
        if self.n == 1 {
            return vec![self.code(1, 1)];
        }
        (1..=self.n)
            .map(|i| self.code(i, i % self.n + 1))
            .collect()
    }

    /// Additive closure of a set of codes, returned sorted.
    pub fn generated_by(&self, gens: &[Code]) -> Vec<Code> {
        let mut seen = vec![false; self.order()];
        let mut members: Vec<Code> = Vec::new();
        for &g in gens {
            if !seen[g as usize] {
                seen[g as usize] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..=i {
                let b = members[j];
                for s in [self.add_codes(a, b), self.add_codes(b, a)] {
                    if !seen[s as usize] {
                        seen[s as usize] = true;
                        members.push(s);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}

#[inline]
fn pair_code(n: usize, row: usize, col: usize) -> Code {
    ((row - 1) * n + col) as Code
}

/// A permutation of `[n]` stored by its 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || hit[i] {
                return Err(NsrError::InvalidPermutation(images));
            }
            hit[i] = true;
        }
        Ok(Permutation(images.into_iter().map(|i| i as u16).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u16).collect())
    }

    /// All of `S_n` in lexicographic order of image words.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n as u16)
            .permutations(n)
            .map(Permutation)
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// The image `iσ` of a 1-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images().enumerate().all(|(k, i)| k + 1 == i)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: usize, j: usize) -> BrandtElement {
        BrandtElement::pair(i, j)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(brandt_add(p(1, 2), p(2, 1)), p(1, 1));
        assert_eq!(brandt_add(p(1, 2), p(1, 3)), BrandtElement::Theta);
        assert_eq!(brandt_add(BrandtElement::Theta, p(2, 2)), BrandtElement::Theta);
    }

    #[test]
    fn encoding_examples() {
        let b2 = Brandt::new(2).unwrap();
        assert_eq!(b2.encode(BrandtElement::Theta).unwrap(), 0);
        assert_eq!(b2.encode(p(1, 2)).unwrap(), 2);
        assert_eq!(b2.decode(b2.encode(p(2, 1)).unwrap() as usize).unwrap(), p(2, 1));
        assert_eq!(b2.decode(0).unwrap(), BrandtElement::Theta);
    }

    #[test]
    fn encoding_is_a_bijection() {
        for n in 1..=4 {
            let b = Brandt::new(n).unwrap();
            let codes: Vec<Code> = b.elements().map(|e| b.encode(e).unwrap()).collect();
            assert_eq!(codes, (0..b.order() as Code).collect::<Vec<_>>());
        }
    }

    #[test]
    fn range_errors() {
        let b2 = Brandt::new(2).unwrap();
        assert!(matches!(b2.decode(5), Err(NsrError::CodeOutOfRange { .. })));
        assert!(matches!(b2.pair(3, 1), Err(NsrError::PairOutOfRange { .. })));
        assert!(matches!(b2.add(p(1, 3), p(3, 1)), Err(NsrError::PairOutOfRange { .. })));
        assert!(matches!(Brandt::new(0), Err(NsrError::InvalidN { .. })));
    }

    #[test]
    fn table_matches_rule_and_is_associative() {
        for n in 1..=4 {
            let b = Brandt::new(n).unwrap();
            let els: Vec<_> = b.elements().collect();
            for &x in &els {
                assert_eq!(brandt_add(x, BrandtElement::Theta), BrandtElement::Theta);
                assert_eq!(brandt_add(BrandtElement::Theta, x), BrandtElement::Theta);
                for &y in &els {
                    let code = b.add_codes(b.encode(x).unwrap(), b.encode(y).unwrap());
                    assert_eq!(b.decode(code as usize).unwrap(), brandt_add(x, y));
                    for &z in &els {
                        assert_eq!(
                            brandt_add(brandt_add(x, y), z),
                            brandt_add(x, brandt_add(y, z))
                        );
                    }
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        assert_eq!(brandt_add(p(i, j), p(j, k)), p(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_generates_everything_from_two_on() {
        for n in 2..=MAX_N {
            let b = Brandt::new(n).unwrap();
            let all: Vec<Code> = (0..b.order() as Code).collect();
            assert_eq!(b.generated_by(&b.cycle_generators()), all, "n = {n}");
        }
        // (1,1) + (1,1) = (1,1): theta is not reachable in B_1.
        let b1 = Brandt::new(1).unwrap();
        assert_eq!(b1.generated_by(&b1.cycle_generators()), vec![1]);
    }

    #[test]
    fn permutations() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(3)[0], Permutation::identity(3));
        let s = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(s.to_string(), "213");
        assert_eq!(s.apply(1), 2);
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }
}
