//! The finished near-semiring `N = A⁺(B_n) ∪ {0}` as explicit Cayley tables.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::brandt::Brandt;
use crate::error::{NsrError, Result};
use crate::maps::{add_unchecked, classify, compose_unchecked, realize, CanonicalForm, MapTable};

/// Name of the adjoined zero in every report.
pub const ZERO_NAME: &str = "0";

/// A dense `size x size` operation table over element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    size: usize,
    data: Vec<u32>,
}

impl CayleyTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(NsrError::invariant(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= size {
                    return Err(NsrError::invariant(format!(
                        "row {i} refers to element {v}, table has {size}"
                    )));
                }
                data.push(v as u32);
            }
        }
        Ok(CayleyTable { size, data })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                data.push(f(a, b) as u32);
            }
        }
        CayleyTable { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.size + b] as usize
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.data[a * self.size..(a + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.data
    }

    /// Elements of the subsemigroup generated by `gens`, in discovery order.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut sub = Subsemigroup::new(self);
        for &g in gens {
            sub.insert(g);
        }
        sub.members
    }

    /// An irredundant generating set of the whole table: the elements that
    /// are not products are forced; the rest is filled greedily from the top
    /// index down and then pruned.
    pub fn generating_set(&self) -> Vec<usize> {
        let size = self.size;
        let mut is_product = vec![false; size];
        for &v in &self.data {
            is_product[v as usize] = true;
        }
        let mut gens: Vec<usize> = (0..size).filter(|&x| !is_product[x]).collect();
        let mut sub = Subsemigroup::new(self);
        for &g in &gens {
            sub.insert(g);
        }
        for x in (0..size).rev() {
            if sub.members.len() == size {
                break;
            }
            if !sub.contains(x) {
                gens.push(x);
                sub.insert(x);
            }
        }
        let mut k = 0;
        while k < gens.len() {
            let rest: Vec<usize> = gens.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &g)| g).collect();
            if self.generated_by(&rest).len() == size {
                gens = rest;
            } else {
                k += 1;
            }
        }
        gens.sort_unstable();
        gens
    }

    /// First triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        (0..self.size).into_par_iter().find_map_first(|a| {
            for b in 0..self.size {
                let ab = self.get(a, b);
                for c in 0..self.size {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }
}

/// Incrementally grown subsemigroup of a table.
struct Subsemigroup<'a> {
    table: &'a CayleyTable,
    member: Vec<bool>,
    members: Vec<usize>,
}

impl<'a> Subsemigroup<'a> {
    fn new(table: &'a CayleyTable) -> Self {
        Subsemigroup {
            table,
            member: vec![false; table.size],
            members: Vec::new(),
        }
    }

    fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    fn insert(&mut self, x: usize) {
        if self.member[x] {
            return;
        }
        self.member[x] = true;
        let mut i = self.members.len();
        self.members.push(x);
        while i < self.members.len() {
            let a = self.members[i];
            for j in 0..=i {
                let b = self.members[j];
                for p in [self.table.get(a, b), self.table.get(b, a)] {
                    if !self.member[p] {
                        self.member[p] = true;
                        self.members.push(p);
                    }
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NsrElement {
    /// Adjoined additive identity and multiplicative zero; distinct from `ξ_θ`.
    Zero,
    Map(MapTable),
}

/// Sizes of the three families of `A⁺(B_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Breakdown {
    /// Constant maps, `ξ_θ` included.
    pub constants: usize,
    pub singletons: usize,
    pub n_support: usize,
}

/// `N` with its addition and composition tables. Index 0 is the adjoined
/// zero; the remaining indices follow canonical order, so `ξ_θ` is index 1.
#[derive(Clone, Debug)]
pub struct NearSemiringTable {
    brandt: Brandt,
    elements: Vec<NsrElement>,
    forms: Vec<Option<CanonicalForm>>,
    names: Vec<String>,
    by_map: HashMap<MapTable, usize>,
    add: CayleyTable,
    mul: CayleyTable,
    xi_theta: usize,
    add_gens: OnceLock<Vec<usize>>,
    mul_gens: OnceLock<Vec<usize>>,
}

impl NearSemiringTable {
    /// Assembles `N` from the nonzero maps. Every map must classify into one
    /// of the canonical families and the set must be closed under both
    /// operations; all table invariants are checked before returning.
    pub fn from_maps(brandt: Brandt, maps: Vec<MapTable>) -> Result<Self> {
        let mut classified = Vec::with_capacity(maps.len());
        for m in maps {
            let form = classify(&brandt, &m);
            if form.is_other() {
                return Err(NsrError::invariant(format!(
                    "{} is not in any canonical family",
                    m.raw_name(&brandt)
                )));
            }
            classified.push((form, m));
        }
        classified.sort_by(|a, b| a.0.cmp(&b.0));
        if classified.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(NsrError::invariant("duplicate element in generated set"));
        }

        let mut elements = vec![NsrElement::Zero];
        let mut forms = vec![None];
        for (form, m) in classified {
            forms.push(Some(form));
            elements.push(NsrElement::Map(m));
        }
        let table = Self::assemble(brandt, elements, forms)?;
        table.validate()?;
        Ok(table)
    }

    /// Rebuilds `N` from element names and stored tables, as read from a
    /// cache. The stored tables must agree with the recomputed ones and
    /// satisfy every invariant.
    pub fn from_parts(
        brandt: Brandt,
        names: &[String],
        add: CayleyTable,
        mul: CayleyTable,
    ) -> Result<Self> {
        if names.first().map(String::as_str) != Some(ZERO_NAME) {
            return Err(NsrError::invariant("element 0 must be the adjoined zero"));
        }
        if add.size() != names.len() || mul.size() != names.len() {
            return Err(NsrError::invariant("table size does not match element count"));
        }
        let mut elements = vec![NsrElement::Zero];
        let mut forms = vec![None];
        for name in &names[1..] {
            let form = CanonicalForm::parse(name)?;
            elements.push(NsrElement::Map(realize(&brandt, &form)?));
            forms.push(Some(form));
        }

        let stored = NearSemiringTable {
            add,
            mul,
            ..Self::skeleton(brandt, elements, forms)?
        };
        stored.check_laws()?;
        let recomputed = Self::assemble(stored.brandt.clone(), stored.elements.clone(), stored.forms.clone())?;
        if recomputed.add != stored.add {
            return Err(NsrError::invariant("stored addition table disagrees with the maps"));
        }
        if recomputed.mul != stored.mul {
            return Err(NsrError::invariant("stored multiplication table disagrees with the maps"));
        }
        stored.check_elements()?;
        Ok(stored)
    }

    fn skeleton(
        brandt: Brandt,
        elements: Vec<NsrElement>,
        forms: Vec<Option<CanonicalForm>>,
    ) -> Result<Self> {
        let mut by_map = HashMap::with_capacity(elements.len());
        let mut names = Vec::with_capacity(elements.len());
        for (i, (e, form)) in elements.iter().zip(&forms).enumerate() {
            match (e, form) {
                (NsrElement::Zero, None) if i == 0 => names.push(ZERO_NAME.to_string()),
                (NsrElement::Map(m), Some(form)) => {
                    if by_map.insert(m.clone(), i).is_some() {
                        return Err(NsrError::invariant(format!("duplicate element {form}")));
                    }
                    names.push(form.to_string());
                }
                _ => return Err(NsrError::invariant(format!("malformed element at index {i}"))),
            }
        }
        let xi_theta = forms
            .iter()
            .position(|f| f == &Some(CanonicalForm::ConstTheta))
            .ok_or_else(|| NsrError::invariant("ξ_θ is missing"))?;
        Ok(NearSemiringTable {
            brandt,
            elements,
            forms,
            names,
            by_map,
            add: CayleyTable::from_fn(0, |_, _| 0),
            mul: CayleyTable::from_fn(0, |_, _| 0),
            xi_theta,
            add_gens: OnceLock::new(),
            mul_gens: OnceLock::new(),
        })
    }

    fn assemble(
        brandt: Brandt,
        elements: Vec<NsrElement>,
        forms: Vec<Option<CanonicalForm>>,
    ) -> Result<Self> {
        let skel = Self::skeleton(brandt, elements, forms)?;
        let size = skel.elements.len();
        let lookup = |m: MapTable, op: &str| -> Result<u32> {
            skel.by_map.get(&m).map(|&i| i as u32).ok_or_else(|| {
                NsrError::invariant(format!(
                    "{op} leaves the element set: {}",
                    m.raw_name(&skel.brandt)
                ))
            })
        };
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                match (&skel.elements[a], &skel.elements[b]) {
                    (NsrElement::Zero, _) => {
                        add.push(b as u32);
                        mul.push(0);
                    }
                    (_, NsrElement::Zero) => {
                        add.push(a as u32);
                        mul.push(0);
                    }
                    (NsrElement::Map(f), NsrElement::Map(g)) => {
                        add.push(lookup(add_unchecked(&skel.brandt, f, g), "addition")?);
                        mul.push(lookup(compose_unchecked(&skel.brandt, f, g), "composition")?);
                    }
                }
            }
        }
        Ok(NearSemiringTable {
            add: CayleyTable { size, data: add },
            mul: CayleyTable { size, data: mul },
            ..skel
        })
    }

    /// Checks every structural invariant: zero laws, associativity of both
    /// operations, left distributivity, and that no map element is the
    /// adjoined zero's image.
    pub fn validate(&self) -> Result<()> {
        self.check_elements()?;
        self.check_laws()
    }

    fn check_elements(&self) -> Result<()> {
        let size = self.size();
        if self.add.size() != size || self.mul.size() != size {
            return Err(NsrError::invariant("table size does not match element count"));
        }
        if self.elements.first() != Some(&NsrElement::Zero) {
            return Err(NsrError::invariant("element 0 must be the adjoined zero"));
        }
        Ok(())
    }

    fn check_laws(&self) -> Result<()> {
        let (add, mul) = (&self.add, &self.mul);
        for a in 0..self.size() {
            if add.get(0, a) != a || add.get(a, 0) != a {
                return Err(NsrError::invariant(format!(
                    "0 is not an additive identity for {}",
                    self.names[a]
                )));
            }
            if mul.get(0, a) != 0 || mul.get(a, 0) != 0 {
                return Err(NsrError::invariant(format!(
                    "0 is not a multiplicative zero for {}",
                    self.names[a]
                )));
            }
        }
        if let Some((a, b, c)) = add.associativity_failure() {
            return Err(NsrError::invariant(format!(
                "addition is not associative at ({}, {}, {})",
                self.names[a], self.names[b], self.names[c]
            )));
        }
        if let Some((a, b, c)) = mul.associativity_failure() {
            return Err(NsrError::invariant(format!(
                "multiplication is not associative at ({}, {}, {})",
                self.names[a], self.names[b], self.names[c]
            )));
        }
        if let Some((f, g, h)) = self.left_distributivity_failure() {
            return Err(NsrError::invariant(format!(
                "left distributivity fails at ({}, {}, {})",
                self.names[f], self.names[g], self.names[h]
            )));
        }
        Ok(())
    }

    /// First `(f, g, h)` with `f(g + h) != fg + fh`, if any.
    pub fn left_distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        let (add, mul) = (&self.add, &self.mul);
        let size = self.size();
        (0..size).into_par_iter().find_map_first(|f| {
            for g in 0..size {
                let fg = mul.get(f, g);
                for h in 0..size {
                    if mul.get(f, add.get(g, h)) != add.get(fg, mul.get(f, h)) {
                        return Some((f, g, h));
                    }
                }
            }
            None
        })
    }

    /// First `(f, g, h)` over the nonzero elements with `(g + h)f != gf + hf`.
    pub fn right_distributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let (add, mul) = (&self.add, &self.mul);
        let size = self.size();
        for f in 1..size {
            for g in 1..size {
                for h in 1..size {
                    if mul.get(add.get(g, h), f) != add.get(mul.get(g, f), mul.get(h, f)) {
                        return Some((f, g, h));
                    }
                }
            }
        }
        None
    }

    pub fn brandt(&self) -> &Brandt {
        &self.brandt
    }

    pub fn n(&self) -> usize {
        self.brandt.n()
    }

    /// `|N|`, the adjoined zero included.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[NsrElement] {
        &self.elements
    }

    pub fn zero_idx(&self) -> usize {
        0
    }

    pub fn xi_theta_idx(&self) -> usize {
        self.xi_theta
    }

    /// Canonical form of a nonzero element.
    pub fn form(&self, idx: usize) -> Option<&CanonicalForm> {
        self.forms[idx].as_ref()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of_form(&self, form: &CanonicalForm) -> Option<usize> {
        let map = realize(&self.brandt, form).ok()?;
        self.by_map.get(&map).copied()
    }

    pub fn index_of_map(&self, map: &MapTable) -> Option<usize> {
        self.by_map.get(map).copied()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    /// Generating set of `(N, +)`.
    pub fn additive_generators(&self) -> &[usize] {
        self.add_gens.get_or_init(|| self.add.generating_set())
    }

    /// Generating set of `(N, ·)`.
    pub fn multiplicative_generators(&self) -> &[usize] {
        self.mul_gens.get_or_init(|| self.mul.generating_set())
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    /// Indices of the constant maps, `ξ_θ` first.
    pub fn constants(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.forms[i].as_ref().is_some_and(CanonicalForm::is_constant))
            .collect()
    }

    pub fn breakdown(&self) -> Breakdown {
        let mut out = Breakdown {
            constants: 0,
            singletons: 0,
            n_support: 0,
        };
        for form in self.forms.iter().flatten() {
            match form {
                CanonicalForm::ConstTheta | CanonicalForm::Const { .. } => out.constants += 1,
                CanonicalForm::Singleton { .. } => out.singletons += 1,
                CanonicalForm::NSupport { .. } => out.n_support += 1,
                CanonicalForm::Other => {}
            }
        }
        out
    }
}
