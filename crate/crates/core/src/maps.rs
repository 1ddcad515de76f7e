//! Self-maps of `B_n` under pointwise addition and composition.
//!
//! Arguments are written on the left: `x(f + g) = xf + xg` and
//! `x(fg) = (xf)g`, so `compose(f, g)` applies `f` first.

use std::fmt;

use crate::brandt::{Brandt, BrandtElement, Code, Permutation, THETA};
use crate::error::{NsrError, Result};

/// A total function `B_n -> B_n`, stored as the image code of every argument
/// code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapTable {
    n: u16,
    entries: Vec<Code>,
}

impl MapTable {
    pub fn from_codes(brandt: &Brandt, entries: Vec<Code>) -> Result<Self> {
        let order = brandt.order();
        if entries.len() != order {
            return Err(NsrError::invariant(format!(
                "map table has {} entries, B_{} needs {order}",
                entries.len(),
                brandt.n()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&c| c as usize >= order) {
            return Err(NsrError::CodeOutOfRange {
                code: bad as usize,
                n: brandt.n(),
                max: order - 1,
            });
        }
        Ok(MapTable {
            n: brandt.n() as u16,
            entries,
        })
    }

    pub(crate) fn from_codes_unchecked(n: usize, entries: Vec<Code>) -> Self {
        MapTable { n: n as u16, entries }
    }

    pub fn constant(brandt: &Brandt, value: Code) -> Self {
        MapTable::from_codes_unchecked(brandt.n(), vec![value; brandt.order()])
    }

    pub fn identity(brandt: &Brandt) -> Self {
        MapTable::from_codes_unchecked(brandt.n(), (0..brandt.order() as Code).collect())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn entries(&self) -> &[Code] {
        &self.entries
    }

    #[inline]
    pub fn image(&self, code: Code) -> Code {
        self.entries[code as usize]
    }

    /// Raw rendering for maps outside the canonical families, e.g. `m:[t 1,1 t 2,2 t]`.
    pub fn raw_name(&self, brandt: &Brandt) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&c| brandt.decode_unchecked(c).to_string())
            .collect();
        format!("m:[{}]", parts.join(" "))
    }
}

fn same_n(brandt: &Brandt, f: &MapTable, g: &MapTable) -> Result<()> {
    for m in [f, g] {
        if m.n() != brandt.n() {
            return Err(NsrError::MismatchedN {
                left: brandt.n(),
                right: m.n(),
            });
        }
    }
    Ok(())
}

/// Pointwise sum `x(f + g) = xf + xg`.
pub fn map_add(brandt: &Brandt, f: &MapTable, g: &MapTable) -> Result<MapTable> {
    same_n(brandt, f, g)?;
    Ok(add_unchecked(brandt, f, g))
}

#[inline]
pub(crate) fn add_unchecked(brandt: &Brandt, f: &MapTable, g: &MapTable) -> MapTable {
    let entries = f
        .entries
        .iter()
        .zip(&g.entries)
        .map(|(&a, &b)| brandt.add_codes(a, b))
        .collect();
    MapTable::from_codes_unchecked(brandt.n(), entries)
}

/// Composition `x(fg) = (xf)g`.
pub fn map_compose(brandt: &Brandt, f: &MapTable, g: &MapTable) -> Result<MapTable> {
    same_n(brandt, f, g)?;
    Ok(compose_unchecked(brandt, f, g))
}

#[inline]
pub(crate) fn compose_unchecked(brandt: &Brandt, f: &MapTable, g: &MapTable) -> MapTable {
    let entries = f.entries.iter().map(|&x| g.image(x)).collect();
    MapTable::from_codes_unchecked(brandt.n(), entries)
}

/// Arguments whose image is not `θ`, in code order.
pub fn support(brandt: &Brandt, f: &MapTable) -> Vec<BrandtElement> {
    f.entries
        .iter()
        .enumerate()
        .filter(|&(_, &img)| img != THETA)
        .map(|(x, _)| brandt.decode_unchecked(x as Code))
        .collect()
}

/// The families that make up `A⁺(B_n)`.
///
/// Variant order is the element order used by generated algebras: `ξ_θ`, the
/// full-support constants, the singleton-support maps, then the `n`-support
/// maps, each lexicographic in its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalForm {
    /// `ξ_θ`.
    ConstTheta,
    /// `ξ_(p,q)`.
    Const { p: usize, q: usize },
    /// `⌈(k,l) -> (p,q)⌉`.
    Singleton { k: usize, l: usize, p: usize, q: usize },
    /// `(p,q;σ)`: sends `(i,p)` to `(iσ,q)`.
    NSupport { p: usize, q: usize, sigma: Permutation },
    Other,
}

impl CanonicalForm {
    pub fn is_other(&self) -> bool {
        matches!(self, CanonicalForm::Other)
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, CanonicalForm::ConstTheta | CanonicalForm::Const { .. })
    }

    /// Stable identifier used in every report and cache file.
    pub fn name(&self) -> Option<String> {
        Some(match self {
            CanonicalForm::ConstTheta => "c:t".to_string(),
            CanonicalForm::Const { p, q } => format!("c:{p},{q}"),
            CanonicalForm::Singleton { k, l, p, q } => format!("s:{k},{l}>{p},{q}"),
            CanonicalForm::NSupport { p, q, sigma } => format!("n:{p},{q};{sigma}"),
            CanonicalForm::Other => return None,
        })
    }

    /// Inverse of [`CanonicalForm::name`].
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || NsrError::BadName(name.to_string());
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let pair = |s: &str| -> Result<(usize, usize)> {
            let (a, b) = s.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let (tag, body) = name.split_once(':').ok_or_else(bad)?;
        match tag {
            "c" if body == "t" => Ok(CanonicalForm::ConstTheta),
            "c" => {
                let (p, q) = pair(body)?;
                Ok(CanonicalForm::Const { p, q })
            }
            "s" => {
                let (from, to) = body.split_once('>').ok_or_else(bad)?;
                let (k, l) = pair(from)?;
                let (p, q) = pair(to)?;
                Ok(CanonicalForm::Singleton { k, l, p, q })
            }
            "n" => {
                let (pq, word) = body.split_once(';').ok_or_else(bad)?;
                let (p, q) = pair(pq)?;
                let images = word
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<Vec<_>>>()?;
                let sigma = Permutation::new(images).map_err(|_| bad())?;
                Ok(CanonicalForm::NSupport { p, q, sigma })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(&name),
            None => f.write_str("other"),
        }
    }
}

/// Builds the table of a canonical form.
pub fn realize(brandt: &Brandt, form: &CanonicalForm) -> Result<MapTable> {
    let n = brandt.n();
    let in_range = |i: usize| (1..=n).contains(&i);
    let check = |ps: &[usize]| -> Result<()> {
        match ps.iter().find(|&&i| !in_range(i)) {
            Some(_) => Err(NsrError::PairOutOfRange {
                row: ps[0],
                col: ps[1],
                n,
            }),
            None => Ok(()),
        }
    };
    let mut entries = vec![THETA; brandt.order()];
    match form {
        CanonicalForm::ConstTheta => {}
        CanonicalForm::Const { p, q } => {
            check(&[*p, *q])?;
            entries.fill(brandt.code(*p, *q));
        }
        CanonicalForm::Singleton { k, l, p, q } => {
            check(&[*k, *l, *p, *q])?;
            entries[brandt.code(*k, *l) as usize] = brandt.code(*p, *q);
        }
        CanonicalForm::NSupport { p, q, sigma } => {
            check(&[*p, *q])?;
            if sigma.degree() != n {
                return Err(NsrError::MismatchedN {
                    left: n,
                    right: sigma.degree(),
                });
            }
            for i in 1..=n {
                entries[brandt.code(i, *p) as usize] = brandt.code(sigma.apply(i), *q);
            }
        }
        CanonicalForm::Other => return Err(NsrError::NotCanonical),
    }
    Ok(MapTable::from_codes_unchecked(n, entries))
}

/// Identifies which family of `A⁺(B_n)` a table belongs to, if any.
///
/// The families are told apart by support size (`n² + 1`, `0`, `1`, `n`).
/// For `n = 1` the `1` and `n` sizes coincide; the `n`-support reading is
/// tried first, which yields `(1,1;id)` for the identity on `B_1`.
pub fn classify(brandt: &Brandt, f: &MapTable) -> CanonicalForm {
    if f.n() != brandt.n() {
        return CanonicalForm::Other;
    }
    let n = brandt.n();
    let supp = support(brandt, f);
    let candidate = if supp.is_empty() {
        Some(CanonicalForm::ConstTheta)
    } else if supp.len() == brandt.order() {
        let c = f.image(0);
        f.entries()
            .iter()
            .all(|&x| x == c)
            .then(|| match brandt.decode_unchecked(c) {
                BrandtElement::Pair { row, col } => CanonicalForm::Const {
                    p: row as usize,
                    q: col as usize,
                },
                BrandtElement::Theta => unreachable!("full support excludes theta images"),
            })
    } else {
        let mut found = None;
        if supp.len() == n {
            found = n_support_form(brandt, f, &supp);
        }
        if found.is_none() && supp.len() == 1 {
            if let BrandtElement::Pair { row: k, col: l } = supp[0] {
                let image = f.image(brandt.code(k as usize, l as usize));
                if let BrandtElement::Pair { row: p, col: q } = brandt.decode_unchecked(image) {
                    found = Some(CanonicalForm::Singleton {
                        k: k as usize,
                        l: l as usize,
                        p: p as usize,
                        q: q as usize,
                    });
                }
            }
        }
        found
    };
    match candidate {
        Some(form) if realize(brandt, &form).is_ok_and(|t| &t == f) => form,
        _ => CanonicalForm::Other,
    }
}

fn n_support_form(brandt: &Brandt, f: &MapTable, supp: &[BrandtElement]) -> Option<CanonicalForm> {
    let p = match supp.first()? {
        BrandtElement::Pair { col, .. } => *col as usize,
        BrandtElement::Theta => return None,
    };
    let q = match brandt.decode_unchecked(f.image(brandt.code(1, p))) {
        BrandtElement::Pair { col, .. } => col as usize,
        BrandtElement::Theta => return None,
    };
    let mut images = Vec::with_capacity(brandt.n());
    for i in 1..=brandt.n() {
        match brandt.decode_unchecked(f.image(brandt.code(i, p))) {
            BrandtElement::Pair { row, col } if col as usize == q => images.push(row as usize),
            _ => return None,
        }
    }
    let sigma = Permutation::new(images).ok()?;
    Some(CanonicalForm::NSupport { p, q, sigma })
}

/// Every canonical form of `A⁺(B_n)` for `n >= 2`, in canonical order.
pub fn canonical_forms(brandt: &Brandt) -> Vec<CanonicalForm> {
    let n = brandt.n();
    let mut out = vec![CanonicalForm::ConstTheta];
    for p in 1..=n {
        for q in 1..=n {
            out.push(CanonicalForm::Const { p, q });
        }
    }
    for k in 1..=n {
        for l in 1..=n {
            for p in 1..=n {
                for q in 1..=n {
                    out.push(CanonicalForm::Singleton { k, l, p, q });
                }
            }
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            for sigma in Permutation::all(n) {
                out.push(CanonicalForm::NSupport { p, q, sigma });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize) -> Brandt {
        Brandt::new(n).unwrap()
    }

    fn xi(br: &Brandt, p: usize, q: usize) -> MapTable {
        realize(br, &CanonicalForm::Const { p, q }).unwrap()
    }

    fn nsupp(br: &Brandt, p: usize, q: usize, sigma: &Permutation) -> MapTable {
        realize(
            br,
            &CanonicalForm::NSupport {
                p,
                q,
                sigma: sigma.clone(),
            },
        )
        .unwrap()
    }

    #[test]
    fn add_examples() {
        let br = b(3);
        assert_eq!(map_add(&br, &xi(&br, 1, 2), &xi(&br, 2, 3)).unwrap(), xi(&br, 1, 3));
        let theta = MapTable::constant(&br, THETA);
        for form in canonical_forms(&br) {
            let f = realize(&br, &form).unwrap();
            assert_eq!(map_add(&br, &f, &theta).unwrap(), theta);
        }
        for sigma in Permutation::all(3) {
            for (k, p, l) in [(1, 2, 3), (2, 2, 1), (3, 1, 1)] {
                assert_eq!(
                    map_add(&br, &nsupp(&br, k, p, &sigma), &xi(&br, p, l)).unwrap(),
                    nsupp(&br, k, l, &sigma)
                );
            }
        }
    }

    #[test]
    fn compose_examples() {
        let br = b(3);
        let single = realize(&br, &CanonicalForm::Singleton { k: 2, l: 3, p: 1, q: 2 }).unwrap();
        assert_eq!(map_compose(&br, &xi(&br, 2, 3), &single).unwrap(), xi(&br, 1, 2));
        let sigma = Permutation::new(vec![3, 1, 2]).unwrap();
        // ξ(2,1)(1,3;σ) = ξ(2σ,3) = ξ(1,3)
        assert_eq!(
            map_compose(&br, &xi(&br, 2, 1), &nsupp(&br, 1, 3, &sigma)).unwrap(),
            xi(&br, 1, 3)
        );
        let id = MapTable::identity(&br);
        assert_eq!(map_compose(&br, &id, &xi(&br, 3, 3)).unwrap(), xi(&br, 3, 3));
    }

    #[test]
    fn compose_applies_left_factor_first() {
        let br = b(2);
        let f = realize(&br, &CanonicalForm::Singleton { k: 1, l: 1, p: 2, q: 2 }).unwrap();
        let g = realize(&br, &CanonicalForm::Singleton { k: 2, l: 2, p: 1, q: 2 }).unwrap();
        let fg = map_compose(&br, &f, &g).unwrap();
        assert_eq!(
            classify(&br, &fg),
            CanonicalForm::Singleton { k: 1, l: 1, p: 1, q: 2 }
        );
        // g then f sends (2,2) to (1,2), which f kills.
        let gf = map_compose(&br, &g, &f).unwrap();
        assert_eq!(classify(&br, &gf), CanonicalForm::ConstTheta);
    }

    #[test]
    fn mismatched_n_is_rejected() {
        let b2 = b(2);
        let b3 = b(3);
        let f = MapTable::identity(&b2);
        let g = MapTable::identity(&b3);
        assert!(matches!(map_add(&b2, &f, &g), Err(NsrError::MismatchedN { .. })));
        assert!(matches!(map_compose(&b3, &g, &f), Err(NsrError::MismatchedN { .. })));
        assert!(MapTable::from_codes(&b2, vec![0; 4]).is_err());
        assert!(MapTable::from_codes(&b2, vec![0, 0, 0, 0, 5]).is_err());
    }

    #[test]
    fn supports() {
        let br = b(2);
        assert!(support(&br, &MapTable::constant(&br, THETA)).is_empty());
        assert_eq!(support(&br, &xi(&br, 1, 2)).len(), 5);
        let s = realize(&br, &CanonicalForm::Singleton { k: 1, l: 1, p: 2, q: 2 }).unwrap();
        assert_eq!(support(&br, &s), vec![BrandtElement::pair(1, 1)]);
        let br3 = b(3);
        let m = nsupp(&br3, 2, 1, &Permutation::new(vec![2, 3, 1]).unwrap());
        assert_eq!(
            support(&br3, &m),
            vec![BrandtElement::pair(1, 2), BrandtElement::pair(2, 2), BrandtElement::pair(3, 2)]
        );
    }

    #[test]
    fn realize_singleton_on_b2() {
        let br = b(2);
        let s = realize(&br, &CanonicalForm::Singleton { k: 1, l: 2, p: 2, q: 1 }).unwrap();
        assert_eq!(s.entries(), &[0, 0, 3, 0, 0]);
        assert!(matches!(realize(&br, &CanonicalForm::Other), Err(NsrError::NotCanonical)));
        assert!(realize(&br, &CanonicalForm::Const { p: 3, q: 1 }).is_err());
    }

    #[test]
    fn classify_round_trips_every_form() {
        for n in 2..=4 {
            let br = b(n);
            let forms = canonical_forms(&br);
            assert_eq!(
                forms.len(),
                (1..=n).product::<usize>() * n * n + n * n + n.pow(4) + 1
            );
            for form in forms {
                let t = realize(&br, &form).unwrap();
                assert_eq!(classify(&br, &t), form);
                let name = form.name().unwrap();
                assert_eq!(CanonicalForm::parse(&name).unwrap(), form);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let br = b(2);
        assert_eq!(classify(&br, &xi(&br, 2, 1)), CanonicalForm::Const { p: 2, q: 1 });
        assert_eq!(classify(&br, &MapTable::identity(&br)), CanonicalForm::Other);
        let sigma = Permutation::new(vec![2, 1]).unwrap();
        let form = CanonicalForm::NSupport { p: 1, q: 2, sigma };
        assert_eq!(classify(&br, &realize(&br, &form).unwrap()), form);
    }

    #[test]
    fn classify_b1_uses_n_support_reading() {
        let br = b(1);
        assert_eq!(
            classify(&br, &MapTable::identity(&br)),
            CanonicalForm::NSupport { p: 1, q: 1, sigma: Permutation::identity(1) }
        );
        assert_eq!(classify(&br, &xi(&br, 1, 1)), CanonicalForm::Const { p: 1, q: 1 });
        assert_eq!(classify(&br, &MapTable::constant(&br, THETA)), CanonicalForm::ConstTheta);
        // theta -> (1,1), (1,1) -> theta
        let odd = MapTable::from_codes(&br, vec![1, 0]).unwrap();
        assert_eq!(classify(&br, &odd), CanonicalForm::Other);
    }

    #[test]
    fn names() {
        let sigma = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(
            CanonicalForm::NSupport { p: 1, q: 2, sigma }.name().unwrap(),
            "n:1,2;213"
        );
        assert_eq!(CanonicalForm::ConstTheta.name().unwrap(), "c:t");
        assert_eq!(
            CanonicalForm::Singleton { k: 1, l: 2, p: 2, q: 1 }.name().unwrap(),
            "s:1,2>2,1"
        );
        assert!(CanonicalForm::parse("x:1").is_err());
        assert!(CanonicalForm::parse("n:1,2;11").is_err());
        assert!(CanonicalForm::Other.name().is_none());
    }
}
