//! Table identities between canonical maps of `M(B_n)`, each checked over
//! every choice of its free indices.

use serde::Serialize;

use crate::brandt::{Brandt, Permutation};
use crate::error::Result;
use crate::maps::{map_add, map_compose, realize, CanonicalForm, MapTable};

/// Outcome of one quantified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub n: usize,
    pub instances: usize,
    /// Up to [`FAILURE_SAMPLE`] failing instances, rendered.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failure_count == 0 && self.instances > 0
    }
}

pub const FAILURE_SAMPLE: usize = 5;

struct Maps<'a> {
    brandt: &'a Brandt,
    perms: Vec<Permutation>,
}

impl Maps<'_> {
    fn form(&self, form: CanonicalForm) -> MapTable {
        realize(self.brandt, &form).expect("indices come from 1..=n")
    }

    fn theta(&self) -> MapTable {
        self.form(CanonicalForm::ConstTheta)
    }

    fn xi(&self, p: usize, q: usize) -> MapTable {
        self.form(CanonicalForm::Const { p, q })
    }

    fn single(&self, k: usize, l: usize, p: usize, q: usize) -> MapTable {
        self.form(CanonicalForm::Singleton { k, l, p, q })
    }

    fn nsup(&self, p: usize, q: usize, sigma: &Permutation) -> MapTable {
        self.form(CanonicalForm::NSupport {
            p,
            q,
            sigma: sigma.clone(),
        })
    }

    fn add(&self, f: &MapTable, g: &MapTable) -> MapTable {
        map_add(self.brandt, f, g).expect("same n")
    }

    /// `fg`: apply `f`, then `g`.
    fn mul(&self, f: &MapTable, g: &MapTable) -> MapTable {
        map_compose(self.brandt, f, g).expect("same n")
    }

    fn idx(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.brandt.n()
    }
}

struct Recorder {
    check: IdentityCheck,
}

impl Recorder {
    fn new(name: &'static str, statement: &'static str, n: usize) -> Self {
        Recorder {
            check: IdentityCheck {
                name,
                statement,
                n,
                instances: 0,
                failures: Vec::new(),
                failure_count: 0,
            },
        }
    }

    fn expect(&mut self, lhs: &MapTable, rhs: &MapTable, instance: impl FnOnce() -> String) {
        self.check.instances += 1;
        if lhs != rhs {
            self.check.failure_count += 1;
            if self.check.failures.len() < FAILURE_SAMPLE {
                self.check.failures.push(instance());
            }
        }
    }
}

/// Every identity for `B_n`, in a fixed order.
pub fn proof_identities(n: usize) -> Result<Vec<IdentityCheck>> {
    let brandt = Brandt::new(n)?;
    let m = Maps {
        brandt: &brandt,
        perms: Permutation::all(n),
    };
    let mut out = Vec::new();

    let mut r = Recorder::new("constant-split", "ξ(p,q) = ξ(p,p₀) + ξ(p₀,q₀) + ξ(q₀,q)", n);
    for p in m.idx() {
        for q in m.idx() {
            for p0 in m.idx() {
                for q0 in m.idx() {
                    let rhs = m.add(&m.add(&m.xi(p, p0), &m.xi(p0, q0)), &m.xi(q0, q));
                    r.expect(&m.xi(p, q), &rhs, || format!("p={p} q={q} p0={p0} q0={q0}"));
                }
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new("singleton-split", "⌈(k,l)→(p,q)⌉ = ξ(p,q) + (l,q;σ) when kσ = q", n);
    for k in m.idx() {
        for l in m.idx() {
            for p in m.idx() {
                for sigma in &m.perms {
                    let q = sigma.apply(k);
                    let rhs = m.add(&m.xi(p, q), &m.nsup(l, q, sigma));
                    r.expect(&m.single(k, l, p, q), &rhs, || format!("k={k} l={l} p={p} σ={sigma}"));
                }
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new("n-support-split", "(k,l;σ) = (k,p;σ) + ξ(p,l)", n);
    for k in m.idx() {
        for l in m.idx() {
            for p in m.idx() {
                for sigma in &m.perms {
                    let rhs = m.add(&m.nsup(k, p, sigma), &m.xi(p, l));
                    r.expect(&m.nsup(k, l, sigma), &rhs, || format!("k={k} l={l} p={p} σ={sigma}"));
                }
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new("singleton-to-constant", "ξ(k,l)·⌈(k,l)→(p,q)⌉ = ξ(p,q)", n);
    for_four(n, |k, l, p, q| {
        r.expect(&m.mul(&m.xi(k, l), &m.single(k, l, p, q)), &m.xi(p, q), || {
            format!("k={k} l={l} p={p} q={q}")
        });
    });
    out.push(r.check);

    let mut r = Recorder::new("n-support-to-constant", "ξ(k,p)·(p,q;σ) = ξ(kσ,q)", n);
    for k in m.idx() {
        for p in m.idx() {
            for q in m.idx() {
                for sigma in &m.perms {
                    let lhs = m.mul(&m.xi(k, p), &m.nsup(p, q, sigma));
                    r.expect(&lhs, &m.xi(sigma.apply(k), q), || format!("k={k} p={p} q={q} σ={sigma}"));
                }
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new(
        "singletons-apart",
        "⌈(i,j)→(k,l)⌉ + ⌈(s,t)→(v,v)⌉ = ξ_θ for (i,j) ≠ (s,t); ⌈(s,t)→(u,v)⌉ + ⌈(s,t)→(v,v)⌉ = ⌈(s,t)→(u,v)⌉",
        n,
    );
    for_four(n, |i, j, k, l| {
        for_four(n, |s, t, u, v| {
            if (i, j) != (s, t) {
                let lhs = m.add(&m.single(i, j, k, l), &m.single(s, t, v, v));
                r.expect(&lhs, &m.theta(), || format!("({i},{j})→({k},{l}) against ({s},{t})→({v},{v})"));
            }
            let keep = m.single(s, t, u, v);
            r.expect(&m.add(&keep, &m.single(s, t, v, v)), &keep, || format!("({s},{t})→({u},{v})"));
        });
    });
    out.push(r.check);

    let mut r = Recorder::new(
        "singletons-same-point",
        "⌈(i,j)→(k,l)⌉ = ⌈(i,j)→(k,k)⌉ + ⌈(i,j)→(k,l)⌉; ⌈(i,j)→(k,k)⌉ + ⌈(i,j)→(u,v)⌉ = ξ_θ for k ≠ u; \
         ⌈(i,j)→(k,l)⌉ + ⌈(i,j)→(v,v)⌉ = ξ_θ for l ≠ v",
        n,
    );
    for_four(n, |i, j, k, l| {
        let f = m.single(i, j, k, l);
        r.expect(&m.add(&m.single(i, j, k, k), &f), &f, || format!("({i},{j})→({k},{l})"));
        for u in m.idx() {
            for v in m.idx() {
                if k != u {
                    let lhs = m.add(&m.single(i, j, k, k), &m.single(i, j, u, v));
                    r.expect(&lhs, &m.theta(), || format!("({i},{j}) k={k} u={u} v={v}"));
                }
                if l != v {
                    let lhs = m.add(&f, &m.single(i, j, v, v));
                    r.expect(&lhs, &m.theta(), || format!("({i},{j})→({k},{l}) v={v}"));
                }
            }
        }
    });
    out.push(r.check);

    let mut r = Recorder::new(
        "n-support-cases",
        "(i,j;σ) + ξ(j,j) = (i,j;σ); (k,l;ρ) + ξ(j,j) = ξ_θ for l ≠ j; (k,k;id)·(i,j;σ) = ξ_θ for i ≠ k; \
         (k,k;id)·(k,j;ρ) = (k,j;ρ)",
        n,
    );
    let id = Permutation::identity(n);
    for i in m.idx() {
        for j in m.idx() {
            for sigma in &m.perms {
                let f = m.nsup(i, j, sigma);
                r.expect(&m.add(&f, &m.xi(j, j)), &f, || format!("({i},{j};{sigma})"));
                for k in m.idx() {
                    if i != k {
                        let lhs = m.mul(&m.nsup(k, k, &id), &f);
                        r.expect(&lhs, &m.theta(), || format!("k={k} against ({i},{j};{sigma})"));
                    } else {
                        let lhs = m.mul(&m.nsup(k, k, &id), &f);
                        r.expect(&lhs, &f, || format!("k={k} against ({i},{j};{sigma})"));
                    }
                    for l in m.idx() {
                        if l != j {
                            let lhs = m.add(&m.nsup(k, l, sigma), &m.xi(j, j));
                            r.expect(&lhs, &m.theta(), || format!("({k},{l};{sigma}) j={j}"));
                        }
                    }
                }
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new(
        "constant-cases",
        "ξ(a,a) + ξ(a,j) = ξ(a,j); ξ(a,a) + ξ(b,j) = ξ_θ for a ≠ b",
        n,
    );
    for a in m.idx() {
        for b in m.idx() {
            for j in m.idx() {
                let expected = if a == b { m.xi(a, j) } else { m.theta() };
                r.expect(&m.add(&m.xi(a, a), &m.xi(b, j)), &expected, || format!("a={a} b={b} j={j}"));
            }
        }
    }
    out.push(r.check);

    let mut r = Recorder::new(
        "constant-left-factor",
        "ξ(s,t)·⌈(k,l)→(p,q)⌉ = ξ_θ for (s,t) ≠ (k,l); ξ(s,t)·ξ(i,j) = ξ(i,j)",
        n,
    );
    for_four(n, |s, t, k, l| {
        for p in m.idx() {
            for q in m.idx() {
                if (s, t) != (k, l) {
                    let lhs = m.mul(&m.xi(s, t), &m.single(k, l, p, q));
                    r.expect(&lhs, &m.theta(), || format!("({s},{t}) against ({k},{l})→({p},{q})"));
                }
            }
        }
        let (i, j) = (k, l);
        r.expect(&m.mul(&m.xi(s, t), &m.xi(i, j)), &m.xi(i, j), || format!("({s},{t}) then ({i},{j})"));
    });
    out.push(r.check);

    let mut r = Recorder::new(
        "singleton-against-n-support",
        "⌈(k,l)→(p,q)⌉ = ⌈(k,l)→(p,p)⌉ + ξ(p,q); ⌈(k,l)→(p,p)⌉ + (i,j;σ) = ξ_θ for l ≠ i; \
         ξ(i,i)·⌈(k,l)→(p,q)⌉ = ξ_θ and ξ(i,i)·(i,j;σ) = ξ(iσ,j) for l ≠ i",
        n,
    );
    for_four(n, |k, l, p, q| {
        let f = m.single(k, l, p, q);
        r.expect(&m.add(&m.single(k, l, p, p), &m.xi(p, q)), &f, || {
            format!("({k},{l})→({p},{q})")
        });
        for i in m.idx() {
            if l == i {
                continue;
            }
            r.expect(&m.mul(&m.xi(i, i), &f), &m.theta(), || format!("i={i} against ({k},{l})→({p},{q})"));
            for j in m.idx() {
                for sigma in &m.perms {
                    let g = m.nsup(i, j, sigma);
                    let lhs = m.add(&m.single(k, l, p, p), &g);
                    r.expect(&lhs, &m.theta(), || format!("({k},{l})→({p},{p}) against ({i},{j};{sigma})"));
                    let lhs = m.mul(&m.xi(i, i), &g);
                    r.expect(&lhs, &m.xi(sigma.apply(i), j), || format!("i={i} against ({i},{j};{sigma})"));
                }
            }
        }
    });
    out.push(r.check);

    Ok(out)
}

fn for_four(n: usize, mut f: impl FnMut(usize, usize, usize, usize)) {
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    f(a, b, c, d);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for n in [2, 3] {
            let checks = proof_identities(n).unwrap();
            assert_eq!(checks.len(), 11);
            for c in checks {
                assert!(c.holds(), "{} at n={n}: {:?}", c.name, c.failures);
            }
        }
    }

    #[test]
    fn instance_counts() {
        let checks = proof_identities(2).unwrap();
        assert_eq!(checks[0].instances, 16);
        assert_eq!(checks[1].instances, 16);
    }
}
