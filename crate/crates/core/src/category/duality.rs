//! Dualities `(T, η)` on finite categories and the real structure they
//! induce on nerves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::simplicial::{materialize, materialize_real, Labeled, RealSimplicialObject, RealStructure, SimplicialObject};

use super::finite::FiniteCategory;

/// A contravariant `T: C^op -> C` with `η: id -> T T`, such that
/// `T(η_c) ∘ η_{Tc} = id_{Tc}`. The duality is strict when every `η_c` is an
/// identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Duality {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
    pub eta: Vec<usize>,
}

impl Duality {
    pub fn new(c: &FiniteCategory, objects: Vec<usize>, morphisms: Vec<usize>, eta: Vec<usize>) -> Result<Self> {
        let d = Self { objects, morphisms, eta };
        d.validate(c)?;
        Ok(d)
    }

    /// A strict duality: `η = id`.
    pub fn strict(c: &FiniteCategory, objects: Vec<usize>, morphisms: Vec<usize>) -> Result<Self> {
        let eta = (0..c.object_count()).map(|x| c.identity(x)).collect();
        Self::new(c, objects, morphisms, eta)
    }

    fn validate(&self, c: &FiniteCategory) -> Result<()> {
        let fail = |msg: String| Err(Error::DualityAxiom(msg));
        let (no, nm) = (c.object_count(), c.morphism_count());
        if self.objects.len() != no || self.objects.iter().any(|&x| x >= no) {
            return fail("object map must send every object to an object".into());
        }
        if self.morphisms.len() != nm || self.morphisms.iter().any(|&f| f >= nm) {
            return fail("morphism map must send every morphism to a morphism".into());
        }
        if self.eta.len() != no || self.eta.iter().any(|&f| f >= nm) {
            return fail("eta needs one morphism per object".into());
        }
        for f in 0..nm {
            let tf = self.morphisms[f];
            if c.source(tf) != self.objects[c.target(f)] || c.target(tf) != self.objects[c.source(f)] {
                return fail(format!("T({f}) does not run from T(target) to T(source)"));
            }
        }
        for x in 0..no {
            if self.morphisms[c.identity(x)] != c.identity(self.objects[x]) {
                return fail(format!("T does not preserve the identity of {x}"));
            }
        }
        for f in 0..nm {
            for g in (0..nm).filter(|&g| c.source(g) == c.target(f)) {
                let lhs = self.morphisms[c.then(f, g)];
                if Some(lhs) != c.compose(self.morphisms[f], self.morphisms[g]) {
                    return fail(format!("T({g} ∘ {f}) != T({f}) ∘ T({g})"));
                }
            }
        }
        for x in 0..no {
            let e = self.eta[x];
            let ttx = self.objects[self.objects[x]];
            if c.source(e) != x || c.target(e) != ttx || c.inverse(e).is_none() {
                return fail(format!("eta at {x} is not an isomorphism {x} -> TT{x}"));
            }
        }
        for f in 0..nm {
            let ttf = self.morphisms[self.morphisms[f]];
            if c.then(f, self.eta[c.target(f)]) != c.then(self.eta[c.source(f)], ttf) {
                return fail(format!("eta is not natural at {f}"));
            }
        }
        for x in 0..no {
            let tx = self.objects[x];
            if c.then(self.eta[tx], self.morphisms[self.eta[x]]) != c.identity(tx) {
                return fail(format!("T(eta_{x}) ∘ eta_T{x} is not the identity"));
            }
        }
        Ok(())
    }

    pub fn is_strict(&self, c: &FiniteCategory) -> bool {
        self.eta.iter().enumerate().all(|(x, &e)| e == c.identity(x))
    }

    pub fn require_strict(&self, c: &FiniteCategory) -> Result<()> {
        match (0..c.object_count()).find(|&x| self.eta[x] != c.identity(x)) {
            Some(x) => Err(Error::DualityAxiom(format!("eta at {x} is not an identity"))),
            None => Ok(()),
        }
    }

    /// The strict duality of a monoid category given by the anti-involution.
    pub fn from_monoid(m: &FiniteMonoid, c: &FiniteCategory) -> Result<Self> {
        Self::strict(c, vec![0], m.elements().map(|x| m.inv(x)).collect())
    }

    /// `i -> n - i` on the poset `[n]`.
    pub fn poset_reversal(c: &FiniteCategory) -> Result<Self> {
        let n = c.object_count() - 1;
        let morphisms = (0..c.morphism_count())
            .map(|f| {
                let (i, j) = (c.source(f), c.target(f));
                c.hom(n - j, n - i).next().expect("reversed relation holds")
            })
            .collect();
        Self::strict(c, (0..=n).map(|i| n - i).collect(), morphisms)
    }
}

/// A category together with a duality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryWithDuality {
    pub category: FiniteCategory,
    pub duality: Duality,
}

/// `N_n C`: a start object and `n` composable arrows.
#[derive(Clone, Copy, Debug)]
pub struct Nerve<'a>(pub &'a FiniteCategory);

pub type Chain = (usize, Vec<usize>);

impl Nerve<'_> {
    /// Object `c_k` of a chain.
    pub fn vertex(&self, chain: &Chain, k: usize) -> usize {
        if k == 0 {
            chain.0
        } else {
            self.0.target(chain.1[k - 1])
        }
    }
}

impl SimplicialObject for Nerve<'_> {
    type Simplex = Chain;

    fn simplices(&self, n: usize) -> Vec<Chain> {
        let c = self.0;
        let mut out: Vec<Chain> = (0..c.object_count()).map(|x| (x, vec![])).collect();
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|(start, arrows)| {
                    let end = arrows.last().map_or(start, |&f| c.target(f));
                    (0..c.morphism_count()).filter(move |&g| c.source(g) == end).map(move |g| {
                        let mut a = arrows.clone();
                        a.push(g);
                        (start, a)
                    })
                })
                .collect();
        }
        out
    }

    fn face(&self, n: usize, i: usize, x: &Chain) -> Chain {
        let (start, arrows) = x;
        let mut a = arrows.clone();
        if i == 0 {
            let f = a.remove(0);
            (self.0.target(f), a)
        } else if i == n {
            a.pop();
            (*start, a)
        } else {
            let composite = self.0.then(a[i - 1], a[i]);
            a[i - 1] = composite;
            a.remove(i);
            (*start, a)
        }
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Chain) -> Chain {
        let mut a = x.1.clone();
        a.insert(j, self.0.identity(self.vertex(x, j)));
        (x.0, a)
    }
}

/// The nerve with `w_n(c_0 -> ... -> c_n) = (T c_n -> ... -> T c_0)`.
#[derive(Clone, Copy, Debug)]
pub struct RealNerve<'a> {
    pub category: &'a FiniteCategory,
    pub duality: &'a Duality,
}

impl SimplicialObject for RealNerve<'_> {
    type Simplex = Chain;

    fn simplices(&self, n: usize) -> Vec<Chain> {
        Nerve(self.category).simplices(n)
    }

    fn face(&self, n: usize, i: usize, x: &Chain) -> Chain {
        Nerve(self.category).face(n, i, x)
    }

    fn degeneracy(&self, n: usize, j: usize, x: &Chain) -> Chain {
        Nerve(self.category).degeneracy(n, j, x)
    }
}

impl RealSimplicialObject for RealNerve<'_> {
    fn reverse(&self, n: usize, x: &Chain) -> Chain {
        let last = Nerve(self.category).vertex(x, n);
        (
            self.duality.objects[last],
            x.1.iter().rev().map(|&f| self.duality.morphisms[f]).collect(),
        )
    }
}

pub fn nerve(c: &FiniteCategory, d: usize) -> Labeled<Chain> {
    materialize(&Nerve(c), d).expect("nerve of a valid category")
}

/// The nerve with its real structure; needs a strict duality.
pub fn real_nerve(c: &FiniteCategory, t: &Duality, d: usize) -> Result<(Labeled<Chain>, RealStructure)> {
    t.require_strict(c)?;
    materialize_real(&RealNerve { category: c, duality: t }, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{corpus, cyclic, real_bar, trivial};
    use crate::simplicial::{point, representable};

    #[test]
    fn small_nerves() {
        assert_eq!(nerve(&FiniteCategory::from_monoid(&trivial()), 3).set, point(3));
        let d1 = representable(1, 3);
        assert_eq!(nerve(&FiniteCategory::poset(1), 3).set, d1.set);
    }

    #[test]
    fn monoid_nerve_is_the_real_bar_construction() {
        for (name, m) in corpus() {
            let c = FiniteCategory::from_monoid(&m);
            let t = Duality::from_monoid(&m, &c).unwrap();
            let (n, w) = real_nerve(&c, &t, 3).unwrap();
            let (b, wb) = real_bar(&m, 3).unwrap();
            assert_eq!(n.set, b.set, "{name}");
            for k in 0..=3 {
                assert_eq!(w.w_table(k), wb.w_table(k), "{name}");
            }
        }
        let c2 = cyclic(2);
        assert!(Duality::from_monoid(&c2, &FiniteCategory::from_monoid(&c2)).unwrap().is_strict(&FiniteCategory::from_monoid(&c2)));
    }

    #[test]
    fn poset_needs_an_order_reversing_duality() {
        let p = FiniteCategory::poset(1);
        let identity_map = Duality::strict(&p, vec![0, 1], (0..3).collect());
        assert!(matches!(identity_map, Err(Error::DualityAxiom(_))));
        let t = Duality::poset_reversal(&p).unwrap();
        assert!(real_nerve(&p, &t, 3).is_ok());
    }

    #[test]
    fn non_strict_duality_on_a_monoid() {
        // C4 with t = id and eta = g^2: eta t^2(m) = eta m and t(eta) = eta^{-1}
        let m = cyclic(4);
        let c = FiniteCategory::from_monoid(&m);
        let t = Duality::new(&c, vec![0], (0..4).collect(), vec![2]).unwrap();
        assert!(!t.is_strict(&c));
        assert!(real_nerve(&c, &t, 1).is_err());
        // eta = g fails the triangle identity
        assert!(Duality::new(&c, vec![0], (0..4).collect(), vec![1]).is_err());
    }
}
