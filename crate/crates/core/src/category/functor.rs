//! Functors, natural transformations and duality preserving functors
//! between finite categories.

use serde::Serialize;

use crate::error::{Error, Result};

use super::duality::CategoryWithDuality;
use super::finite::FiniteCategory;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            objects: (0..c.object_count()).collect(),
            morphisms: (0..c.morphism_count()).collect(),
        }
    }

    /// Checks endpoints, identities and composition.
    pub fn validate(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> Result<()> {
        let fail = |msg: String| Err(Error::CategoryAxiom(msg));
        if self.objects.len() != src.object_count() || self.morphisms.len() != src.morphism_count() {
            return fail("functor tables do not cover the source".into());
        }
        if self.objects.iter().any(|&x| x >= tgt.object_count()) || self.morphisms.iter().any(|&f| f >= tgt.morphism_count()) {
            return fail("functor leaves the target".into());
        }
        for f in 0..src.morphism_count() {
            let ff = self.morphisms[f];
            if tgt.source(ff) != self.objects[src.source(f)] || tgt.target(ff) != self.objects[src.target(f)] {
                return fail(format!("F({f}) has the wrong endpoints"));
            }
        }
        for x in 0..src.object_count() {
            if self.morphisms[src.identity(x)] != tgt.identity(self.objects[x]) {
                return fail(format!("F does not preserve the identity of {x}"));
            }
        }
        for f in 0..src.morphism_count() {
            for g in (0..src.morphism_count()).filter(|&g| src.source(g) == src.target(f)) {
                if self.morphisms[src.then(f, g)] != tgt.then(self.morphisms[f], self.morphisms[g]) {
                    return fail(format!("F({g} ∘ {f}) != F({g}) ∘ F({f})"));
                }
            }
        }
        Ok(())
    }

    /// `G ∘ F`, where `self = F`.
    pub fn then(&self, g: &Functor) -> Functor {
        Functor {
            objects: self.objects.iter().map(|&x| g.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&f| g.morphisms[f]).collect(),
        }
    }
}

/// Checks that `alpha` is a natural transformation `F -> G` of functors
/// `src -> tgt`: `α_x: F x -> G x` and `G(f) ∘ α_a = α_b ∘ F(f)`.
pub fn check_natural(src: &FiniteCategory, tgt: &FiniteCategory, f: &Functor, g: &Functor, alpha: &[usize]) -> Result<()> {
    let fail = |msg: String| Err(Error::CategoryAxiom(msg));
    if alpha.len() != src.object_count() {
        return fail("one component per object is needed".into());
    }
    for x in 0..src.object_count() {
        let a = alpha[x];
        if a >= tgt.morphism_count() || tgt.source(a) != f.objects[x] || tgt.target(a) != g.objects[x] {
            return fail(format!("component at {x} has the wrong endpoints"));
        }
    }
    for m in 0..src.morphism_count() {
        let (a, b) = (src.source(m), src.target(m));
        if tgt.then(alpha[a], g.morphisms[m]) != tgt.then(f.morphisms[m], alpha[b]) {
            return fail(format!("not natural at {m}"));
        }
    }
    Ok(())
}

pub fn is_natural_isomorphism(tgt: &FiniteCategory, alpha: &[usize]) -> bool {
    alpha.iter().all(|&a| tgt.inverse(a).is_some())
}

/// `(F, ξ)` with `ξ: F T -> T' F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityPreservingFunctor {
    pub functor: Functor,
    pub xi: Vec<usize>,
}

impl DualityPreservingFunctor {
    /// Functor laws, naturality of `ξ` and the square
    /// `T'(ξ_c) ∘ η'_{F c} = ξ_{T c} ∘ F(η_c)`.
    pub fn validate(&self, src: &CategoryWithDuality, tgt: &CategoryWithDuality) -> Result<()> {
        let (c, d) = (&src.category, &tgt.category);
        let (t, t2) = (&src.duality, &tgt.duality);
        self.functor.validate(c, d)?;
        // F T and T' F as covariant functors C^op -> D, tabulated on C
        let ft = Functor {
            objects: t.objects.iter().map(|&x| self.functor.objects[x]).collect(),
            morphisms: t.morphisms.iter().map(|&f| self.functor.morphisms[f]).collect(),
        };
        let tf = Functor {
            objects: self.functor.objects.iter().map(|&x| t2.objects[x]).collect(),
            morphisms: self.functor.morphisms.iter().map(|&f| t2.morphisms[f]).collect(),
        };
        if self.xi.len() != c.object_count() {
            return Err(Error::DualityAxiom("xi needs one component per object".into()));
        }
        for x in 0..c.object_count() {
            let a = self.xi[x];
            if a >= d.morphism_count() || d.source(a) != ft.objects[x] || d.target(a) != tf.objects[x] {
                return Err(Error::DualityAxiom(format!("xi at {x} has the wrong endpoints")));
            }
        }
        // both sides are contravariant in c, so for m: a -> b the square
        // runs from F T b to T' F a
        for m in 0..c.morphism_count() {
            let (a, b) = (c.source(m), c.target(m));
            if d.then(self.xi[b], tf.morphisms[m]) != d.then(ft.morphisms[m], self.xi[a]) {
                return Err(Error::DualityAxiom(format!("xi is not natural at {m}")));
            }
        }
        for x in 0..c.object_count() {
            let lhs = d.then(t2.eta[self.functor.objects[x]], t2.morphisms[self.xi[x]]);
            let rhs = d.then(self.functor.morphisms[t.eta[x]], self.xi[t.objects[x]]);
            if lhs != rhs {
                return Err(Error::DualityAxiom(format!("coherence square fails at {x}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Duality;
    use crate::monoid::symmetric3;

    #[test]
    fn identity_is_duality_preserving() {
        let m = symmetric3();
        let c = FiniteCategory::from_monoid(&m);
        let cd = CategoryWithDuality {
            duality: Duality::from_monoid(&m, &c).unwrap(),
            category: c.clone(),
        };
        let id = DualityPreservingFunctor {
            functor: Functor::identity(&c),
            xi: vec![m.unit()],
        };
        assert!(id.validate(&cd, &cd).is_ok());
        // a non-central xi component breaks naturality
        let bad = DualityPreservingFunctor {
            functor: Functor::identity(&c),
            xi: vec![1],
        };
        assert!(bad.validate(&cd, &cd).is_err());
    }
}
