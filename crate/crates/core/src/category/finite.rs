//! Finite categories given by composition tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Objects and morphisms are indices. `compose[g][f]` is `g ∘ f`, defined
/// exactly when `target(f) = source(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let c = Self {
            objects,
            morphisms,
            identities,
            compose,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let (no, nm) = (self.objects.len(), self.morphisms.len());
        let fail = |msg: String| Err(Error::CategoryAxiom(msg));
        if let Some(f) = self.morphisms.iter().position(|m| m.source >= no || m.target >= no) {
            return fail(format!("morphism {f} has an endpoint outside the objects"));
        }
        if self.identities.len() != no {
            return fail(format!("{} identities for {no} objects", self.identities.len()));
        }
        for (c, &id) in self.identities.iter().enumerate() {
            if id >= nm || self.morphisms[id].source != c || self.morphisms[id].target != c {
                return fail(format!("identity of object {c} is not an endomorphism of it"));
            }
        }
        if self.compose.len() != nm || self.compose.iter().any(|row| row.len() != nm) {
            return fail(format!("composition table must be {nm}x{nm}"));
        }
        for g in 0..nm {
            for f in 0..nm {
                let composable = self.morphisms[f].target == self.morphisms[g].source;
                match self.compose[g][f] {
                    None if composable => return fail(format!("{g} ∘ {f} is missing")),
                    Some(_) if !composable => return fail(format!("{g} ∘ {f} is defined on non-composable arrows")),
                    Some(h) if h >= nm => return fail(format!("{g} ∘ {f} is not a morphism")),
                    Some(h) => {
                        let m = &self.morphisms[h];
                        if m.source != self.morphisms[f].source || m.target != self.morphisms[g].target {
                            return fail(format!("{g} ∘ {f} has the wrong endpoints"));
                        }
                    }
                    None => {}
                }
            }
        }
        for f in 0..nm {
            let m = &self.morphisms[f];
            if self.compose[f][self.identities[m.source]] != Some(f) || self.compose[self.identities[m.target]][f] != Some(f) {
                return fail(format!("identity law fails on {f}"));
            }
        }
        for f in 0..nm {
            for g in (0..nm).filter(|&g| self.morphisms[g].source == self.morphisms[f].target) {
                let gf = self.compose[g][f].expect("composable");
                for h in (0..nm).filter(|&h| self.morphisms[h].source == self.morphisms[g].target) {
                    let hg = self.compose[h][g].expect("composable");
                    if self.compose[h][gf] != self.compose[hg][f] {
                        return fail(format!("associativity fails on ({h}, {g}, {f})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, c: usize) -> &str {
        &self.objects[c]
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].target
    }

    pub fn identity(&self, c: usize) -> usize {
        self.identities[c]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.source(f)] == f
    }

    /// `g ∘ f`, if composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    /// `g ∘ f` for arrows known to be composable.
    pub fn then(&self, f: usize, g: usize) -> usize {
        self.compose[g][f].expect("composable arrows")
    }

    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.morphisms.len()).filter(move |&f| self.morphisms[f].source == a && self.morphisms[f].target == b)
    }

    /// An arrow `g` with `g f = id` and `f g = id`.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.source(f), self.target(f));
        self.hom(b, a)
            .find(|&g| self.compose(g, f) == Some(self.identity(a)) && self.compose(f, g) == Some(self.identity(b)))
    }

    /// The category with one object and `M` as endomorphisms, with
    /// `g ∘ f = f g` so that a chain of arrows reads as a bar word.
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        let morphisms = m
            .elements()
            .map(|x| Morphism {
                name: m.name(x).to_string(),
                source: 0,
                target: 0,
            })
            .collect();
        let compose = m.elements().map(|g| m.elements().map(|f| Some(m.mul(f, g))).collect()).collect();
        Self::new(vec!["*".into()], morphisms, vec![m.unit()], compose).expect("monoid category")
    }

    /// The poset `[n] = {0 < 1 < ... < n}`.
    pub fn poset(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("i <= j");
        let morphisms = pairs
            .iter()
            .map(|&(i, j)| Morphism {
                name: format!("{i}<={j}"),
                source: i,
                target: j,
            })
            .collect();
        let compose = pairs
            .iter()
            .map(|&(j, k)| pairs.iter().map(|&(i, j2)| (j2 == j).then(|| index(i, k))).collect())
            .collect();
        let identities = (0..=n).map(|i| index(i, i)).collect();
        Self::new((0..=n).map(|i| i.to_string()).collect(), morphisms, identities, compose).expect("poset category")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{cyclic, symmetric3};

    #[test]
    fn constructions_are_valid() {
        let p = FiniteCategory::poset(2);
        assert_eq!((p.object_count(), p.morphism_count()), (3, 6));
        assert_eq!(p.hom(2, 0).count(), 0);
        let s3 = FiniteCategory::from_monoid(&symmetric3());
        assert!((0..6).all(|f| s3.inverse(f).is_some()));
        assert_eq!(FiniteCategory::from_monoid(&cyclic(2)).morphism_count(), 2);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let m = |s, t| Morphism {
            name: String::new(),
            source: s,
            target: t,
        };
        // an arrow 0 -> 1 composed with itself
        let err = FiniteCategory::new(
            vec!["a".into(), "b".into()],
            vec![m(0, 0), m(1, 1), m(0, 1)],
            vec![0, 1],
            vec![vec![Some(0), None, None], vec![None, Some(1), Some(2)], vec![Some(2), None, Some(2)]],
        );
        assert!(matches!(err, Err(Error::CategoryAxiom(_))));
    }
}
