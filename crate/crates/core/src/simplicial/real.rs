//! Real simplicial sets and levelwise involutions.
//!
//! A real structure on `X` is a family `w_n: X_n -> X_n` with `w_n w_n = id`,
//! `d_i w_n = w_{n-1} d_{n-i}` and `s_j w_n = w_{n+1} s_{n-j}`. Subdividing
//! turns it into an honest simplicial involution on `Sd X`.

use crate::error::{Error, Result};

use super::constructions::Representable;
use super::set::{materialize, Labeled, SimplicialObject, SimplicialSet};
use super::subdivision::{sd, Subdivision};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealStructure {
    base: SimplicialSet,
    w: Vec<Vec<usize>>,
}

impl RealStructure {
    pub fn base(&self) -> &SimplicialSet {
        &self.base
    }

    pub fn w(&self, n: usize, x: usize) -> usize {
        self.w[n][x]
    }

    pub fn w_table(&self, n: usize) -> &[usize] {
        &self.w[n]
    }
}

/// Validates `w` against the base and every relation of the real structure.
pub fn attach_real_structure(base: SimplicialSet, w: Vec<Vec<usize>>) -> Result<RealStructure> {
    let top = base.max_degree();
    if w.len() != top + 1 {
        return Err(Error::Dimension(format!(
            "real structure given in {} degrees, simplicial set has {}",
            w.len(),
            top + 1
        )));
    }
    for (n, level) in w.iter().enumerate() {
        if level.len() != base.count(n) {
            return Err(Error::Dimension(format!("real structure table at degree {n}")));
        }
        if let Some(&bad) = level.iter().find(|&&y| y >= base.count(n)) {
            return Err(Error::Malformed(format!("real structure sends into missing simplex {bad} at degree {n}")));
        }
    }
    for n in 0..=top {
        if let Some(x) = (0..base.count(n)).find(|&x| w[n][w[n][x]] != x) {
            return Err(Error::RealRelation {
                relation: "w w = id",
                degree: n,
                index: 0,
                simplex: x,
            });
        }
    }
    for n in 1..=top {
        for x in 0..base.count(n) {
            if let Some(i) = (0..=n).find(|&i| w[n - 1][base.face(n, i, x)] != base.face(n, n - i, w[n][x])) {
                return Err(Error::RealRelation {
                    relation: "w d_i = d_{n-i} w",
                    degree: n,
                    index: i,
                    simplex: x,
                });
            }
        }
    }
    for n in 0..top {
        for x in 0..base.count(n) {
            if let Some(j) = (0..=n).find(|&j| w[n + 1][base.degeneracy(n, j, x)] != base.degeneracy(n, n - j, w[n][x])) {
                return Err(Error::RealRelation {
                    relation: "w s_j = s_{n-j} w",
                    degree: n,
                    index: j,
                    simplex: x,
                });
            }
        }
    }
    Ok(RealStructure { base, w })
}

/// A simplicial object with an order-reversing involution on labels.
pub trait RealSimplicialObject: SimplicialObject {
    fn reverse(&self, n: usize, x: &Self::Simplex) -> Self::Simplex;
}

impl<T: RealSimplicialObject + ?Sized> RealSimplicialObject for &T {
    fn reverse(&self, n: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).reverse(n, x)
    }
}

/// `Δ^m` with the reversal `k -> m - k`.
impl RealSimplicialObject for Representable {
    fn reverse(&self, _n: usize, x: &Vec<usize>) -> Vec<usize> {
        x.iter().rev().map(|&v| self.dim - v).collect()
    }
}

/// Tabulates a real simplicial object and validates its real structure.
pub fn materialize_real<X: RealSimplicialObject>(
    obj: &X,
    max_degree: usize,
) -> Result<(Labeled<X::Simplex>, RealStructure)> {
    let labeled = materialize(obj, max_degree)?;
    let w = (0..=max_degree)
        .map(|n| {
            labeled
                .labels(n)
                .iter()
                .map(|x| {
                    let y = obj.reverse(n, x);
                    labeled
                        .id(n, &y)
                        .ok_or_else(|| Error::Malformed(format!("reversal leaves degree {n}: {y:?}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let real = attach_real_structure(labeled.set.clone(), w)?;
    Ok((labeled, real))
}

/// The levelwise involution `Sd(w)` on a subdivided real object, on labels:
/// `(Sd X)_n = X_{2n+1}` acted on by `w_{2n+1}`.
impl<X: RealSimplicialObject> Subdivision<X> {
    pub fn act(&self, n: usize, x: &X::Simplex) -> X::Simplex {
        self.0.reverse(2 * n + 1, x)
    }
}

/// A simplicial set with a simplicial involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Action {
    set: SimplicialSet,
    action: Vec<Vec<usize>>,
}

impl C2Action {
    /// Checks that `action` is involutive and commutes with all faces and
    /// degeneracies.
    pub fn new(set: SimplicialSet, action: Vec<Vec<usize>>) -> Result<Self> {
        let top = set.max_degree();
        if action.len() != top + 1 || (0..=top).any(|n| action[n].len() != set.count(n)) {
            return Err(Error::Dimension("action table does not match the simplicial set".into()));
        }
        for n in 0..=top {
            for x in 0..set.count(n) {
                let a = action[n][x];
                if a >= set.count(n) || action[n][a] != x {
                    return Err(Error::NotSimplicial {
                        operator: "involution squared".into(),
                        degree: n,
                        simplex: x,
                    });
                }
                if n > 0 {
                    if let Some(i) = (0..=n).find(|&i| action[n - 1][set.face(n, i, x)] != set.face(n, i, a)) {
                        return Err(Error::NotSimplicial {
                            operator: format!("d_{i}"),
                            degree: n,
                            simplex: x,
                        });
                    }
                }
                if n < top {
                    if let Some(j) = (0..=n).find(|&j| action[n + 1][set.degeneracy(n, j, x)] != set.degeneracy(n, j, a)) {
                        return Err(Error::NotSimplicial {
                            operator: format!("s_{j}"),
                            degree: n,
                            simplex: x,
                        });
                    }
                }
            }
        }
        Ok(Self { set, action })
    }

    pub fn trivial(set: SimplicialSet) -> Self {
        let action = set.counts().iter().map(|&c| (0..c).collect()).collect();
        Self { set, action }
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.set
    }

    pub fn act(&self, n: usize, x: usize) -> usize {
        self.action[n][x]
    }

    pub fn action_table(&self, n: usize) -> &[usize] {
        &self.action[n]
    }

    /// Fixed simplices with the restricted structure maps. Labels are the
    /// identifiers in the ambient set, so the labels double as the inclusion.
    pub fn fixed_points(&self) -> Labeled<usize> {
        materialize(&Fixed(self), self.set.max_degree()).expect("fixed simplices form a simplicial subset")
    }
}

struct Fixed<'a>(&'a C2Action);

impl SimplicialObject for Fixed<'_> {
    type Simplex = usize;
    fn simplices(&self, n: usize) -> Vec<usize> {
        (0..self.0.set.count(n)).filter(|&x| self.0.act(n, x) == x).collect()
    }
    fn face(&self, n: usize, i: usize, x: &usize) -> usize {
        self.0.set.face(n, i, *x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &usize) -> usize {
        self.0.set.degeneracy(n, j, *x)
    }
}

/// Fixed points of a levelwise self-map; fails unless it is a simplicial
/// involution.
pub fn fixed_points(set: SimplicialSet, action: Vec<Vec<usize>>) -> Result<Labeled<usize>> {
    Ok(C2Action::new(set, action)?.fixed_points())
}

/// `Sd X` through `degree` with the involution `Sd(w)`.
pub fn sd_action(real: &RealStructure, degree: usize) -> Result<C2Action> {
    let set = sd(&real.base, degree)?;
    let action = (0..=degree).map(|n| real.w[2 * n + 1].clone()).collect();
    C2Action::new(set, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructions::{discrete, representable};

    #[test]
    fn identity_on_constant_set_is_real() {
        let x = discrete(3, 3);
        let w = x.counts().iter().map(|&c| (0..c).collect()).collect();
        assert!(attach_real_structure(x, w).is_ok());
    }

    #[test]
    fn standard_simplex_reversal_is_real() {
        let (_, real) = materialize_real(&Representable { dim: 2 }, 3).unwrap();
        let action = sd_action(&real, 1).unwrap();
        for n in 0..=1 {
            for x in 0..action.set().count(n) {
                assert_eq!(action.act(n, action.act(n, x)), x);
            }
        }
    }

    #[test]
    fn vertex_swap_with_fixed_edges_is_rejected() {
        // w_0 swaps the vertices of Δ^1 while w_1 fixes every 1-simplex
        let d1 = representable(1, 1);
        let w = vec![vec![1, 0], vec![0, 1, 2]];
        let err = attach_real_structure(d1.set, w).unwrap_err();
        assert!(matches!(err, Error::RealRelation { relation: "w d_i = d_{n-i} w", degree: 1, .. }));
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let x = representable(2, 2).set;
        let fixed = C2Action::trivial(x.clone()).fixed_points();
        assert_eq!(fixed.set, x);
    }

    #[test]
    fn non_simplicial_action_is_rejected() {
        // swapping the two vertices of Δ^1 but fixing all edges
        let d1 = representable(1, 1).set;
        assert!(fixed_points(d1, vec![vec![1, 0], vec![0, 1, 2]]).is_err());
    }
}
