//! Segal edgewise subdivision.
//!
//! `(Sd X)_n = X_{2n+1}`, where `[2n+1]` is read as `[n]` followed by the
//! reversed `[n]`, and a monotone `θ: [m] -> [n]` acts through `θ ⊔ θ^op`.

use crate::error::Result;

use super::set::{
    apply_operator, codegeneracy, coface, materialize, SimplicialObject, SimplicialSet,
};

/// `θ ⊔ θ^op: [2m+1] -> [2n+1]` for `θ: [m] -> [n]`.
pub fn sd_map(theta: &[usize], n: usize) -> Vec<usize> {
    let m = theta.len() - 1;
    (0..=2 * m + 1)
        .map(|k| if k <= m { theta[k] } else { 2 * n + 1 - theta[2 * m + 1 - k] })
        .collect()
}

/// The subdivision of a simplicial object, computed on labels.
#[derive(Clone, Debug)]
pub struct Subdivision<X>(pub X);

impl<X: SimplicialObject> SimplicialObject for Subdivision<X> {
    type Simplex = X::Simplex;

    fn simplices(&self, n: usize) -> Vec<X::Simplex> {
        self.0.simplices(2 * n + 1)
    }

    fn face(&self, n: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        apply_operator(&self.0, 2 * n + 1, x, &sd_map(&coface(n, i), n))
    }

    fn degeneracy(&self, n: usize, j: usize, x: &X::Simplex) -> X::Simplex {
        apply_operator(&self.0, 2 * n + 1, x, &sd_map(&codegeneracy(n, j), n))
    }

    fn truncation(&self) -> Option<usize> {
        self.0.truncation().map(|t| t.saturating_sub(1) / 2)
    }
}

/// `Sd X` through degree `degree`; needs `X` truncated at `2 degree + 1`.
///
/// Identifiers of `(Sd X)_n` coincide with those of `X_{2n+1}`.
pub fn sd(x: &SimplicialSet, degree: usize) -> Result<SimplicialSet> {
    x.require(2 * degree + 1, "sd")?;
    Ok(materialize(&Subdivision(x), degree)?.set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructions::{circle, representable};

    #[test]
    fn sd_map_of_identity_is_identity() {
        assert_eq!(sd_map(&[0, 1, 2], 2), vec![0, 1, 2, 3, 4, 5]);
        // δ^0: [0] -> [1] becomes the inclusion of the middle pair
        assert_eq!(sd_map(&[1], 1), vec![1, 2]);
    }

    #[test]
    fn sd_faces_match_closed_formula() {
        // d_i on Sd X equals d_i d_{2n+1-i} on X
        let x = representable(2, 5).set;
        let s = sd(&x, 2).unwrap();
        for n in 1..=2 {
            for i in 0..=n {
                for v in 0..s.count(n) {
                    let direct = x.face(2 * n, i, x.face(2 * n + 1, 2 * n + 1 - i, v));
                    assert_eq!(s.face(n, i, v), direct);
                }
            }
        }
        for n in 0..2 {
            for j in 0..=n {
                for v in 0..s.count(n) {
                    let direct = x.degeneracy(2 * n + 2, 2 * n + 2 - j, x.degeneracy(2 * n + 1, j, v));
                    assert_eq!(s.degeneracy(n, j, v), direct);
                }
            }
        }
    }

    #[test]
    fn subdivision_degree_zero_is_edges() {
        let d1 = representable(1, 3).set;
        assert_eq!(sd(&d1, 0).unwrap().count(0), 3);
        assert_eq!(sd(&d1, 1).unwrap().count(0), d1.count(1));
        assert_eq!(sd(&circle(1), 0).unwrap().count(0), 2);
    }

    #[test]
    fn insufficient_truncation_fails() {
        let d1 = representable(1, 2).set;
        assert!(sd(&d1, 1).is_err());
    }
}
