//! Integral `ε`-symmetric bilinear forms given by Gram matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::matrix::serialize_bigint;
use crate::homology::IntegerMatrix;

/// `φ(x, y) = xᵀ G y` on `Z^n` with `Gᵀ = ε G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilinearForm {
    pub gram: IntegerMatrix,
    pub epsilon: i8,
}

impl BilinearForm {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("square Gram matrix")
    }

    /// `|det G| = 1`.
    pub fn is_nondegenerate(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate(self.determinant().to_string()))
        }
    }

    /// The zero form on `Z^0`, the unit for [`orthogonal_sum`].
    pub fn zero(epsilon: i8) -> Self {
        Self {
            gram: IntegerMatrix::zeros(0, 0),
            epsilon,
        }
    }

    /// `⟨a⟩` on `Z`.
    pub fn diagonal_unit(a: i64) -> Self {
        Self {
            gram: IntegerMatrix::from_i64(&[vec![a]]),
            epsilon: 1,
        }
    }

    /// `Pᵀ G P`.
    pub fn congruent(&self, p: &IntegerMatrix) -> Result<Self> {
        let gram = p.transpose().checked_mul(&self.gram)?.checked_mul(p)?;
        Ok(Self {
            gram,
            epsilon: self.epsilon,
        })
    }
}

pub fn validate_form(gram: IntegerMatrix, epsilon: i64) -> Result<BilinearForm> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::BadEpsilon(epsilon));
    }
    if !gram.is_square() {
        return Err(Error::Dimension(format!("Gram matrix is {}x{}", gram.rows(), gram.cols())));
    }
    let n = gram.rows();
    let eps = BigInt::from(epsilon);
    for i in 0..n {
        for j in i..n {
            if gram[(j, i)] != &eps * &gram[(i, j)] {
                return Err(Error::FormSymmetry {
                    expected: epsilon as i8,
                    row: i,
                    col: j,
                });
            }
        }
    }
    Ok(BilinearForm {
        gram,
        epsilon: epsilon as i8,
    })
}

pub fn orthogonal_sum(f: &BilinearForm, g: &BilinearForm) -> Result<BilinearForm> {
    if f.epsilon != g.epsilon {
        return Err(Error::EpsilonMismatch);
    }
    Ok(BilinearForm {
        gram: f.gram.block_diagonal(&g.gram),
        epsilon: f.epsilon,
    })
}

/// `H(f)` with Gram `[[0, fᵀ], [ε f, 0]]`.
pub fn hyperbolic(f: &IntegerMatrix, epsilon: i64) -> Result<BilinearForm> {
    if !f.is_square() {
        return Err(Error::Dimension(format!("hyperbolic form of a {}x{} matrix", f.rows(), f.cols())));
    }
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::BadEpsilon(epsilon));
    }
    let n = f.rows();
    let mut gram = IntegerMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, n + j)] = f[(j, i)].clone();
            gram[(n + i, j)] = &f[(i, j)] * epsilon;
        }
    }
    validate_form(gram, epsilon)
}

/// `H^n` for `ε = 1` and `₋₁H^n` for `ε = -1`.
pub fn standard_hyperbolic(n: usize, epsilon: i64) -> BilinearForm {
    hyperbolic(&IntegerMatrix::identity(n), epsilon).expect("identity is square")
}

pub fn evaluate(f: &BilinearForm, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    let n = f.rank();
    if x.len() != n || y.len() != n {
        return Err(Error::Dimension(format!("vectors of length {} and {} for a rank {n} form", x.len(), y.len())));
    }
    Ok(x.iter().zip(f.gram.apply(y)).map(|(a, b)| a * b).sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormInvariants {
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub determinant: BigInt,
    /// Positive and negative eigenvalue counts; `None` for `ε = -1`.
    pub signature: Option<(usize, usize)>,
    /// All diagonal entries even; `None` for `ε = -1`.
    pub even: Option<bool>,
}

/// Coefficients `c_0, ..., c_n` of `det(x I - A)` by Faddeev–LeVerrier, with
/// exact division.
pub fn characteristic_polynomial(a: &IntegerMatrix) -> Vec<BigInt> {
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntegerMatrix::zeros(n, n);
    for k in 1..=n {
        for i in 0..n {
            m[(i, i)] += &coeffs[n - k + 1];
        }
        let am = a * &m;
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division is exact over the integers");
        coeffs[n - k] = q;
        m = am;
    }
    coeffs
}

fn sign_changes(coeffs: impl Iterator<Item = BigInt>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(p, q)` for a symmetric matrix: Descartes' rule is exact on real-rooted
/// polynomials, applied to `χ(x)` and `χ(-x)`.
pub fn signature(a: &IntegerMatrix) -> (usize, usize) {
    let c = characteristic_polynomial(a);
    let positive = sign_changes(c.iter().cloned());
    let negative = sign_changes(c.iter().enumerate().map(|(k, v)| if k % 2 == 1 { -v } else { v.clone() }));
    (positive, negative)
}

pub fn invariants(f: &BilinearForm) -> FormInvariants {
    let symmetric = f.epsilon == 1;
    FormInvariants {
        rank: f.rank(),
        determinant: f.determinant(),
        signature: symmetric.then(|| signature(&f.gram)),
        even: symmetric.then(|| (0..f.rank()).all(|i| f.gram[(i, i)].is_even())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_form(IntegerMatrix::from_i64(&[vec![1]]), 1).unwrap().is_nondegenerate());
        assert!(validate_form(IntegerMatrix::from_i64(&[vec![0, 1], vec![-1, 0]]), -1).is_ok());
        let degenerate = validate_form(IntegerMatrix::from_i64(&[vec![0, 2], vec![2, 0]]), 1).unwrap();
        assert_eq!(degenerate.determinant(), BigInt::from(-4));
        assert!(!degenerate.is_nondegenerate());
        assert!(matches!(
            validate_form(IntegerMatrix::from_i64(&[vec![0, 1], vec![1, 0]]), -1),
            Err(Error::FormSymmetry { expected: -1, .. })
        ));
        assert!(matches!(
            validate_form(IntegerMatrix::from_i64(&[vec![1, 0], vec![0, 1]]), -1),
            Err(Error::FormSymmetry { row: 0, col: 0, .. })
        ));
        assert_eq!(validate_form(IntegerMatrix::identity(1), 2), Err(Error::BadEpsilon(2)));
    }

    #[test]
    fn hyperbolic_examples() {
        assert_eq!(standard_hyperbolic(1, 1).gram, IntegerMatrix::from_i64(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(standard_hyperbolic(1, -1).gram, IntegerMatrix::from_i64(&[vec![0, 1], vec![-1, 0]]));
        let h2 = hyperbolic(&IntegerMatrix::from_i64(&[vec![2]]), 1).unwrap();
        assert_eq!(h2.determinant(), BigInt::from(-4));
        let f = IntegerMatrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        let h = hyperbolic(&f, -1).unwrap();
        assert_eq!(h.gram[(0, 3)], BigInt::from(3));
        assert_eq!(h.gram[(3, 0)], BigInt::from(-3));
    }

    #[test]
    fn sums_and_evaluation() {
        let one = BilinearForm::diagonal_unit(1);
        assert_eq!(orthogonal_sum(&one, &BilinearForm::zero(1)).unwrap(), one);
        let two = orthogonal_sum(&one, &one).unwrap();
        assert_eq!(invariants(&two).signature, Some((2, 0)));
        assert_eq!(orthogonal_sum(&one, &standard_hyperbolic(1, -1)), Err(Error::EpsilonMismatch));
        assert_eq!(evaluate(&one, &v(&[1]), &v(&[1])).unwrap(), BigInt::one());
        let h = standard_hyperbolic(2, 1);
        assert_eq!(evaluate(&h, &v(&[1, 2, 3, 4]), &v(&[1, 2, 3, 4])).unwrap(), BigInt::from(2 * (3 + 8)));
    }

    #[test]
    fn invariant_examples() {
        let one = invariants(&BilinearForm::diagonal_unit(1));
        assert_eq!((one.rank, one.signature, one.even), (1, Some((1, 0)), Some(false)));
        let h = invariants(&standard_hyperbolic(1, 1));
        assert_eq!((h.determinant.clone(), h.signature, h.even), (BigInt::from(-1), Some((1, 1)), Some(true)));
        let j = invariants(&standard_hyperbolic(2, -1));
        assert_eq!((j.rank, j.determinant), (4, BigInt::one()));
    }

    #[test]
    fn characteristic_polynomial_of_a_small_matrix() {
        // x^2 - 5x - 2
        let c = characteristic_polynomial(&IntegerMatrix::from_i64(&[vec![1, 2], vec![3, 4]]));
        assert_eq!(c, v(&[-2, -5, 1]));
        // a zero eigenvalue counts on neither side
        assert_eq!(signature(&IntegerMatrix::from_i64(&[vec![1, 1], vec![1, 1]])), (1, 0));
    }
}
