//! Symplectic bases for unimodular alternating forms over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::IntegerMatrix;

use super::form::{standard_hyperbolic, BilinearForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticNormalForm {
    /// `Pᵀ A P = J_n`.
    pub change_of_basis: IntegerMatrix,
    pub n: usize,
}

/// `B <- Eᵀ B E` and `P <- P E` for `E` adding `k` times basis vector `i`
/// to basis vector `j`.
fn add_basis_multiple(b: &mut IntegerMatrix, p: &mut IntegerMatrix, j: usize, i: usize, k: &BigInt) {
    b.add_col_multiple(j, i, k);
    b.add_row_multiple(j, i, k);
    p.add_col_multiple(j, i, k);
}

fn swap_basis(b: &mut IntegerMatrix, p: &mut IntegerMatrix, i: usize, j: usize) {
    b.swap_cols(i, j);
    b.swap_rows(i, j);
    p.swap_cols(i, j);
}

fn negate_basis(b: &mut IntegerMatrix, p: &mut IntegerMatrix, i: usize) {
    b.negate_col(i);
    b.negate_row(i);
    p.negate_col(i);
}

/// Finds `P` with `Pᵀ A P = [[0, I], [-I, 0]]`.
///
/// Each step runs Euclid on row `s` to leave a single entry, which is a unit
/// by unimodularity, moves it to `(s, s+1)`, clears row `s+1` using column
/// `s` and recurses on the complement. A final permutation reorders
/// `e_1, f_1, e_2, f_2, ...` into `e_1, ..., e_n, f_1, ..., f_n`.
pub fn symplectic_normalize(f: &BilinearForm) -> Result<SymplecticNormalForm> {
    if f.epsilon != -1 {
        return Err(Error::BadEpsilon(f.epsilon as i64));
    }
    let size = f.rank();
    if size % 2 == 1 {
        return Err(Error::OddRank(size));
    }
    f.require_nondegenerate()?;
    let mut b = f.gram.clone();
    let mut p = IntegerMatrix::identity(size);
    for s in (0..size).step_by(2) {
        loop {
            let pivot = (s + 1..size)
                .filter(|&j| !b[(s, j)].is_zero())
                .min_by_key(|&j| b[(s, j)].abs())
                .ok_or_else(|| Error::Degenerate("row of zeros".into()))?;
            swap_basis(&mut b, &mut p, s + 1, pivot);
            let mut done = true;
            for j in s + 2..size {
                if b[(s, j)].is_zero() {
                    continue;
                }
                let q = b[(s, j)].div_floor(&b[(s, s + 1)]);
                add_basis_multiple(&mut b, &mut p, j, s + 1, &-q);
                if !b[(s, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !b[(s, s + 1)].abs().is_one() {
            return Err(Error::Degenerate(format!("pivot {} is not a unit", b[(s, s + 1)])));
        }
        if b[(s, s + 1)].is_negative() {
            negate_basis(&mut b, &mut p, s + 1);
        }
        // B[s+1][s] = -1, so adding B[s+1][j] e_s to e_j clears (s+1, j)
        for j in s + 2..size {
            let k = b[(s + 1, j)].clone();
            add_basis_multiple(&mut b, &mut p, j, s, &k);
        }
    }
    let n = size / 2;
    let order: Vec<usize> = (0..n).map(|k| 2 * k).chain((0..n).map(|k| 2 * k + 1)).collect();
    let p = p.select_columns(order);
    let normal = f.congruent(&p)?;
    assert_eq!(normal.gram, standard_hyperbolic(n, -1).gram, "symplectic reduction failed");
    assert!(p.determinant()?.abs().is_one());
    Ok(SymplecticNormalForm { change_of_basis: p, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::form::validate_form;

    #[test]
    fn standard_form_is_fixed() {
        let j = standard_hyperbolic(1, -1);
        let r = symplectic_normalize(&j).unwrap();
        assert_eq!(r.n, 1);
        assert!(r.change_of_basis.is_identity());
    }

    #[test]
    fn four_by_four_example() {
        let a = validate_form(
            IntegerMatrix::from_i64(&[vec![0, 1, 0, 0], vec![-1, 0, 3, 0], vec![0, -3, 0, 1], vec![0, 0, -1, 0]]),
            -1,
        )
        .unwrap();
        let r = symplectic_normalize(&a).unwrap();
        assert_eq!(r.n, 2);
        assert_eq!(a.congruent(&r.change_of_basis).unwrap(), standard_hyperbolic(2, -1));
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(symplectic_normalize(&BilinearForm::diagonal_unit(1)), Err(Error::BadEpsilon(1)));
        let degenerate = validate_form(IntegerMatrix::from_i64(&[vec![0, 2], vec![-2, 0]]), -1).unwrap();
        assert!(matches!(symplectic_normalize(&degenerate), Err(Error::Degenerate(_))));
        let odd = validate_form(IntegerMatrix::zeros(1, 1), -1).unwrap();
        assert_eq!(symplectic_normalize(&odd), Err(Error::OddRank(1)));
    }
}
