//! Sublattices of `Z^n` given by generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::AbelianGroup;
use super::matrix::IntegerMatrix;
use super::snf::{smith_form_invariants, smith_normal_form, SmithForm};

/// The span of the columns of a generator matrix.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient: usize,
    snf: SmithForm,
}

impl Lattice {
    pub fn span(generators: &IntegerMatrix) -> Self {
        Self {
            ambient: generators.rows(),
            snf: smith_normal_form(generators),
        }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// A basis, as columns: `U^{-1} e_i · d_i`.
    pub fn basis(&self) -> IntegerMatrix {
        let mut b = IntegerMatrix::zeros(self.ambient, self.rank());
        for (i, d) in self.snf.invariants.iter().enumerate() {
            for (row, v) in self.snf.u_inv.column(i).into_iter().enumerate() {
                b[(row, i)] = v * d;
            }
        }
        b
    }

    /// Coordinates of `y` in [`Lattice::basis`], or `None` when `y` is not in
    /// the lattice.
    pub fn coords(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let z = self.snf.u.apply(y);
        let r = self.rank();
        if z[r..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        z[..r]
            .iter()
            .zip(&self.snf.invariants)
            .map(|(v, d)| {
                let (q, rem) = v.div_rem(d);
                rem.is_zero().then_some(q)
            })
            .collect()
    }

    /// `self / span(sub)`; every column of `sub` must lie in `self`.
    pub fn quotient_by(&self, sub: &IntegerMatrix) -> AbelianGroup {
        let r = self.rank();
        let mut coords = IntegerMatrix::zeros(r, sub.cols());
        for j in 0..sub.cols() {
            let c = self.coords(&sub.column(j)).expect("sublattice generator lies in the lattice");
            for (i, v) in c.into_iter().enumerate() {
                coords[(i, j)] = v;
            }
        }
        let inv = smith_form_invariants(&coords);
        AbelianGroup::from_invariants(r - inv.len(), inv.into_iter().filter(|d| !d.is_one()))
    }
}

/// Generators (as columns) of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntegerMatrix) -> IntegerMatrix {
    let s = smith_normal_form(m);
    s.v.select_columns(s.rank()..m.cols())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_quotient() {
        // span of (2, 0) and (0, 3) inside Z^2
        let l = Lattice::span(&IntegerMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert!(l.coords(&[BigInt::from(4), BigInt::from(3)]).is_some());
        assert!(l.coords(&[BigInt::from(1), BigInt::from(0)]).is_none());
        let full = Lattice::span(&IntegerMatrix::identity(2));
        let q = full.quotient_by(&IntegerMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(q, AbelianGroup::cyclic(6));
    }

    #[test]
    fn kernel_of_row() {
        let k = integer_kernel(&IntegerMatrix::from_i64(&[vec![2, 4]]));
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!((&BigInt::from(2) * &v[0] + &BigInt::from(4) * &v[1]).is_zero());
    }
}
