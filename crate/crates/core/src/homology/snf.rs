//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `U · M · V = D` with `D` diagonal, `d_1 | d_2 | ...`, and `U`, `V`
/// unimodular. The inverses are carried along and checked, which certifies
/// unimodularity.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    /// Nonzero diagonal entries of `D`, all positive.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

struct Reducer {
    a: IntegerMatrix,
    transforms: Option<[IntegerMatrix; 4]>,
}

impl Reducer {
    fn row_add(&mut self, i: usize, j: usize, k: &BigInt) {
        self.a.add_row_multiple(i, j, k);
        if let Some([u, u_inv, _, _]) = &mut self.transforms {
            u.add_row_multiple(i, j, k);
            u_inv.add_col_multiple(j, i, &-k);
        }
    }

    fn col_add(&mut self, j: usize, i: usize, k: &BigInt) {
        self.a.add_col_multiple(j, i, k);
        if let Some([_, _, v, v_inv]) = &mut self.transforms {
            v.add_col_multiple(j, i, k);
            v_inv.add_row_multiple(i, j, &-k);
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some([u, u_inv, _, _]) = &mut self.transforms {
            u.swap_rows(i, j);
            u_inv.swap_cols(i, j);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some([_, _, v, v_inv]) = &mut self.transforms {
            v.swap_cols(i, j);
            v_inv.swap_rows(i, j);
        }
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some([u, u_inv, _, _]) = &mut self.transforms {
            u.negate_row(i);
            u_inv.negate_col(i);
        }
    }

    /// Position of a nonzero entry of least absolute value in the lower
    /// right block starting at `t`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut invariants = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_pivot(t) else { break };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(i, t)] / &self.a[(t, t)];
                    self.row_add(i, t, &-q);
                    dirty |= !self.a[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(t, j)] / &self.a[(t, t)];
                    self.col_add(j, t, &-q);
                    dirty |= !self.a[(t, j)].is_zero();
                }
                if dirty {
                    // a remainder smaller than the pivot is left; move it in
                    let (pi, pj) = self.min_pivot_in_cross(t);
                    self.row_swap(t, pi);
                    self.col_swap(t, pj);
                    continue;
                }
                // divisibility of the remaining block by the pivot
                let p = self.a[(t, t)].clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !(&self.a[(i, j)] % &p).is_zero()));
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.row_negate(t);
            }
            invariants.push(self.a[(t, t)].clone());
            t += 1;
        }
        invariants
    }

    /// Least nonzero entry in row `t` or column `t`.
    fn min_pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let cells = (t..self.a.rows()).map(|i| (i, t)).chain((t + 1..self.a.cols()).map(|j| (t, j)));
        cells
            .filter(|&c| !self.a[c].is_zero())
            .min_by(|&x, &y| self.a[x].abs().cmp(&self.a[y].abs()))
            .expect("cross has a nonzero entry")
    }
}

/// Full Smith form with transforms, verified by exact multiplication.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut r = Reducer {
        a: m.clone(),
        transforms: Some([
            IntegerMatrix::identity(m.rows()),
            IntegerMatrix::identity(m.rows()),
            IntegerMatrix::identity(m.cols()),
            IntegerMatrix::identity(m.cols()),
        ]),
    };
    let invariants = r.run();
    let [u, u_inv, v, v_inv] = r.transforms.expect("tracked");
    let d = r.a;
    assert!(d.is_diagonal(), "Smith form is not diagonal");
    assert!(invariants.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), "divisibility chain");
    assert_eq!(&(&u * m) * &v, d, "U M V != D");
    assert!((&u * &u_inv).is_identity(), "U is not unimodular");
    assert!((&v * &v_inv).is_identity(), "V is not unimodular");
    SmithForm {
        u,
        u_inv,
        d,
        v,
        v_inv,
        invariants,
    }
}

/// Nonzero invariant factors only, without transforms.
pub fn smith_form_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut r = Reducer {
        a: m.clone(),
        transforms: None,
    };
    let invariants = r.run();
    debug_assert!(r.a.is_diagonal());
    invariants
}
