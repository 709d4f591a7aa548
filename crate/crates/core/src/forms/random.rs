//! Seeded random unimodular matrices and forms.

use num_bigint::BigInt;
use rand::Rng;

use crate::homology::IntegerMatrix;

use super::form::{validate_form, BilinearForm};

/// A product of `steps` random elementary matrices with multipliers in
/// `[-bound, bound]`, followed by random sign flips; determinant `±1`.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize, bound: i64) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m.negate_col(0);
        }
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = BigInt::from(rng.gen_range(-bound..=bound));
        m.add_col_multiple(i, j, &k);
    }
    for c in 0..n {
        if rng.gen_bool(0.5) {
            m.negate_col(c);
        }
    }
    m
}

/// A random symmetric (`ε = 1`) or alternating (`ε = -1`) Gram matrix with
/// entries in `[-bound, bound]`; usually degenerate.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, epsilon: i64, bound: i64) -> BilinearForm {
    let mut g = IntegerMatrix::zeros(n, n);
    for i in 0..n {
        if epsilon == 1 {
            g[(i, i)] = BigInt::from(rng.gen_range(-bound..=bound));
        }
        for j in i + 1..n {
            let v = BigInt::from(rng.gen_range(-bound..=bound));
            g[(j, i)] = &v * epsilon;
            g[(i, j)] = v;
        }
    }
    validate_form(g, epsilon).expect("constructed with the right symmetry")
}
