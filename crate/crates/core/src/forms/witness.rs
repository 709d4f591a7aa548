//! Seeded randomized witnesses for the form computations.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::homology::IntegerMatrix;

use super::form::{evaluate, hyperbolic, standard_hyperbolic, BilinearForm};
use super::random::random_unimodular;
use super::symplectic::symplectic_normalize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvennessWitness {
    pub seed: u64,
    pub samples: usize,
    /// `f` ranges over square matrices of size at most this.
    pub max_rank: usize,
    /// `H(f)(x, x)` was even for every sampled `f` and `x`.
    pub hyperbolic_even: bool,
    /// `<1>(e, e)`, the odd value no hyperbolic form can take.
    #[serde(serialize_with = "crate::homology::matrix::serialize_bigint")]
    pub unit_form_value: BigInt,
}

/// Samples `H(f)(x, x)` for random `f` and `x` and checks it is even, and
/// evaluates `<1>` on its generator.
pub fn hyperbolic_evenness(seed: u64, samples: usize, max_rank: usize) -> EvennessWitness {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut even = true;
    for _ in 0..samples {
        let r = rng.gen_range(1..=max_rank.max(1));
        let mut f = IntegerMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                f[(i, j)] = BigInt::from(rng.gen_range(-5..=5));
            }
        }
        let h = hyperbolic(&f, 1).expect("square matrix");
        let x: Vec<BigInt> = (0..2 * r).map(|_| BigInt::from(rng.gen_range(-10..=10))).collect();
        even &= evaluate(&h, &x, &x).expect("matching length").is_even();
    }
    let one = BilinearForm::diagonal_unit(1);
    let e = [BigInt::from(1)];
    EvennessWitness {
        seed,
        samples,
        max_rank,
        hyperbolic_even: even,
        unit_form_value: evaluate(&one, &e, &e).expect("rank one"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticTrials {
    pub seed: u64,
    pub trials: usize,
    pub max_rank: usize,
    /// Number of trials per `n`, indexed by `n`.
    pub per_n: Vec<usize>,
    /// `Qᵀ A Q = J_n` with `det Q = ±1` was checked on every trial.
    pub verified: usize,
    pub failure: Option<String>,
}

/// Disguises `J_n` by random unimodular congruences and recovers it.
pub fn symplectic_trials(seed: u64, trials: usize, max_rank: usize) -> SymplecticTrials {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_n = vec![0; max_rank / 2 + 1];
    let mut verified = 0;
    let mut failure = None;
    for t in 0..trials {
        let n = rng.gen_range(0..=max_rank / 2);
        per_n[n] += 1;
        let j = standard_hyperbolic(n, -1);
        let p = random_unimodular(&mut rng, 2 * n, 4 * n + 2, 3);
        let a = j.congruent(&p).expect("square");
        let ok = match symplectic_normalize(&a) {
            Ok(normal) => {
                let det = normal.change_of_basis.determinant().expect("square");
                normal.n == n
                    && a.congruent(&normal.change_of_basis).expect("square").gram == j.gram
                    && (det == BigInt::from(1) || det == BigInt::from(-1))
            }
            Err(_) => false,
        };
        if ok {
            verified += 1;
        } else if failure.is_none() {
            failure = Some(format!("trial {t}: rank {} was not reduced to J_{n}", 2 * n));
        }
    }
    SymplecticTrials {
        seed,
        trials,
        max_rank,
        per_n,
        verified,
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_values_are_twice_an_integer() {
        // H(f)(x, x) = 2 yᵀ f z for x = (z, y), computed by hand
        let f = IntegerMatrix::from_i64(&[vec![1, -2], vec![3, 4]]);
        let h = hyperbolic(&f, 1).unwrap();
        let x: Vec<BigInt> = [1, 2, -1, 5].iter().map(|&v| BigInt::from(v)).collect();
        let fz = [1 - 4, 3 + 8];
        let by_hand = 2 * (-fz[0] + 5 * fz[1]);
        assert_eq!(evaluate(&h, &x, &x).unwrap(), BigInt::from(by_hand));
        let w = hyperbolic_evenness(3, 200, 5);
        assert!(w.hyperbolic_even);
        assert_eq!(w.unit_form_value, BigInt::from(1));
    }

    #[test]
    fn trials_are_reproducible() {
        let a = symplectic_trials(11, 20, 8);
        assert_eq!(a.verified, 20, "{:?}", a.failure);
        assert_eq!(a, symplectic_trials(11, 20, 8));
    }
}
