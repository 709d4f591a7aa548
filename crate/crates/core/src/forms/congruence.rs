//! Bounded search for integral congruences `Pᵀ F P = G`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::homology::IntegerMatrix;

use super::form::BilinearForm;

/// All vectors in `[-bound, bound]^n`.
fn box_vectors(n: usize, bound: i64) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<BigInt>| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(BigInt::from(x));
                    w
                })
            })
            .collect();
    }
    out
}

fn pair(f: &IntegerMatrix, x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.iter().zip(f.apply(y)).map(|(a, b)| a * b).sum()
}

/// Searches for a unimodular `P` with entries in `[-bound, bound]` and
/// `Pᵀ F P = G`, choosing columns one at a time.
pub fn find_congruence(f: &BilinearForm, g: &BilinearForm, bound: i64) -> Option<IntegerMatrix> {
    let n = f.rank();
    if g.rank() != n || f.epsilon != g.epsilon {
        return None;
    }
    let candidates = box_vectors(n, bound);
    let by_norm: Vec<Vec<&Vec<BigInt>>> = (0..n)
        .map(|j| candidates.iter().filter(|v| pair(&f.gram, v, v) == g.gram[(j, j)]).collect())
        .collect();
    let mut columns: Vec<&Vec<BigInt>> = Vec::with_capacity(n);
    fn extend<'a>(
        f: &BilinearForm,
        g: &BilinearForm,
        by_norm: &[Vec<&'a Vec<BigInt>>],
        columns: &mut Vec<&'a Vec<BigInt>>,
    ) -> bool {
        let j = columns.len();
        if j == by_norm.len() {
            let p = IntegerMatrix::from_rows(&(0..j).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect::<Vec<Vec<BigInt>>>())
                .expect("square");
            return p.determinant().map(|d| d.abs().is_one()).unwrap_or(false);
        }
        for &v in &by_norm[j] {
            if columns.iter().enumerate().all(|(i, c)| pair(&f.gram, c, v) == g.gram[(i, j)]) {
                columns.push(v);
                if extend(f, g, by_norm, columns) {
                    return true;
                }
                columns.pop();
            }
        }
        false
    }
    if !extend(f, g, &by_norm, &mut columns) {
        return None;
    }
    let rows: Vec<Vec<BigInt>> = (0..n).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    Some(IntegerMatrix::from_rows(&rows).expect("square"))
}
