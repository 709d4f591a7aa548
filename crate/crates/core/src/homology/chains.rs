//! Normalized chain complexes of simplicial sets.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialSet;

use super::group::AbelianGroup;
use super::matrix::SparseMatrix;

/// Normalized chains `C_0, ..., C_top` with basis the nondegenerate
/// simplices. `boundary(n)` maps `C_n -> C_{n-1}`; `boundary(0)` has no rows.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    basis: Vec<Vec<usize>>,
    /// `position[n][x]` is the basis index of simplex `x`, if nondegenerate.
    position: Vec<Vec<Option<usize>>>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Highest degree with chains.
    pub fn top(&self) -> usize {
        self.basis.len() - 1
    }

    /// Highest degree whose homology is determined.
    pub fn homology_degree(&self) -> usize {
        self.top() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.basis[n].len()
    }

    pub fn basis(&self, n: usize) -> &[usize] {
        &self.basis[n]
    }

    /// Basis index of a simplex, or `None` when it is degenerate.
    pub fn position(&self, n: usize, simplex: usize) -> Option<usize> {
        self.position[n][simplex]
    }

    pub fn boundary(&self, n: usize) -> &SparseMatrix {
        &self.boundaries[n]
    }

    /// `H_q` as an abstract group.
    pub fn homology(&self, q: usize) -> Result<AbelianGroup> {
        if q > self.homology_degree() {
            return Err(Error::DegreeOutOfRange {
                degree: q,
                max: self.homology_degree(),
            });
        }
        let (rank_q, _) = self.boundaries[q].smith_invariants();
        let (rank_next, invariants) = self.boundaries[q + 1].smith_invariants();
        Ok(AbelianGroup::from_invariants(
            self.rank(q) - rank_q - rank_next,
            invariants.into_iter().filter(|d| *d > BigInt::from(1)),
        ))
    }

    /// `H_0, ..., H_d`, computing each boundary's Smith form once.
    pub fn all_homology(&self) -> Vec<AbelianGroup> {
        let ranks: Vec<(usize, Vec<BigInt>)> = self.boundaries.iter().map(SparseMatrix::smith_invariants).collect();
        (0..=self.homology_degree())
            .map(|q| {
                AbelianGroup::from_invariants(
                    self.rank(q) - ranks[q].0 - ranks[q + 1].0,
                    ranks[q + 1].1.iter().filter(|d| **d > BigInt::from(1)).cloned(),
                )
            })
            .collect()
    }
}

/// Normalized chains of `x` in degrees `0..=d+1`, enough for `H_0..H_d`.
pub fn normalized_chains(x: &SimplicialSet, d: usize) -> Result<ChainComplex> {
    x.require(d + 1, "normalized chains")?;
    let top = d + 1;
    let basis: Vec<Vec<usize>> = (0..=top).map(|n| x.nondegenerate(n)).collect();
    let position: Vec<Vec<Option<usize>>> = (0..=top)
        .map(|n| {
            let mut pos = vec![None; x.count(n)];
            for (k, &s) in basis[n].iter().enumerate() {
                pos[s] = Some(k);
            }
            pos
        })
        .collect();
    let mut boundaries = vec![SparseMatrix::new(0, vec![BTreeMap::new(); basis[0].len()])];
    for n in 1..=top {
        let columns = basis[n]
            .iter()
            .map(|&s| {
                let mut col: BTreeMap<usize, i64> = BTreeMap::new();
                for i in 0..=n {
                    if let Some(k) = position[n - 1][x.face(n, i, s)] {
                        *col.entry(k).or_default() += if i % 2 == 0 { 1 } else { -1 };
                    }
                }
                col.retain(|_, v| *v != 0);
                col
            })
            .collect();
        boundaries.push(SparseMatrix::new(basis[n - 1].len(), columns));
    }
    for n in 1..top {
        for j in 0..boundaries[n + 1].cols() {
            let dd = boundaries[n].apply_sparse(boundaries[n + 1].column(j));
            assert!(dd.is_empty(), "boundary of boundary is nonzero in degree {}", n + 1);
        }
    }
    Ok(ChainComplex {
        basis,
        position,
        boundaries,
    })
}

/// `H_0, ..., H_d` of a simplicial set truncated at `d + 1` or above.
pub fn homology_through(x: &SimplicialSet, d: usize) -> Result<Vec<AbelianGroup>> {
    Ok(normalized_chains(x, d)?.all_homology())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructions::{circle, discrete, point, representable};

    #[test]
    fn point_homology() {
        let h = homology_through(&point(3), 2).unwrap();
        assert_eq!(h, vec![AbelianGroup::free(1), AbelianGroup::trivial(), AbelianGroup::trivial()]);
    }

    #[test]
    fn circle_homology() {
        let h = homology_through(&circle(3), 2).unwrap();
        assert_eq!(h, vec![AbelianGroup::free(1), AbelianGroup::free(1), AbelianGroup::trivial()]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let h = homology_through(&representable(3, 4).set, 3).unwrap();
        assert_eq!(h[0], AbelianGroup::free(1));
        assert!(h[1..].iter().all(AbelianGroup::is_trivial));
    }

    #[test]
    fn two_points() {
        let c = normalized_chains(&discrete(2, 1), 0).unwrap();
        assert_eq!(c.homology(0).unwrap(), AbelianGroup::free(2));
        assert!(matches!(c.homology(1), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn truncation_is_enforced() {
        assert!(normalized_chains(&point(2), 2).is_err());
    }
}
