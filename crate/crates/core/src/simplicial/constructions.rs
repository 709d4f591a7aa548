//! Standard small simplicial sets.

use crate::error::{Error, Result};

use super::set::{materialize, monotone_maps, Labeled, SimplicialObject, SimplicialSet};

/// The standard simplex `Δ^m`: degree-`n` simplices are monotone maps
/// `[n] -> [m]`, written as vertex sequences.
#[derive(Clone, Copy, Debug)]
pub struct Representable {
    pub dim: usize,
}

impl SimplicialObject for Representable {
    type Simplex = Vec<usize>;

    fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        monotone_maps(n, self.dim)
    }

    fn face(&self, _n: usize, i: usize, x: &Vec<usize>) -> Vec<usize> {
        let mut y = x.clone();
        y.remove(i);
        y
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Vec<usize>) -> Vec<usize> {
        let mut y = x.clone();
        y.insert(j, x[j]);
        y
    }
}

/// `Δ^m` truncated at `max_degree`.
pub fn representable(m: usize, max_degree: usize) -> Labeled<Vec<usize>> {
    materialize(&Representable { dim: m }, max_degree).expect("standard simplex is well formed")
}

/// A discrete simplicial set: the same finite set in every degree with
/// identity structure maps.
#[derive(Clone, Copy, Debug)]
pub struct Discrete {
    pub size: usize,
}

impl SimplicialObject for Discrete {
    type Simplex = usize;

    fn simplices(&self, _n: usize) -> Vec<usize> {
        (0..self.size).collect()
    }

    fn face(&self, _n: usize, _i: usize, x: &usize) -> usize {
        *x
    }

    fn degeneracy(&self, _n: usize, _j: usize, x: &usize) -> usize {
        *x
    }
}

pub fn discrete(size: usize, max_degree: usize) -> SimplicialSet {
    materialize(&Discrete { size }, max_degree)
        .expect("discrete set is well formed")
        .set
}

pub fn point(max_degree: usize) -> SimplicialSet {
    discrete(1, max_degree)
}

/// The sub-simplicial set of `Δ^m` of simplices missing at least one vertex,
/// as a membership predicate on labels.
pub fn in_boundary(m: usize, simplex: &[usize]) -> bool {
    (0..=m).any(|v| !simplex.contains(&v))
}

/// Collapses a subcomplex to a single base point.
///
/// `member[n][x]` marks the simplices of the subcomplex; it must be closed
/// under faces and degeneracies. The base point takes identifier 0 in every
/// degree when the subcomplex is nonempty; other simplices keep their
/// relative order.
pub fn collapse(x: &SimplicialSet, member: &[Vec<bool>]) -> Result<SimplicialSet> {
    let top = x.max_degree();
    if member.len() != top + 1 || (0..=top).any(|n| member[n].len() != x.count(n)) {
        return Err(Error::Dimension("membership table does not match the simplicial set".into()));
    }
    for n in 0..=top {
        for s in (0..x.count(n)).filter(|&s| member[n][s]) {
            if n > 0 && (0..=n).any(|i| !member[n - 1][x.face(n, i, s)]) {
                return Err(Error::Malformed(format!("subcomplex not closed under faces at degree {n}")));
            }
            if n < top && (0..=n).any(|j| !member[n + 1][x.degeneracy(n, j, s)]) {
                return Err(Error::Malformed(format!(
                    "subcomplex not closed under degeneracies at degree {n}"
                )));
            }
        }
    }
    let nonempty = member[0].iter().any(|&b| b);
    // new identifiers
    let relabel: Vec<Vec<usize>> = (0..=top)
        .map(|n| {
            let mut next = usize::from(nonempty);
            (0..x.count(n))
                .map(|s| {
                    if member[n][s] {
                        0
                    } else {
                        next += 1;
                        next - 1
                    }
                })
                .collect()
        })
        .collect();
    let counts: Vec<usize> = (0..=top)
        .map(|n| usize::from(nonempty) + member[n].iter().filter(|&&b| !b).count())
        .collect();
    let survivors = |n: usize| (0..x.count(n)).filter(move |&s| !member[n][s]);
    let faces = (0..=top)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    let mut table = vec![0; counts[n]];
                    for s in survivors(n) {
                        table[relabel[n][s]] = relabel[n - 1][x.face(n, i, s)];
                    }
                    table
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..top)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    let mut table = vec![0; counts[n]];
                    for s in survivors(n) {
                        table[relabel[n][s]] = relabel[n + 1][x.degeneracy(n, j, s)];
                    }
                    table
                })
                .collect()
        })
        .collect();
    SimplicialSet::from_tables(counts, faces, degeneracies)
}

/// The simplicial circle `Δ^1 / ∂Δ^1`.
pub fn circle(max_degree: usize) -> SimplicialSet {
    let simplex = representable(1, max_degree);
    let member: Vec<Vec<bool>> = (0..=max_degree)
        .map(|n| simplex.labels(n).iter().map(|s| in_boundary(1, s)).collect())
        .collect();
    collapse(&simplex.set, &member).expect("boundary is a subcomplex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_has_one_simplex_per_degree() {
        let p = representable(0, 3);
        assert_eq!(p.set.counts(), &[1, 1, 1, 1]);
        assert_eq!(p.set.nondegenerate(1), Vec::<usize>::new());
    }

    #[test]
    fn standard_simplex_counts() {
        // monotone maps [1] -> [1]: 00, 01, 11
        assert_eq!(representable(1, 1).set.count(1), 3);
        // monotone maps [1] -> [2]
        assert_eq!(representable(2, 1).set.count(1), 6);
        let d2 = representable(2, 3);
        assert_eq!(d2.set.nondegenerate(2).len(), 1);
        assert_eq!(d2.set.nondegenerate(3).len(), 0);
    }

    #[test]
    fn circle_counts() {
        let s = circle(3);
        // one vertex; in degree 1 the base point and the edge 01
        assert_eq!(s.count(0), 1);
        assert_eq!(s.count(1), 2);
        assert_eq!(s.nondegenerate(1).len(), 1);
        assert_eq!(s.nondegenerate(2).len(), 0);
    }

    #[test]
    fn collapse_rejects_non_subcomplex() {
        let d1 = representable(1, 1);
        // the edge 01 without its endpoints
        let member = vec![vec![false, false], d1.labels(1).iter().map(|s| s == &vec![0, 1]).collect()];
        assert!(collapse(&d1.set, &member).is_err());
    }
}
