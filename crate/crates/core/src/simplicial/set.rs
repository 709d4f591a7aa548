use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A degreewise-finite simplicial set presented up to a truncation degree.
///
/// Simplices in degree `n` are the integers `0..count(n)`. Faces are stored
/// for `1 <= n <= max_degree`, degeneracies for `n < max_degree`. Degenerate
/// simplices are stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialSet {
    counts: Vec<usize>,
    /// `faces[n][i][x]`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][j][x]` for `n < max_degree`.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SimplicialSet {
    /// Builds a simplicial set from raw tables, checking shapes, ranges and
    /// every simplicial identity.
    pub fn from_tables(
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let set = Self::from_tables_unchecked(counts, faces, degeneracies)?;
        set.check_identities()?;
        Ok(set)
    }

    fn from_tables_unchecked(
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Malformed("no degrees given".into()));
        }
        let top = counts.len() - 1;
        if faces.len() != top + 1 {
            return Err(Error::Malformed(format!(
                "expected face tables for degrees 0..={top}, got {}",
                faces.len()
            )));
        }
        if degeneracies.len() != top {
            return Err(Error::Malformed(format!(
                "expected degeneracy tables for degrees 0..{top}, got {}",
                degeneracies.len()
            )));
        }
        if !faces[0].is_empty() {
            return Err(Error::Malformed("degree 0 has no faces".into()));
        }
        for n in 1..=top {
            if faces[n].len() != n + 1 {
                return Err(Error::Malformed(format!("degree {n} needs {} faces", n + 1)));
            }
            for (i, table) in faces[n].iter().enumerate() {
                check_table(table, counts[n], counts[n - 1], || format!("d_{i} in degree {n}"))?;
            }
        }
        for n in 0..top {
            if degeneracies[n].len() != n + 1 {
                return Err(Error::Malformed(format!(
                    "degree {n} needs {} degeneracies",
                    n + 1
                )));
            }
            for (j, table) in degeneracies[n].iter().enumerate() {
                check_table(table, counts[n], counts[n + 1], || format!("s_{j} in degree {n}"))?;
            }
        }
        Ok(Self {
            counts,
            faces,
            degeneracies,
        })
    }

    /// The empty simplicial set truncated at `max_degree`.
    pub fn empty(max_degree: usize) -> Self {
        Self {
            counts: vec![0; max_degree + 1],
            faces: (0..=max_degree)
                .map(|n| if n == 0 { vec![] } else { vec![vec![]; n + 1] })
                .collect(),
            degeneracies: (0..max_degree).map(|n| vec![vec![]; n + 1]).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts[0] == 0
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degeneracy(&self, n: usize, j: usize, x: usize) -> usize {
        self.degeneracies[n][j][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy_table(&self, n: usize, j: usize) -> &[usize] {
        &self.degeneracies[n][j]
    }

    /// Fails unless the set is truncated at degree `needed` or higher.
    pub fn require(&self, needed: usize, context: &'static str) -> Result<()> {
        if self.max_degree() < needed {
            Err(Error::Truncation {
                context,
                needed,
                available: self.max_degree(),
            })
        } else {
            Ok(())
        }
    }

    /// `x` in degree `n >= 1` is degenerate iff `x = s_j d_j x` for some `j`.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|j| self.degeneracies[n - 1][j][self.faces[n][j][x]] == x)
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.count(n))
            .filter(|&x| !self.is_degenerate(n, x))
            .collect()
    }

    /// Restriction to degrees `0..=degree`.
    pub fn truncate(&self, degree: usize) -> Result<Self> {
        self.require(degree, "truncate")?;
        Ok(Self {
            counts: self.counts[..=degree].to_vec(),
            faces: self.faces[..=degree].to_vec(),
            degeneracies: self.degeneracies[..degree].to_vec(),
        })
    }

    /// Exhaustively checks the simplicial identities wherever both sides are
    /// defined.
    pub fn check_identities(&self) -> Result<()> {
        let top = self.max_degree();
        let fail = |identity: String, degree: usize, simplex: usize| {
            Err(Error::SimplicialIdentity {
                identity,
                degree,
                simplex,
            })
        };
        // d_i d_j = d_{j-1} d_i, i < j
        for n in 2..=top {
            for x in 0..self.counts[n] {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self.face(n - 1, i, self.face(n, j, x));
                        let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                        if lhs != rhs {
                            return fail(format!("d_{i} d_{j} = d_{} d_{i}", j - 1), n, x);
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i, i <= j
        for n in 0..top.saturating_sub(1) {
            for x in 0..self.counts[n] {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                        let rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                        if lhs != rhs {
                            return fail(format!("s_{i} s_{j} = s_{} s_{i}", j + 1), n, x);
                        }
                    }
                }
            }
        }
        // mixed identities
        for n in 0..top {
            for x in 0..self.counts[n] {
                for j in 0..=n {
                    let sx = self.degeneracy(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i, sx);
                        let rhs = if i < j {
                            self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            return fail(format!("d_{i} s_{j}"), n, x);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Degreewise disjoint union; simplices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &SimplicialSet) -> Result<Self> {
        let top = self.max_degree().min(other.max_degree());
        let counts: Vec<usize> = (0..=top).map(|n| self.count(n) + other.count(n)).collect();
        let join = |a: &[usize], b: &[usize], shift: usize| -> Vec<usize> {
            a.iter().copied().chain(b.iter().map(|&y| y + shift)).collect()
        };
        let faces = (0..=top)
            .map(|n| {
                if n == 0 {
                    return vec![];
                }
                (0..=n)
                    .map(|i| join(self.face_table(n, i), other.face_table(n, i), self.count(n - 1)))
                    .collect()
            })
            .collect();
        let degeneracies = (0..top)
            .map(|n| {
                (0..=n)
                    .map(|j| {
                        join(
                            self.degeneracy_table(n, j),
                            other.degeneracy_table(n, j),
                            self.count(n + 1),
                        )
                    })
                    .collect()
            })
            .collect();
        Self::from_tables_unchecked(counts, faces, degeneracies)
    }
}

fn check_table(
    table: &[usize],
    len: usize,
    bound: usize,
    what: impl Fn() -> String,
) -> Result<()> {
    if table.len() != len {
        return Err(Error::Malformed(format!(
            "{}: table has {} entries, expected {len}",
            what(),
            table.len()
        )));
    }
    if let Some(&bad) = table.iter().find(|&&y| y >= bound) {
        return Err(Error::Malformed(format!(
            "{}: target {bad} does not exist (only {bound} simplices)",
            what()
        )));
    }
    Ok(())
}

/// A simplicial object whose simplices are explicit labels and whose
/// structure maps are computed on demand.
///
/// Constructions (bar constructions, nerves, subdivisions, pullbacks) are
/// written against this trait and turned into tables by [`materialize`].
pub trait SimplicialObject {
    type Simplex: Clone + Eq + Hash + Debug;

    /// All simplices of degree `n`, in a deterministic order.
    fn simplices(&self, n: usize) -> Vec<Self::Simplex>;

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;

    fn degeneracy(&self, n: usize, j: usize, x: &Self::Simplex) -> Self::Simplex;

    /// Highest degree in which the structure maps are available, if bounded.
    fn truncation(&self) -> Option<usize> {
        None
    }
}

impl SimplicialObject for SimplicialSet {
    type Simplex = usize;

    fn simplices(&self, n: usize) -> Vec<usize> {
        (0..self.count(n)).collect()
    }

    fn face(&self, n: usize, i: usize, x: &usize) -> usize {
        SimplicialSet::face(self, n, i, *x)
    }

    fn degeneracy(&self, n: usize, j: usize, x: &usize) -> usize {
        SimplicialSet::degeneracy(self, n, j, *x)
    }

    fn truncation(&self) -> Option<usize> {
        Some(self.max_degree())
    }
}

impl<T: SimplicialObject + ?Sized> SimplicialObject for &T {
    type Simplex = T::Simplex;

    fn simplices(&self, n: usize) -> Vec<Self::Simplex> {
        (**self).simplices(n)
    }

    fn face(&self, n: usize, i: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).face(n, i, x)
    }

    fn degeneracy(&self, n: usize, j: usize, x: &Self::Simplex) -> Self::Simplex {
        (**self).degeneracy(n, j, x)
    }

    fn truncation(&self) -> Option<usize> {
        (**self).truncation()
    }
}

/// A table-backed simplicial set together with the label of every simplex.
#[derive(Clone, Debug)]
pub struct Labeled<S> {
    pub set: SimplicialSet,
    labels: Vec<Vec<S>>,
    index: Vec<HashMap<S, usize>>,
}

impl<S: Clone + Eq + Hash> Labeled<S> {
    pub fn label(&self, n: usize, x: usize) -> &S {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[S] {
        &self.labels[n]
    }

    pub fn id(&self, n: usize, label: &S) -> Option<usize> {
        self.index.get(n)?.get(label).copied()
    }

    pub fn max_degree(&self) -> usize {
        self.set.max_degree()
    }
}

/// Enumerates `obj` through `max_degree` and stores its structure maps as
/// tables. Identifiers follow the enumeration order of
/// [`SimplicialObject::simplices`]. The simplicial identities are verified.
pub fn materialize<X: SimplicialObject>(obj: &X, max_degree: usize) -> Result<Labeled<X::Simplex>> {
    if let Some(t) = obj.truncation() {
        if t < max_degree {
            return Err(Error::Truncation {
                context: "materialize",
                needed: max_degree,
                available: t,
            });
        }
    }
    let labels: Vec<Vec<X::Simplex>> = (0..=max_degree).map(|n| obj.simplices(n)).collect();
    let mut index: Vec<HashMap<X::Simplex, usize>> = Vec::with_capacity(labels.len());
    for (n, level) in labels.iter().enumerate() {
        let map: HashMap<_, _> = level.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        if map.len() != level.len() {
            return Err(Error::Malformed(format!("duplicate simplex labels in degree {n}")));
        }
        index.push(map);
    }
    let lookup = |n: usize, s: &X::Simplex| -> Result<usize> {
        index[n]
            .get(s)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("structure map leaves degree {n}: {s:?}")))
    };
    let mut faces = vec![vec![]];
    for n in 1..=max_degree {
        let mut level = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let table = labels[n]
                .iter()
                .map(|x| lookup(n - 1, &obj.face(n, i, x)))
                .collect::<Result<Vec<_>>>()?;
            level.push(table);
        }
        faces.push(level);
    }
    let mut degeneracies = Vec::with_capacity(max_degree);
    for n in 0..max_degree {
        let mut level = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let table = labels[n]
                .iter()
                .map(|x| lookup(n + 1, &obj.degeneracy(n, j, x)))
                .collect::<Result<Vec<_>>>()?;
            level.push(table);
        }
        degeneracies.push(level);
    }
    let counts = labels.iter().map(Vec::len).collect();
    let set = SimplicialSet::from_tables(counts, faces, degeneracies)?;
    Ok(Labeled { set, labels, index })
}

/// All monotone maps `[m] -> [n]`, as value sequences, in lexicographic order.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m + 1);
    fn rec(m: usize, n: usize, lo: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m + 1 {
            out.push(current.clone());
            return;
        }
        for v in lo..=n {
            current.push(v);
            rec(m, n, v, current, out);
            current.pop();
        }
    }
    rec(m, n, 0, &mut current, &mut out);
    out
}

/// The coface `[n-1] -> [n]` skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|k| if k < i { k } else { k + 1 }).collect()
}

/// The codegeneracy `[n+1] -> [n]` hitting `j` twice.
pub fn codegeneracy(n: usize, j: usize) -> Vec<usize> {
    (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect()
}

/// `(outer ∘ inner)(k) = outer[inner[k]]`.
pub fn compose_monotone(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&k| outer[k]).collect()
}

/// Applies `theta^*` for a monotone `theta: [m] -> [n]` to a degree-`n`
/// simplex, via its epi-mono factorization.
pub fn apply_operator<X: SimplicialObject + ?Sized>(
    obj: &X,
    n: usize,
    x: &X::Simplex,
    theta: &[usize],
) -> X::Simplex {
    debug_assert!(theta.windows(2).all(|w| w[0] <= w[1]));
    debug_assert!(theta.iter().all(|&v| v <= n));
    let mut image: Vec<usize> = theta.to_vec();
    image.dedup();
    let mut hit = vec![false; n + 1];
    for &v in &image {
        hit[v] = true;
    }
    let mut y = x.clone();
    let mut degree = n;
    for missing in (0..=n).rev().filter(|&v| !hit[v]) {
        y = obj.face(degree, missing, &y);
        degree -= 1;
    }
    for t in 0..theta.len().saturating_sub(1) {
        if theta[t] == theta[t + 1] {
            y = obj.degeneracy(degree, t, &y);
            degree += 1;
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn monotone_map_counts() {
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(monotone_maps(m, n).len(), binomial(m + n + 1, m + 1));
            }
        }
    }

    #[test]
    fn empty_set_is_valid() {
        let e = SimplicialSet::empty(3);
        e.check_identities().unwrap();
        assert!(e.is_empty());
        assert_eq!(e.nondegenerate(2), Vec::<usize>::new());
    }

    #[test]
    fn malformed_tables_are_rejected() {
        // one vertex, one edge whose face points nowhere
        let err = SimplicialSet::from_tables(vec![1, 1], vec![vec![], vec![vec![0], vec![3]]], vec![vec![vec![0]]]);
        assert!(matches!(err, Err(Error::Malformed(_))));
    }

    #[test]
    fn broken_identity_is_reported() {
        // two vertices; the single edge is declared degenerate on vertex 0 but has d_0 = 1
        let err = SimplicialSet::from_tables(
            vec![2, 2],
            vec![vec![], vec![vec![1, 1], vec![0, 1]]],
            vec![vec![vec![0, 1]]],
        );
        assert!(matches!(err, Err(Error::SimplicialIdentity { .. })));
    }

    #[test]
    fn truncation_is_enforced() {
        let e = SimplicialSet::empty(1);
        assert!(matches!(materialize(&e, 2), Err(Error::Truncation { .. })));
        assert!(e.truncate(2).is_err());
    }
}
