//! Truncated bisimplicial sets. The first index is horizontal, the second
//! vertical.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

use super::set::{
    apply_operator, codegeneracy, coface, materialize, SimplicialObject, SimplicialSet,
};
use super::subdivision::sd_map;

pub trait BisimplicialObject {
    type Simplex: Clone + Eq + Hash + Debug;

    fn simplices(&self, p: usize, q: usize) -> Vec<Self::Simplex>;
    /// `(p, q) -> (p - 1, q)`
    fn hface(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;
    /// `(p, q) -> (p + 1, q)`
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex;
    /// `(p, q) -> (p, q - 1)`
    fn vface(&self, p: usize, q: usize, i: usize, x: &Self::Simplex) -> Self::Simplex;
    /// `(p, q) -> (p, q + 1)`
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &Self::Simplex) -> Self::Simplex;

    fn truncation(&self) -> Option<(usize, usize)> {
        None
    }
}

/// The simplicial object `p -> B_{p,q}` for a fixed `q`.
struct Row<'a, B: ?Sized> {
    b: &'a B,
    q: usize,
}

impl<B: BisimplicialObject + ?Sized> SimplicialObject for Row<'_, B> {
    type Simplex = B::Simplex;
    fn simplices(&self, n: usize) -> Vec<B::Simplex> {
        self.b.simplices(n, self.q)
    }
    fn face(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.b.hface(n, self.q, i, x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.b.hdegeneracy(n, self.q, j, x)
    }
}

/// The simplicial object `q -> B_{p,q}` for a fixed `p`.
struct Column<'a, B: ?Sized> {
    b: &'a B,
    p: usize,
}

impl<B: BisimplicialObject + ?Sized> SimplicialObject for Column<'_, B> {
    type Simplex = B::Simplex;
    fn simplices(&self, n: usize) -> Vec<B::Simplex> {
        self.b.simplices(self.p, n)
    }
    fn face(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.b.vface(self.p, n, i, x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.b.vdegeneracy(self.p, n, j, x)
    }
}

/// Table-backed truncated bisimplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimplicialSet {
    counts: Vec<Vec<usize>>,
    hfaces: Vec<Vec<Vec<Vec<usize>>>>,
    hdegeneracies: Vec<Vec<Vec<Vec<usize>>>>,
    vfaces: Vec<Vec<Vec<Vec<usize>>>>,
    vdegeneracies: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BisimplicialSet {
    pub fn max_h(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn max_v(&self) -> usize {
        self.counts[0].len() - 1
    }

    pub fn count(&self, p: usize, q: usize) -> usize {
        self.counts[p][q]
    }

    /// Horizontal row at vertical degree `q` as a simplicial set.
    pub fn row(&self, q: usize) -> Result<SimplicialSet> {
        Ok(materialize(&Row { b: self, q }, self.max_h())?.set)
    }

    /// Vertical column at horizontal degree `p` as a simplicial set.
    pub fn column(&self, p: usize) -> Result<SimplicialSet> {
        Ok(materialize(&Column { b: self, p }, self.max_v())?.set)
    }

    /// Checks the simplicial identities along both axes and that horizontal
    /// and vertical structure maps commute.
    pub fn check(&self) -> Result<()> {
        for q in 0..=self.max_v() {
            self.row(q)?;
        }
        for p in 0..=self.max_h() {
            self.column(p)?;
        }
        let bad = |what: &str, p: usize, q: usize| {
            Err(Error::Malformed(format!("{what} do not commute at bidegree ({p}, {q})")))
        };
        for p in 0..=self.max_h() {
            for q in 0..=self.max_v() {
                for x in 0..self.count(p, q) {
                    if p > 0 && q > 0 {
                        for i in 0..=p {
                            for k in 0..=q {
                                let a = self.vface(p - 1, q, k, &self.hface(p, q, i, &x));
                                let b = self.hface(p, q - 1, i, &self.vface(p, q, k, &x));
                                if a != b {
                                    return bad("faces", p, q);
                                }
                            }
                        }
                    }
                    if p > 0 && q < self.max_v() {
                        for i in 0..=p {
                            for k in 0..=q {
                                let a = self.vdegeneracy(p - 1, q, k, &self.hface(p, q, i, &x));
                                let b = self.hface(p, q + 1, i, &self.vdegeneracy(p, q, k, &x));
                                if a != b {
                                    return bad("horizontal faces and vertical degeneracies", p, q);
                                }
                            }
                        }
                    }
                    if q > 0 && p < self.max_h() {
                        for j in 0..=p {
                            for k in 0..=q {
                                let a = self.vface(p + 1, q, k, &self.hdegeneracy(p, q, j, &x));
                                let b = self.hdegeneracy(p, q - 1, j, &self.vface(p, q, k, &x));
                                if a != b {
                                    return bad("horizontal degeneracies and vertical faces", p, q);
                                }
                            }
                        }
                    }
                    if p < self.max_h() && q < self.max_v() {
                        for j in 0..=p {
                            for k in 0..=q {
                                let a = self.vdegeneracy(p + 1, q, k, &self.hdegeneracy(p, q, j, &x));
                                let b = self.hdegeneracy(p, q + 1, j, &self.vdegeneracy(p, q, k, &x));
                                if a != b {
                                    return bad("degeneracies", p, q);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl BisimplicialObject for BisimplicialSet {
    type Simplex = usize;

    fn simplices(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.counts[p][q]).collect()
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &usize) -> usize {
        self.hfaces[p][q][i][*x]
    }
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &usize) -> usize {
        self.hdegeneracies[p][q][j][*x]
    }
    fn vface(&self, p: usize, q: usize, i: usize, x: &usize) -> usize {
        self.vfaces[p][q][i][*x]
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &usize) -> usize {
        self.vdegeneracies[p][q][j][*x]
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        Some((self.max_h(), self.max_v()))
    }
}

impl<T: BisimplicialObject + ?Sized> BisimplicialObject for &T {
    type Simplex = T::Simplex;
    fn simplices(&self, p: usize, q: usize) -> Vec<T::Simplex> {
        (**self).simplices(p, q)
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &T::Simplex) -> T::Simplex {
        (**self).hface(p, q, i, x)
    }
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &T::Simplex) -> T::Simplex {
        (**self).hdegeneracy(p, q, j, x)
    }
    fn vface(&self, p: usize, q: usize, i: usize, x: &T::Simplex) -> T::Simplex {
        (**self).vface(p, q, i, x)
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &T::Simplex) -> T::Simplex {
        (**self).vdegeneracy(p, q, j, x)
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        (**self).truncation()
    }
}

#[derive(Clone, Debug)]
pub struct LabeledBi<S> {
    pub set: BisimplicialSet,
    labels: Vec<Vec<Vec<S>>>,
    index: Vec<Vec<HashMap<S, usize>>>,
}

impl<S: Clone + Eq + Hash> LabeledBi<S> {
    pub fn label(&self, p: usize, q: usize, x: usize) -> &S {
        &self.labels[p][q][x]
    }
    pub fn labels(&self, p: usize, q: usize) -> &[S] {
        &self.labels[p][q]
    }
    pub fn id(&self, p: usize, q: usize, s: &S) -> Option<usize> {
        self.index.get(p)?.get(q)?.get(s).copied()
    }
}

/// Tabulates a bisimplicial object through bidegree `(max_h, max_v)` and
/// validates it.
pub fn materialize_bi<B: BisimplicialObject>(
    b: &B,
    max_h: usize,
    max_v: usize,
) -> Result<LabeledBi<B::Simplex>> {
    if let Some((th, tv)) = b.truncation() {
        if th < max_h || tv < max_v {
            return Err(Error::Truncation {
                context: "materialize bisimplicial",
                needed: max_h.max(max_v),
                available: th.min(tv),
            });
        }
    }
    let labels: Vec<Vec<Vec<B::Simplex>>> = (0..=max_h)
        .map(|p| (0..=max_v).map(|q| b.simplices(p, q)).collect())
        .collect();
    let index: Vec<Vec<HashMap<B::Simplex, usize>>> = labels
        .iter()
        .map(|row| {
            row.iter()
                .map(|level| level.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect())
                .collect()
        })
        .collect();
    let look = |p: usize, q: usize, s: &B::Simplex| -> Result<usize> {
        index[p][q]
            .get(s)
            .copied()
            .ok_or_else(|| Error::Malformed(format!("structure map leaves bidegree ({p}, {q}): {s:?}")))
    };
    let tabulate = |p: usize, q: usize, k: usize, target: (usize, usize), f: &dyn Fn(usize, &B::Simplex) -> B::Simplex| {
        (0..k)
            .map(|i| {
                labels[p][q]
                    .iter()
                    .map(|x| look(target.0, target.1, &f(i, x)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    };
    let mut hfaces = vec![];
    let mut hdegeneracies = vec![];
    let mut vfaces = vec![];
    let mut vdegeneracies = vec![];
    for p in 0..=max_h {
        let (mut hf, mut hd, mut vf, mut vd) = (vec![], vec![], vec![], vec![]);
        for q in 0..=max_v {
            hf.push(if p > 0 {
                tabulate(p, q, p + 1, (p - 1, q), &|i, x| b.hface(p, q, i, x))?
            } else {
                vec![]
            });
            hd.push(if p < max_h {
                tabulate(p, q, p + 1, (p + 1, q), &|j, x| b.hdegeneracy(p, q, j, x))?
            } else {
                vec![]
            });
            vf.push(if q > 0 {
                tabulate(p, q, q + 1, (p, q - 1), &|i, x| b.vface(p, q, i, x))?
            } else {
                vec![]
            });
            vd.push(if q < max_v {
                tabulate(p, q, q + 1, (p, q + 1), &|j, x| b.vdegeneracy(p, q, j, x))?
            } else {
                vec![]
            });
        }
        hfaces.push(hf);
        hdegeneracies.push(hd);
        vfaces.push(vf);
        vdegeneracies.push(vd);
    }
    let counts = labels.iter().map(|row| row.iter().map(Vec::len).collect()).collect();
    let set = BisimplicialSet {
        counts,
        hfaces,
        hdegeneracies,
        vfaces,
        vdegeneracies,
    };
    set.check()?;
    Ok(LabeledBi { set, labels, index })
}

/// `X ⊠ Y`, with `(X ⊠ Y)_{p,q} = X_p × Y_q`.
#[derive(Clone, Debug)]
pub struct ExternalProduct<X, Y>(pub X, pub Y);

impl<X: SimplicialObject, Y: SimplicialObject> BisimplicialObject for ExternalProduct<X, Y> {
    type Simplex = (X::Simplex, Y::Simplex);

    fn simplices(&self, p: usize, q: usize) -> Vec<Self::Simplex> {
        let ys = self.1.simplices(q);
        self.0
            .simplices(p)
            .into_iter()
            .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    }
    fn hface(&self, p: usize, _q: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        (self.0.face(p, i, &s.0), s.1.clone())
    }
    fn hdegeneracy(&self, p: usize, _q: usize, j: usize, s: &Self::Simplex) -> Self::Simplex {
        (self.0.degeneracy(p, j, &s.0), s.1.clone())
    }
    fn vface(&self, _p: usize, q: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        (s.0.clone(), self.1.face(q, i, &s.1))
    }
    fn vdegeneracy(&self, _p: usize, q: usize, j: usize, s: &Self::Simplex) -> Self::Simplex {
        (s.0.clone(), self.1.degeneracy(q, j, &s.1))
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        match (self.0.truncation(), self.1.truncation()) {
            (None, None) => None,
            (a, b) => Some((a.unwrap_or(usize::MAX), b.unwrap_or(usize::MAX))),
        }
    }
}

/// A simplicial object viewed as a bisimplicial set constant in the vertical
/// direction.
#[derive(Clone, Debug)]
pub struct ConstantVertical<X>(pub X);

impl<X: SimplicialObject> BisimplicialObject for ConstantVertical<X> {
    type Simplex = X::Simplex;

    fn simplices(&self, p: usize, _q: usize) -> Vec<X::Simplex> {
        self.0.simplices(p)
    }
    fn hface(&self, p: usize, _q: usize, i: usize, x: &X::Simplex) -> X::Simplex {
        self.0.face(p, i, x)
    }
    fn hdegeneracy(&self, p: usize, _q: usize, j: usize, x: &X::Simplex) -> X::Simplex {
        self.0.degeneracy(p, j, x)
    }
    fn vface(&self, _p: usize, _q: usize, _i: usize, x: &X::Simplex) -> X::Simplex {
        x.clone()
    }
    fn vdegeneracy(&self, _p: usize, _q: usize, _j: usize, x: &X::Simplex) -> X::Simplex {
        x.clone()
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        self.0.truncation().map(|t| (t, usize::MAX))
    }
}

/// Subdivision in the horizontal variable.
#[derive(Clone, Debug)]
pub struct SdH<B>(pub B);

impl<B: BisimplicialObject> BisimplicialObject for SdH<B> {
    type Simplex = B::Simplex;

    fn simplices(&self, p: usize, q: usize) -> Vec<B::Simplex> {
        self.0.simplices(2 * p + 1, q)
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        apply_operator(&Row { b: &self.0, q }, 2 * p + 1, x, &sd_map(&coface(p, i), p))
    }
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        apply_operator(&Row { b: &self.0, q }, 2 * p + 1, x, &sd_map(&codegeneracy(p, j), p))
    }
    fn vface(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.vface(2 * p + 1, q, i, x)
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.0.vdegeneracy(2 * p + 1, q, j, x)
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        self.0.truncation().map(|(h, v)| (h.saturating_sub(1) / 2, v))
    }
}

/// Subdivision in the vertical variable.
#[derive(Clone, Debug)]
pub struct SdV<B>(pub B);

impl<B: BisimplicialObject> BisimplicialObject for SdV<B> {
    type Simplex = B::Simplex;

    fn simplices(&self, p: usize, q: usize) -> Vec<B::Simplex> {
        self.0.simplices(p, 2 * q + 1)
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hface(p, 2 * q + 1, i, x)
    }
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hdegeneracy(p, 2 * q + 1, j, x)
    }
    fn vface(&self, p: usize, q: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        apply_operator(&Column { b: &self.0, p }, 2 * q + 1, x, &sd_map(&coface(q, i), q))
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        apply_operator(&Column { b: &self.0, p }, 2 * q + 1, x, &sd_map(&codegeneracy(q, j), q))
    }
    fn truncation(&self) -> Option<(usize, usize)> {
        self.0.truncation().map(|(h, v)| (h, v.saturating_sub(1) / 2))
    }
}

/// The diagonal `n -> B_{n,n}` with `d_i = d^h_i d^v_i` and
/// `s_j = s^h_j s^v_j`.
#[derive(Clone, Debug)]
pub struct Diagonal<B>(pub B);

impl<B: BisimplicialObject> SimplicialObject for Diagonal<B> {
    type Simplex = B::Simplex;

    fn simplices(&self, n: usize) -> Vec<B::Simplex> {
        self.0.simplices(n, n)
    }
    fn face(&self, n: usize, i: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hface(n, n - 1, i, &self.0.vface(n, n, i, x))
    }
    fn degeneracy(&self, n: usize, j: usize, x: &B::Simplex) -> B::Simplex {
        self.0.hdegeneracy(n, n + 1, j, &self.0.vdegeneracy(n, n, j, x))
    }
    fn truncation(&self) -> Option<usize> {
        self.0.truncation().map(|(h, v)| h.min(v))
    }
}

/// The diagonal of a table bisimplicial set through degree `degree`.
pub fn diagonal(b: &BisimplicialSet, degree: usize) -> Result<SimplicialSet> {
    let available = b.max_h().min(b.max_v());
    if available < degree {
        return Err(Error::Truncation {
            context: "diagonal",
            needed: degree,
            available,
        });
    }
    Ok(materialize(&Diagonal(b), degree)?.set)
}

pub fn sd_h(b: &BisimplicialSet, max_h: usize) -> Result<BisimplicialSet> {
    if b.max_h() < 2 * max_h + 1 {
        return Err(Error::Truncation {
            context: "sd_h",
            needed: 2 * max_h + 1,
            available: b.max_h(),
        });
    }
    Ok(materialize_bi(&SdH(b), max_h, b.max_v())?.set)
}

pub fn sd_v(b: &BisimplicialSet, max_v: usize) -> Result<BisimplicialSet> {
    if b.max_v() < 2 * max_v + 1 {
        return Err(Error::Truncation {
            context: "sd_v",
            needed: 2 * max_v + 1,
            available: b.max_v(),
        });
    }
    Ok(materialize_bi(&SdV(b), b.max_h(), max_v)?.set)
}

/// A levelwise involution on a bisimplicial set commuting with all structure
/// maps.
#[derive(Clone, Debug)]
pub struct BiC2Action {
    pub set: BisimplicialSet,
    action: Vec<Vec<Vec<usize>>>,
}

impl BiC2Action {
    pub fn new(set: BisimplicialSet, action: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        for p in 0..=set.max_h() {
            for q in 0..=set.max_v() {
                let a = &action[p][q];
                if a.len() != set.count(p, q) {
                    return Err(Error::Dimension(format!("action table at ({p}, {q})")));
                }
                for x in 0..a.len() {
                    let commutes = a[a[x]] == x
                        && (p == 0 || (0..=p).all(|i| action[p - 1][q][set.hface(p, q, i, &x)] == set.hface(p, q, i, &a[x])))
                        && (q == 0 || (0..=q).all(|i| action[p][q - 1][set.vface(p, q, i, &x)] == set.vface(p, q, i, &a[x])))
                        && (p == set.max_h() || (0..=p).all(|j| action[p + 1][q][set.hdegeneracy(p, q, j, &x)] == set.hdegeneracy(p, q, j, &a[x])))
                        && (q == set.max_v() || (0..=q).all(|j| action[p][q + 1][set.vdegeneracy(p, q, j, &x)] == set.vdegeneracy(p, q, j, &a[x])));
                    if !commutes {
                        return Err(Error::NotSimplicial {
                            operator: format!("involution at bidegree ({p}, {q})"),
                            degree: p + q,
                            simplex: x,
                        });
                    }
                }
            }
        }
        Ok(Self { set, action })
    }

    pub fn act(&self, p: usize, q: usize, x: usize) -> usize {
        self.action[p][q][x]
    }

    /// Fixed bisimplices; labels are identifiers in the ambient set.
    pub fn fixed_points(&self) -> Result<LabeledBi<usize>> {
        materialize_bi(&FixedBi(self), self.set.max_h(), self.set.max_v())
    }
}

struct FixedBi<'a>(&'a BiC2Action);

impl BisimplicialObject for FixedBi<'_> {
    type Simplex = usize;
    fn simplices(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.0.set.count(p, q)).filter(|&x| self.0.act(p, q, x) == x).collect()
    }
    fn hface(&self, p: usize, q: usize, i: usize, x: &usize) -> usize {
        self.0.set.hface(p, q, i, x)
    }
    fn hdegeneracy(&self, p: usize, q: usize, j: usize, x: &usize) -> usize {
        self.0.set.hdegeneracy(p, q, j, x)
    }
    fn vface(&self, p: usize, q: usize, i: usize, x: &usize) -> usize {
        self.0.set.vface(p, q, i, x)
    }
    fn vdegeneracy(&self, p: usize, q: usize, j: usize, x: &usize) -> usize {
        self.0.set.vdegeneracy(p, q, j, x)
    }
}
