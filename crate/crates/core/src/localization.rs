//! Localization of commutative monoids and of sets with a translation.
//!
//! Finite monoids are localized by saturating the congruence
//! `(x, s) ~ (x', s')  iff  u x s' = u x' s` for some `u ∈ S` on the finite
//! set of pairs. Free commutative monoids and `N` with a shift are handled
//! in closed form, each with a finite-window check of the closed form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{stable_colimit, AbelianGroup, DirectedSystemDescriptor, IntegerMatrix};
use crate::monoid::FiniteMonoid;

/// The elements to invert.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicativeSet {
    /// All of `N`: the Grothendieck group.
    All,
    /// `{t^n : n >= 0}`.
    Powers(usize),
}

impl MultiplicativeSet {
    pub fn elements(&self, n: &FiniteMonoid) -> Vec<usize> {
        match *self {
            MultiplicativeSet::All => n.elements().collect(),
            MultiplicativeSet::Powers(t) => {
                let mut seen = BTreeSet::new();
                let mut x = n.unit();
                while seen.insert(x) {
                    x = n.mul(x, t);
                }
                seen.into_iter().collect()
            }
        }
    }
}

/// `N[S^{-1}]` as a finite commutative monoid of classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizedMonoid {
    pub inverted: Vec<usize>,
    /// One `(x, s)` representative per class, the smallest pair.
    pub classes: Vec<(usize, usize)>,
    pub unit: usize,
    pub mul: Vec<Vec<usize>>,
    /// Class of `x / e`.
    pub canonical: Vec<usize>,
    /// The directly generated relation was already transitive.
    pub relation_transitive: bool,
    pub is_group: bool,
    /// Every element of `S` becomes invertible.
    pub inverts_s: bool,
}

impl LocalizedMonoid {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn inverse(&self, c: usize) -> Option<usize> {
        (0..self.size()).find(|&d| self.mul[c][d] == self.unit)
    }
}

pub fn localize_monoid(n: &FiniteMonoid, s: MultiplicativeSet) -> Result<LocalizedMonoid> {
    n.require_commutative()?;
    if let MultiplicativeSet::Powers(t) = s {
        if t >= n.size() {
            return Err(Error::MonoidAxiom(format!("{t} is not an element")));
        }
    }
    let inverted = s.elements(n);
    let pairs: Vec<(usize, usize)> = n.elements().flat_map(|x| inverted.iter().map(move |&s| (x, s))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let related = |(x, s): (usize, usize), (y, r): (usize, usize)| {
        inverted.iter().any(|&u| n.mul(n.mul(u, x), r) == n.mul(n.mul(u, y), s))
    };
    let mut uf = UnionFind::<usize>::new(pairs.len());
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            if related(pairs[a], pairs[b]) {
                uf.union(a, b);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut classes = Vec::new();
    let mut class = vec![0; pairs.len()];
    for (i, &root) in labels.iter().enumerate() {
        let c = *class_of_root.entry(root).or_insert_with(|| {
            classes.push(pairs[i]);
            classes.len() - 1
        });
        class[i] = c;
    }
    let relation_transitive =
        (0..pairs.len()).all(|a| (0..pairs.len()).all(|b| class[a] != class[b] || related(pairs[a], pairs[b])));
    let class_of = |p: (usize, usize)| class[index[&p]];
    let mul: Vec<Vec<usize>> = classes
        .iter()
        .map(|&(x, s)| classes.iter().map(|&(y, r)| class_of((n.mul(x, y), n.mul(s, r)))).collect())
        .collect();
    // the product must not depend on representatives
    for a in 0..pairs.len() {
        for b in 0..pairs.len() {
            let ((x, s), (y, r)) = (pairs[a], pairs[b]);
            if class_of((n.mul(x, y), n.mul(s, r))) != mul[class[a]][class[b]] {
                return Err(Error::IllDefinedMap(format!("product of classes of {:?} and {:?}", pairs[a], pairs[b])));
            }
        }
    }
    let unit = class_of((n.unit(), n.unit()));
    let canonical: Vec<usize> = n.elements().map(|x| class_of((x, n.unit()))).collect();
    let mut out = LocalizedMonoid {
        inverted: inverted.clone(),
        classes,
        unit,
        mul,
        canonical,
        relation_transitive,
        is_group: false,
        inverts_s: false,
    };
    out.is_group = (0..out.size()).all(|c| out.inverse(c).is_some());
    out.inverts_s = inverted.iter().all(|&s| out.inverse(out.canonical[s]).is_some());
    Ok(out)
}

/// The Grothendieck group of `N^rank`, checked on the window `[0, window]^rank`:
/// pairs `(a, b)` are saturated under the congruence and the classes must be
/// exactly the fibres of `a - b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeLocalization {
    pub rank: usize,
    pub group: AbelianGroup,
    pub window: usize,
    pub classes_in_window: usize,
    pub differences_in_window: usize,
    pub classes_are_differences: bool,
}

pub fn localize_free(rank: usize, window: usize) -> FreeLocalization {
    let vectors: Vec<Vec<usize>> = (0..(window + 1).pow(rank as u32))
        .map(|mut code| {
            (0..rank)
                .map(|_| {
                    let v = code % (window + 1);
                    code /= window + 1;
                    v
                })
                .collect()
        })
        .collect();
    let add = |a: &[usize], b: &[usize]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = vectors.iter().flat_map(|a| vectors.iter().map(move |b| (a, b))).collect();
    let mut uf = UnionFind::<usize>::new(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let ((a, s), (b, r)) = (pairs[i], pairs[j]);
            // u cancels in a free monoid; the window's u range is checked anyway
            if vectors.iter().any(|u| add(&add(u, a), r) == add(&add(u, b), s)) {
                uf.union(i, j);
            }
        }
    }
    let classes: BTreeSet<usize> = uf.into_labeling().into_iter().collect();
    // related pairs have equal differences, so equal counts mean the
    // classes are exactly the fibres
    let differences: BTreeSet<Vec<i64>> = pairs
        .iter()
        .map(|(a, b)| a.iter().zip(b.iter()).map(|(&x, &y)| x as i64 - y as i64).collect())
        .collect();
    let differences_in_window = differences.len();
    FreeLocalization {
        rank,
        group: AbelianGroup::free(rank),
        window,
        classes_in_window: classes.len(),
        differences_in_window,
        classes_are_differences: classes.len() == differences_in_window,
    }
}

/// The colimit of `S -> S -> ...` along a self-map `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalizedSetDescriptor {
    Finite {
        size: usize,
        /// `|t^k(S)|` for each stage examined.
        image_sizes: Vec<usize>,
        stabilized_at: Option<usize>,
        /// Representatives: the eventual image, where `t` is a bijection.
        eventual_image: Vec<usize>,
        /// `classes[c]` lists the `s` with `t^N(s)` equal to representative `c`.
        classes: Vec<Vec<usize>>,
    },
    /// `N` with `n -> n + shift`.
    AffineNaturals {
        shift: usize,
        /// `Z` for a positive shift, `N` otherwise.
        result: String,
        window: usize,
        /// Stage-`k` element `n` goes to `n - shift·k`; checked injective on
        /// classes over the window.
        invariant_separates: bool,
        /// Every integer in `[-shift·window, window]` is attained.
        invariant_surjects: bool,
    },
}

impl LocalizedSetDescriptor {
    pub fn stabilized(&self) -> bool {
        match self {
            LocalizedSetDescriptor::Finite { stabilized_at, .. } => stabilized_at.is_some(),
            LocalizedSetDescriptor::AffineNaturals { .. } => true,
        }
    }

    /// Number of classes when finite.
    pub fn class_count(&self) -> Option<usize> {
        match self {
            LocalizedSetDescriptor::Finite {
                stabilized_at: Some(_),
                classes,
                ..
            } => Some(classes.len()),
            _ => None,
        }
    }
}

pub fn localize_finite_set(t: &[usize], stage_budget: usize) -> Result<LocalizedSetDescriptor> {
    if stage_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let size = t.len();
    if let Some(x) = t.iter().position(|&y| y >= size) {
        return Err(Error::Malformed(format!("translation sends {x} outside the set")));
    }
    let mut image: BTreeSet<usize> = (0..size).collect();
    let mut image_sizes = vec![size];
    let mut stabilized_at = None;
    for k in 0..stage_budget {
        let next: BTreeSet<usize> = image.iter().map(|&x| t[x]).collect();
        if next == image {
            stabilized_at = Some(k);
            break;
        }
        image = next;
        image_sizes.push(image.len());
    }
    let eventual_image: Vec<usize> = image.into_iter().collect();
    let classes = match stabilized_at {
        Some(k) => {
            let mut classes = vec![Vec::new(); eventual_image.len()];
            for s in 0..size {
                let mut x = s;
                for _ in 0..k {
                    x = t[x];
                }
                let c = eventual_image.binary_search(&x).expect("t^k lands in the eventual image");
                classes[c].push(s);
            }
            classes
        }
        None => vec![],
    };
    Ok(LocalizedSetDescriptor::Finite {
        size,
        image_sizes,
        stabilized_at,
        eventual_image,
        classes,
    })
}

/// `N` along `n -> n + shift`, with the closed form checked on pairs
/// `(k, n)`, `k, n <= window`.
pub fn localize_affine_naturals(shift: usize, window: usize) -> LocalizedSetDescriptor {
    let pairs: Vec<(usize, usize)> = (0..=window).flat_map(|k| (0..=window).map(move |n| (k, n))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut uf = UnionFind::<usize>::new(pairs.len());
    for &(k, n) in &pairs {
        if let Some(&j) = index.get(&(k + 1, n + shift)) {
            uf.union(index[&(k, n)], j);
        }
    }
    let labels = uf.into_labeling();
    let invariant = |(k, n): (usize, usize)| n as i64 - (shift * k) as i64;
    let mut by_class: BTreeMap<usize, BTreeSet<i64>> = BTreeMap::new();
    let mut by_value: BTreeMap<i64, BTreeSet<usize>> = BTreeMap::new();
    for (i, &p) in pairs.iter().enumerate() {
        by_class.entry(labels[i]).or_default().insert(invariant(p));
        by_value.entry(invariant(p)).or_default().insert(labels[i]);
    }
    // within the window a chain may be cut short, so separation is checked
    // one way: distinct invariants never share a class
    let invariant_separates = by_class.values().all(|v| v.len() == 1);
    let low = -((shift * window) as i64);
    let invariant_surjects = (low..=window as i64).all(|v| by_value.contains_key(&v));
    LocalizedSetDescriptor::AffineNaturals {
        shift,
        result: if shift > 0 { "Z".into() } else { "N".into() },
        window,
        invariant_separates,
        invariant_surjects,
    }
}

/// Per-degree colimits of a graded group along degreewise endomorphisms.
pub fn localized_graded_module(
    groups: &[AbelianGroup],
    t: &[IntegerMatrix],
    stage_budget: usize,
) -> Result<Vec<DirectedSystemDescriptor>> {
    if groups.len() != t.len() {
        return Err(Error::Dimension(format!("{} groups but {} endomorphisms", groups.len(), t.len())));
    }
    groups.iter().zip(t).map(|(g, m)| stable_colimit(g, m, stage_budget)).collect()
}

/// The permutation-style matrix of a self-map of a finite set, acting on the
/// free abelian group it spans.
pub fn set_map_matrix(t: &[usize]) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(t.len(), t.len());
    for (j, &i) in t.iter().enumerate() {
        m[(i, j)] = BigInt::from(1);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{cyclic, max_monoid, symmetric3, trivial};

    #[test]
    fn naturals_give_the_integers() {
        let f = localize_free(1, 4);
        assert!(f.classes_are_differences);
        assert_eq!(f.classes_in_window, 9);
        assert_eq!(f.group, AbelianGroup::free(1));
        assert!(localize_free(2, 2).classes_are_differences);
    }

    #[test]
    fn max_monoid_localizes_to_a_point() {
        let l = localize_monoid(&max_monoid(), MultiplicativeSet::Powers(1)).unwrap();
        assert_eq!(l.size(), 1);
        assert!(l.is_group && l.inverts_s && l.relation_transitive);
    }

    #[test]
    fn groups_are_their_own_completion() {
        for m in [trivial(), cyclic(2), cyclic(3), cyclic(4)] {
            let l = localize_monoid(&m, MultiplicativeSet::All).unwrap();
            assert!(l.is_group && l.relation_transitive);
            assert_eq!(l.size(), m.size());
            // the canonical map is an isomorphism
            let image: BTreeSet<usize> = l.canonical.iter().copied().collect();
            assert_eq!(image.len(), m.size());
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(l.canonical[m.mul(a, b)], l.mul[l.canonical[a]][l.canonical[b]]);
                }
            }
        }
    }

    #[test]
    fn noncommutative_input_is_rejected() {
        assert!(matches!(
            localize_monoid(&symmetric3(), MultiplicativeSet::All),
            Err(Error::NotCommutative { .. })
        ));
    }

    #[test]
    fn finite_sets() {
        let id = localize_finite_set(&[0, 1, 2], 3).unwrap();
        assert_eq!(id.class_count(), Some(3));
        let constant = localize_finite_set(&[1, 1], 3).unwrap();
        assert_eq!(constant.class_count(), Some(1));
        let LocalizedSetDescriptor::Finite { stabilized_at, .. } = constant else { unreachable!() };
        assert_eq!(stabilized_at, Some(1));
        // a path of length 4 needs 4 stages
        let path = localize_finite_set(&[1, 2, 3, 4, 4], 3).unwrap();
        assert!(!path.stabilized());
        assert!(localize_finite_set(&[1, 2, 3, 4, 4], 5).unwrap().stabilized());
    }

    #[test]
    fn shifted_naturals() {
        let LocalizedSetDescriptor::AffineNaturals {
            result,
            invariant_separates,
            invariant_surjects,
            ..
        } = localize_affine_naturals(2, 6)
        else {
            unreachable!()
        };
        assert_eq!(result, "Z");
        assert!(invariant_separates && invariant_surjects);
    }

    #[test]
    fn graded_module() {
        let groups = [AbelianGroup::free(2), AbelianGroup::trivial()];
        let t = [set_map_matrix(&[1, 1]), IntegerMatrix::zeros(0, 0)];
        let d = localized_graded_module(&groups, &t, 3).unwrap();
        assert_eq!(d[0].colimit, Some(AbelianGroup::free(1)));
        assert_eq!(d[1].colimit, Some(AbelianGroup::trivial()));
    }
}
