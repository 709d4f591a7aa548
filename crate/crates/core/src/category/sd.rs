//! The subdivision category and its comparison with the subdivided nerve.
//!
//! Objects of `Sd C` are arrows `f: a -> b`; a map `f -> g` (with
//! `g: c -> d`) is a pair `(h: a -> c, i: d -> b)` with `f = i g h`, and
//! `(h', i') ∘ (h, i) = (h' h, i i')`. An `n`-chain in `Sd C` unfolds to the
//! `(2n+1)`-chain `a_0 -> ... -> a_n -> b_n -> ... -> b_0` in `C`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::simplicial::{materialize, SimplicialMap, SimplicialObject, Subdivision};

use super::duality::{Chain, Duality, Nerve};
use super::finite::{FiniteCategory, Morphism};

/// `Sd C` with, for each of its morphisms, the pair `(h, i)` it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionCategory {
    pub category: FiniteCategory,
    pub pairs: Vec<(usize, usize)>,
}

pub fn sd_category(c: &FiniteCategory) -> SubdivisionCategory {
    let nm = c.morphism_count();
    let mut morphisms = Vec::new();
    let mut pairs = Vec::new();
    for f in 0..nm {
        for g in 0..nm {
            for h in c.hom(c.source(f), c.source(g)) {
                let gh = c.then(h, g);
                for i in c.hom(c.target(g), c.target(f)) {
                    if c.then(gh, i) == f {
                        morphisms.push(Morphism {
                            name: format!("({}, {})", c.morphism(h).name, c.morphism(i).name),
                            source: f,
                            target: g,
                        });
                        pairs.push((h, i));
                    }
                }
            }
        }
    }
    let index: HashMap<(usize, usize, usize, usize), usize> = morphisms
        .iter()
        .zip(&pairs)
        .enumerate()
        .map(|(k, (m, &(h, i)))| ((m.source, m.target, h, i), k))
        .collect();
    let compose = (0..morphisms.len())
        .map(|second| {
            (0..morphisms.len())
                .map(|first| {
                    let (m1, m2) = (&morphisms[first], &morphisms[second]);
                    (m1.target == m2.source).then(|| {
                        let ((h, i), (h2, i2)) = (pairs[first], pairs[second]);
                        index[&(m1.source, m2.target, c.then(h, h2), c.then(i2, i))]
                    })
                })
                .collect()
        })
        .collect();
    let identities = (0..nm)
        .map(|f| index[&(f, f, c.identity(c.source(f)), c.identity(c.target(f)))])
        .collect();
    let category = FiniteCategory::new(
        (0..nm).map(|f| c.morphism(f).name.clone()).collect(),
        morphisms,
        identities,
        compose,
    )
    .expect("subdivision of a valid category");
    SubdivisionCategory { category, pairs }
}

/// `SdT(f) = T f` and `SdT(h, i) = (T i, T h)`, as index maps on `Sd C`.
pub fn sd_duality(t: &Duality, sd: &SubdivisionCategory) -> (Vec<usize>, Vec<usize>) {
    let objects = t.morphisms.clone();
    let index: HashMap<(usize, usize, usize, usize), usize> = (0..sd.category.morphism_count())
        .map(|k| {
            let m = sd.category.morphism(k);
            let (h, i) = sd.pairs[k];
            ((m.source, m.target, h, i), k)
        })
        .collect();
    let morphisms = (0..sd.category.morphism_count())
        .map(|k| {
            let m = sd.category.morphism(k);
            let (h, i) = sd.pairs[k];
            index[&(t.morphisms[m.source], t.morphisms[m.target], t.morphisms[i], t.morphisms[h])]
        })
        .collect();
    (objects, morphisms)
}

/// Unfolds an `n`-chain of `Sd C` to a `(2n+1)`-chain of `C`.
pub fn unfold(c: &FiniteCategory, sd: &SubdivisionCategory, n: usize, chain: &Chain) -> Chain {
    let (f0, arrows) = chain;
    let a0 = c.source(*f0);
    let mut out = Vec::with_capacity(2 * n + 1);
    for &k in arrows {
        out.push(sd.pairs[k].0);
    }
    let last = arrows.last().map_or(*f0, |&k| sd.category.target(k));
    out.push(last);
    for &k in arrows.iter().rev() {
        out.push(sd.pairs[k].1);
    }
    (a0, out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdNerveComparison {
    pub degree_budget: usize,
    /// Simplex counts of `N Sd C` and `Sd N C`.
    pub counts: Vec<(usize, usize)>,
    /// Unfolding is a bijection in every degree and commutes with all faces
    /// and degeneracies.
    pub isomorphic: bool,
    pub failure: Option<String>,
}

/// Compares `N(Sd C)` with `Sd(N C)` through `degree`.
pub fn compare_sd_nerve(c: &FiniteCategory, degree: usize) -> Result<SdNerveComparison> {
    let sd = sd_category(c);
    let nsd = materialize(&Nerve(&sd.category), degree)?;
    let sdn = materialize(&Subdivision(Nerve(c)), degree)?;
    let counts: Vec<(usize, usize)> = (0..=degree).map(|n| (nsd.set.count(n), sdn.set.count(n))).collect();
    let mut failure = None;
    if let Some(n) = counts.iter().position(|(a, b)| a != b) {
        failure = Some(format!("degree {n}: {} vs {} simplices", counts[n].0, counts[n].1));
    } else {
        let map = SimplicialMap::from_fn(nsd.set.clone(), sdn.set.clone(), |n, x| {
            sdn.id(n, &unfold(c, &sd, n, nsd.label(n, x))).expect("unfolded chain is composable")
        });
        match map {
            Err(e) => failure = Some(e.to_string()),
            Ok(map) => {
                for n in 0..=degree {
                    let mut hit = vec![false; sdn.set.count(n)];
                    for &y in map.table(n) {
                        hit[y] = true;
                    }
                    if let Some(y) = hit.iter().position(|h| !h) {
                        failure = Some(format!("degree {n}: {:?} is not an unfolded chain", sdn.label(n, y)));
                        break;
                    }
                }
            }
        }
    }
    // the labels of both sides are enumerated independently, so a
    // face/degeneracy cross-check on the functional objects is also run
    if failure.is_none() {
        let nerve_sd = Nerve(&sd.category);
        let sd_nerve = Subdivision(Nerve(c));
        'outer: for n in 0..=degree {
            for x in nerve_sd.simplices(n) {
                let ux = unfold(c, &sd, n, &x);
                for i in (0..=n).filter(|_| n > 0) {
                    if unfold(c, &sd, n - 1, &nerve_sd.face(n, i, &x)) != sd_nerve.face(n, i, &ux) {
                        failure = Some(format!("d_{i} differs at degree {n}"));
                        break 'outer;
                    }
                }
                for j in (0..=n).filter(|_| n < degree) {
                    if unfold(c, &sd, n + 1, &nerve_sd.degeneracy(n, j, &x)) != sd_nerve.degeneracy(n, j, &ux) {
                        failure = Some(format!("s_{j} differs at degree {n}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(SdNerveComparison {
        degree_budget: degree,
        counts,
        isomorphic: failure.is_none(),
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{cyclic, symmetric3, trivial};

    #[test]
    fn object_and_morphism_counts() {
        assert_eq!(sd_category(&FiniteCategory::from_monoid(&trivial())).category.morphism_count(), 1);
        let p1 = sd_category(&FiniteCategory::poset(1));
        assert_eq!(p1.category.object_count(), 3);
        let c2 = sd_category(&FiniteCategory::from_monoid(&cyclic(2)));
        assert_eq!(c2.category.object_count(), 2);
        // N_1 Sd C = (N C)_3
        assert_eq!(c2.category.morphism_count(), 8);
    }

    #[test]
    fn subdivided_nerves_agree() {
        for c in [
            FiniteCategory::from_monoid(&cyclic(2)),
            FiniteCategory::poset(2),
            FiniteCategory::from_monoid(&symmetric3()),
        ] {
            let r = compare_sd_nerve(&c, 2).unwrap();
            assert!(r.isomorphic, "{:?}", r.failure);
        }
    }

    #[test]
    fn sd_duality_is_an_involution() {
        let m = symmetric3();
        let c = FiniteCategory::from_monoid(&m);
        let t = Duality::from_monoid(&m, &c).unwrap();
        let sd = sd_category(&c);
        let (objects, morphisms) = sd_duality(&t, &sd);
        assert!((0..objects.len()).all(|x| objects[objects[x]] == x));
        assert!((0..morphisms.len()).all(|k| morphisms[morphisms[k]] == k));
    }
}
