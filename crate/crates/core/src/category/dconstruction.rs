//! Strictification of a duality.
//!
//! `D C` has objects `(c, c', f)` with `f: c' -> T c` an isomorphism, and
//! morphisms `(r: c -> d, s: d' -> c')` with `f ∘ s = T r ∘ g`. Its duality
//! `(c, c', f) -> (c', c, T f ∘ η_c)`, `(r, s) -> (s, r)` is strict, and
//! `I(c) = (c, T c, id)`, `K(c, c', f) = c` are inverse equivalences of
//! categories with duality.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;

use super::duality::{CategoryWithDuality, Duality};
use super::finite::{FiniteCategory, Morphism};
use super::functor::{check_natural, is_natural_isomorphism, DualityPreservingFunctor, Functor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DConstruction {
    pub strictified: CategoryWithDuality,
    /// `(c, c', f)` for each object.
    pub triples: Vec<(usize, usize, usize)>,
    /// `(r, s)` for each morphism.
    pub pairs: Vec<(usize, usize)>,
    /// `(I, ι)` with `ι_c = (id_{Tc}, η_c): I(T c) -> T_D I(c)`.
    pub i: DualityPreservingFunctor,
    /// `(K, κ)` with `κ_{(c, c', f)} = f`.
    pub k: DualityPreservingFunctor,
    /// `u'_{(c, c', f)} = (id_c, f): I K (c, c', f) -> (c, c', f)`.
    pub counit: Vec<usize>,
}

pub fn d_construction(c: &FiniteCategory, t: &Duality) -> DConstruction {
    let mut triples = Vec::new();
    for f in (0..c.morphism_count()).filter(|&f| c.inverse(f).is_some()) {
        let c1 = c.source(f);
        if let Some(x) = (0..c.object_count()).find(|&x| t.objects[x] == c.target(f)) {
            // T is a bijection on objects, so x is the unique preimage
            triples.push((x, c1, f));
        }
    }
    triples.sort_unstable();
    let object_index: HashMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(k, &tr)| (tr, k)).collect();

    let mut morphisms = Vec::new();
    let mut pairs = Vec::new();
    for (a, &(x, x1, f)) in triples.iter().enumerate() {
        for (b, &(y, y1, g)) in triples.iter().enumerate() {
            for r in c.hom(x, y) {
                for s in c.hom(y1, x1) {
                    if c.then(s, f) == c.then(g, t.morphisms[r]) {
                        morphisms.push(Morphism {
                            name: format!("({}, {})", c.morphism(r).name, c.morphism(s).name),
                            source: a,
                            target: b,
                        });
                        pairs.push((r, s));
                    }
                }
            }
        }
    }
    let morphism_index: HashMap<(usize, usize, usize, usize), usize> = morphisms
        .iter()
        .zip(&pairs)
        .enumerate()
        .map(|(k, (m, &(r, s)))| ((m.source, m.target, r, s), k))
        .collect();
    let compose = (0..morphisms.len())
        .map(|second| {
            (0..morphisms.len())
                .map(|first| {
                    let (m1, m2) = (&morphisms[first], &morphisms[second]);
                    (m1.target == m2.source).then(|| {
                        let ((r, s), (r2, s2)) = (pairs[first], pairs[second]);
                        morphism_index[&(m1.source, m2.target, c.then(r, r2), c.then(s2, s))]
                    })
                })
                .collect()
        })
        .collect();
    let identities = triples
        .iter()
        .enumerate()
        .map(|(a, &(x, x1, _))| morphism_index[&(a, a, c.identity(x), c.identity(x1))])
        .collect();
    let category = FiniteCategory::new(
        triples
            .iter()
            .map(|&(x, x1, f)| format!("({}, {}, {})", c.object_name(x), c.object_name(x1), c.morphism(f).name))
            .collect(),
        morphisms,
        identities,
        compose,
    )
    .expect("D construction of a valid category with duality");

    let dual_object: Vec<usize> = triples
        .iter()
        .map(|&(x, x1, f)| object_index[&(x1, x, c.then(t.eta[x], t.morphisms[f]))])
        .collect();
    let dual_morphism: Vec<usize> = (0..category.morphism_count())
        .map(|k| {
            let (r, s) = pairs[k];
            let (a, b) = (category.source(k), category.target(k));
            morphism_index[&(dual_object[b], dual_object[a], s, r)]
        })
        .collect();
    let duality = Duality::strict(&category, dual_object, dual_morphism).expect("the D duality is strict");

    let obj = |tr: (usize, usize, usize)| object_index[&tr];
    let mor = |a: usize, b: usize, r: usize, s: usize| morphism_index[&(a, b, r, s)];
    let i_obj: Vec<usize> = (0..c.object_count())
        .map(|x| obj((x, t.objects[x], c.identity(t.objects[x]))))
        .collect();
    let i_mor: Vec<usize> = (0..c.morphism_count())
        .map(|f| mor(i_obj[c.source(f)], i_obj[c.target(f)], f, t.morphisms[f]))
        .collect();
    let iota: Vec<usize> = (0..c.object_count())
        .map(|x| {
            let tx = t.objects[x];
            mor(i_obj[tx], duality.objects[i_obj[x]], c.identity(tx), t.eta[x])
        })
        .collect();
    let k_obj: Vec<usize> = triples.iter().map(|&(x, _, _)| x).collect();
    let k_mor: Vec<usize> = pairs.iter().map(|&(r, _)| r).collect();
    let kappa: Vec<usize> = triples.iter().map(|&(_, _, f)| f).collect();
    let counit: Vec<usize> = triples
        .iter()
        .enumerate()
        .map(|(a, &(x, _, f))| mor(i_obj[x], a, c.identity(x), f))
        .collect();

    DConstruction {
        strictified: CategoryWithDuality { category, duality },
        triples,
        pairs,
        i: DualityPreservingFunctor {
            functor: Functor {
                objects: i_obj,
                morphisms: i_mor,
            },
            xi: iota,
        },
        k: DualityPreservingFunctor {
            functor: Functor {
                objects: k_obj,
                morphisms: k_mor,
            },
            xi: kappa,
        },
        counit,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DConstructionReport {
    pub objects: usize,
    pub morphisms: usize,
    pub strict: bool,
    pub i_preserves_duality: bool,
    pub k_preserves_duality: bool,
    /// `K ∘ I = Id` on objects and morphisms.
    pub ki_is_identity: bool,
    /// `u'` is a natural isomorphism `I K -> Id`.
    pub counit_natural_iso: bool,
    /// `κ_{I c} ∘ K(ι_c) = id` and `ι_{K d} ∘ I(κ_d) = T_D(u'_d) ∘ u'_{T_D d}`.
    pub unit_coherence: bool,
    pub counit_coherence: bool,
    pub holds: bool,
}

pub fn verify_d_construction(c: &FiniteCategory, t: &Duality) -> Result<DConstructionReport> {
    let d = d_construction(c, t);
    let original = CategoryWithDuality {
        category: c.clone(),
        duality: t.clone(),
    };
    let dc = &d.strictified.category;
    let td = &d.strictified.duality;
    let strict = td.is_strict(dc)
        && (0..dc.object_count()).all(|x| td.objects[td.objects[x]] == x)
        && (0..dc.morphism_count()).all(|f| td.morphisms[td.morphisms[f]] == f);
    let i_ok = d.i.validate(&original, &d.strictified).is_ok();
    let k_ok = d.k.validate(&d.strictified, &original).is_ok();
    let ki = d.i.functor.then(&d.k.functor);
    let ki_is_identity = ki == Functor::identity(c);
    let ik = d.k.functor.then(&d.i.functor);
    let counit_natural_iso = check_natural(dc, dc, &ik, &Functor::identity(dc), &d.counit).is_ok()
        && is_natural_isomorphism(dc, &d.counit);
    // u = id since K I = Id, so its condition reads κ_{I c} ∘ K(ι_c) = id
    let unit_coherence = (0..c.object_count()).all(|x| {
        let lhs = c.then(d.k.functor.morphisms[d.i.xi[x]], d.k.xi[d.i.functor.objects[x]]);
        lhs == c.identity(t.objects[x])
    });
    let counit_coherence = (0..dc.object_count()).all(|a| {
        let kd = d.k.functor.objects[a];
        let lhs = dc.then(d.i.functor.morphisms[d.k.xi[a]], d.i.xi[kd]);
        let rhs = dc.then(d.counit[td.objects[a]], td.morphisms[d.counit[a]]);
        lhs == rhs
    });
    let holds = strict && i_ok && k_ok && ki_is_identity && counit_natural_iso && unit_coherence && counit_coherence;
    Ok(DConstructionReport {
        objects: dc.object_count(),
        morphisms: dc.morphism_count(),
        strict,
        i_preserves_duality: i_ok,
        k_preserves_duality: k_ok,
        ki_is_identity,
        counit_natural_iso,
        unit_coherence,
        counit_coherence,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{cyclic, symmetric3, trivial};

    #[test]
    fn trivial_and_c2() {
        let m = trivial();
        let c = FiniteCategory::from_monoid(&m);
        let d = d_construction(&c, &Duality::from_monoid(&m, &c).unwrap());
        assert_eq!((d.strictified.category.object_count(), d.strictified.category.morphism_count()), (1, 1));

        let m = cyclic(2);
        let c = FiniteCategory::from_monoid(&m);
        let r = verify_d_construction(&c, &Duality::from_monoid(&m, &c).unwrap()).unwrap();
        assert_eq!(r.objects, 2);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn strict_inputs() {
        let p = FiniteCategory::poset(2);
        let r = verify_d_construction(&p, &Duality::poset_reversal(&p).unwrap()).unwrap();
        // only identities are invertible in a poset
        assert_eq!(r.objects, 3);
        assert!(r.holds, "{r:?}");
        let m = symmetric3();
        let c = FiniteCategory::from_monoid(&m);
        let r = verify_d_construction(&c, &Duality::from_monoid(&m, &c).unwrap()).unwrap();
        assert_eq!(r.objects, 6);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn strictifies_a_non_strict_duality() {
        let m = cyclic(4);
        let c = FiniteCategory::from_monoid(&m);
        let t = Duality::new(&c, vec![0], (0..4).collect(), vec![2]).unwrap();
        let r = verify_d_construction(&c, &t).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.objects, 4);
    }
}
