//! Cofinal generators and the stages of the telescope `M_∞`.
//!
//! Rather than building the homotopy colimit of `M -> M -> ...` (left
//! multiplication by `t`), each stage is `dB(M, M, X)` itself and the
//! transition is `t · (-)` on the first factor. Left multiplication commutes
//! with the right action used by `d_0`, so the transition is simplicial.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{map_on_homology, stable_colimit, DirectedSystemDescriptor, HomologyData, HomologyMap};
use crate::simplicial::{Labeled, SimplicialMap};

use super::bar::{two_sided_bar, LeftAction, RightAction, TwistedFixedSet};
use super::finite::FiniteMonoid;

/// `x · y = t^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityCertificate {
    pub x: usize,
    pub y: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CofinalGenerator {
    pub element: usize,
    /// Greedy generating set whose product is `element`; empty when the
    /// unit already works.
    pub generators: Vec<usize>,
    /// One certificate per element of `M`.
    pub certificates: Vec<DivisibilityCertificate>,
}

/// Certifies that every `x` divides some `t^n` with `n <= |M|`.
pub fn certify_cofinal(m: &FiniteMonoid, t: usize) -> Result<Vec<DivisibilityCertificate>> {
    let powers: Vec<usize> = (0..=m.size()).map(|n| m.power(t, n)).collect();
    m.elements()
        .map(|x| {
            powers
                .iter()
                .enumerate()
                .find_map(|(n, &tn)| m.elements().find(|&y| m.mul(x, y) == tn).map(|y| DivisibilityCertificate { x, y, n }))
                .ok_or(Error::NotCofinal { element: t, witness: x })
        })
        .collect()
}

/// Submonoid generated by `gens`.
fn generated(m: &FiniteMonoid, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; m.size()];
    member[m.unit()] = true;
    let mut frontier = vec![m.unit()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = m.mul(x, g);
            if !member[y] {
                member[y] = true;
                frontier.push(y);
            }
        }
    }
    member
}

/// Tries the unit first, then the product of a greedy generating set.
pub fn find_cofinal_generator(m: &FiniteMonoid) -> Result<CofinalGenerator> {
    m.require_commutative()?;
    if let Ok(certificates) = certify_cofinal(m, m.unit()) {
        return Ok(CofinalGenerator {
            element: m.unit(),
            generators: vec![],
            certificates,
        });
    }
    let mut generators = Vec::new();
    for x in m.elements() {
        if !generated(m, &generators)[x] {
            generators.push(x);
        }
    }
    let element = m.product(generators.iter().copied());
    let certificates = certify_cofinal(m, element)?;
    Ok(CofinalGenerator {
        element,
        generators,
        certificates,
    })
}

/// Coefficients of the telescope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TelescopeVariant {
    /// `X = *`.
    Point,
    /// `X = M^{C_2}` with the twisted action.
    FixedSet,
}

pub struct TelescopeStage {
    /// `dB(M, M, X)`.
    pub complex: Labeled<Vec<usize>>,
    /// `t · (-)` on the first factor.
    pub translation: SimplicialMap,
    /// The `k`-fold composite, from stage 0 to stage `k`.
    pub stage_map: SimplicialMap,
}

pub fn coefficients(m: &FiniteMonoid, variant: TelescopeVariant) -> LeftAction {
    match variant {
        TelescopeVariant::Point => LeftAction::point(m),
        TelescopeVariant::FixedSet => TwistedFixedSet::new(m).expect("the twisted action of a valid monoid").action,
    }
}

fn left_translation(m: &FiniteMonoid, b: &Labeled<Vec<usize>>, s: usize) -> Result<SimplicialMap> {
    SimplicialMap::from_fn(b.set.clone(), b.set.clone(), |n, x| {
        let mut label = b.label(n, x).clone();
        label[0] = m.mul(s, label[0]);
        b.id(n, &label).expect("translation stays in the bar construction")
    })
}

/// `dB(M, M, X)` through degree `d` with its translation by `t` and the
/// stage map `t^k · (-)`.
pub fn telescope_stage_bar(
    m: &FiniteMonoid,
    t: usize,
    k: usize,
    variant: TelescopeVariant,
    d: usize,
) -> Result<TelescopeStage> {
    if t >= m.size() {
        return Err(Error::MonoidAxiom(format!("{t} is not an element")));
    }
    certify_cofinal(m, t)?;
    let y = coefficients(m, variant);
    let complex = two_sided_bar(&RightAction::regular(m), m, &y, d);
    let translation = left_translation(m, &complex, t)?;
    let stage_map = left_translation(m, &complex, m.power(t, k))?;
    Ok(TelescopeStage {
        complex,
        translation,
        stage_map,
    })
}

/// The transition maps on `H_0, ..., H_budget` of the telescope stages.
pub fn translation_on_homology(stage: &TelescopeStage, budget: usize) -> Result<Vec<HomologyMap>> {
    let data = HomologyData::compute(&stage.complex.set, budget)?;
    (0..=budget)
        .map(|q| map_on_homology(&data, &data, q, |x| stage.translation.apply(q, x)))
        .collect()
}

/// `colim_k H_q(dB(M, M, X))` along the translation, degree by degree.
pub fn telescope_homology(
    m: &FiniteMonoid,
    t: usize,
    variant: TelescopeVariant,
    degree_budget: usize,
    stage_budget: usize,
) -> Result<Vec<DirectedSystemDescriptor>> {
    let stage = telescope_stage_bar(m, t, 0, variant, degree_budget + 1)?;
    translation_on_homology(&stage, degree_budget)?
        .iter()
        .map(|h| stable_colimit(&h.source, &h.matrix, stage_budget))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::AbelianGroup;
    use crate::monoid::finite::{cyclic, max_monoid, symmetric3, trivial};

    #[test]
    fn cofinal_generators() {
        assert_eq!(find_cofinal_generator(&trivial()).unwrap().element, 0);
        assert_eq!(find_cofinal_generator(&cyclic(4)).unwrap().element, 0);
        let max = find_cofinal_generator(&max_monoid()).unwrap();
        assert_eq!(max.element, 1);
        assert_eq!(max.certificates.len(), 2);
        assert!(matches!(find_cofinal_generator(&symmetric3()), Err(Error::NotCommutative { .. })));
    }

    #[test]
    fn unit_is_not_cofinal_in_max() {
        assert_eq!(certify_cofinal(&max_monoid(), 0), Err(Error::NotCofinal { element: 0, witness: 1 }));
    }

    #[test]
    fn stage_zero_is_the_identity() {
        let m = cyclic(2);
        let s = telescope_stage_bar(&m, 0, 0, TelescopeVariant::FixedSet, 2).unwrap();
        assert_eq!(s.stage_map, SimplicialMap::identity(&s.complex.set));
    }

    #[test]
    fn c2_degree_zero_is_constant() {
        let d = telescope_homology(&cyclic(2), 0, TelescopeVariant::FixedSet, 1, 3).unwrap();
        assert_eq!(d[0].colimit, Some(AbelianGroup::free(2)));
        assert_eq!(d[0].stabilized_at, Some(0));
        assert_eq!(d[1].colimit, Some(AbelianGroup::trivial()));
    }

    #[test]
    fn max_monoid_collapses_components() {
        let d = telescope_homology(&max_monoid(), 1, TelescopeVariant::FixedSet, 1, 3).unwrap();
        assert_eq!(d[0].group, AbelianGroup::free(2));
        assert_eq!(d[0].stabilized_at, Some(1));
        assert_eq!(d[0].colimit, Some(AbelianGroup::free(1)));
    }
}
