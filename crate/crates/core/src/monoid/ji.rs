//! The retraction of `dB(M, M, M^{C_2})` onto the twisted fixed set.
//!
//! `i(y) = [e, e, ..., e, y]` and
//! `r([m_0, m_1, ..., m_p, y]) = m_0 ⋯ m_p · y · m̄_p ⋯ m̄_0`.
//! The composite `r ∘ i` is the identity on the nose; `i ∘ r` is homotopic
//! to the identity, which is checked here through homology.

use serde::Serialize;

use crate::error::Result;
use crate::homology::{map_on_homology, AbelianGroup, HomologyData};
use crate::simplicial::{discrete, SimplicialMap};

use super::bar::{two_sided_bar, RightAction, TwistedFixedSet};
use super::finite::FiniteMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JiDegree {
    pub degree: usize,
    pub fixed_set: AbelianGroup,
    pub bar: AbelianGroup,
    pub i_isomorphism: bool,
    pub r_isomorphism: bool,
    /// `r_* i_* = id` and `i_* r_* = id`.
    pub mutually_inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JiReport {
    pub degree_budget: usize,
    pub retraction_exact: bool,
    pub degrees: Vec<JiDegree>,
    pub holds: bool,
}

pub fn ji_contraction_check(m: &FiniteMonoid, budget: usize) -> Result<JiReport> {
    let top = budget + 1;
    let fixed = TwistedFixedSet::new(m)?;
    let bar = two_sided_bar(&RightAction::regular(m), m, &fixed.action, top);
    let points = discrete(fixed.size(), top);
    let i = SimplicialMap::from_fn(points.clone(), bar.set.clone(), |n, y| {
        let mut label = vec![m.unit(); n + 1];
        label.push(y);
        bar.id(n, &label).expect("[e, ..., e, y] is a simplex")
    })?;
    let r = SimplicialMap::from_fn(bar.set.clone(), points.clone(), |n, x| {
        let label = bar.label(n, x);
        let (word, y) = label.split_at(n + 1);
        fixed.action.act(m.product(word.iter().copied()), y[0])
    })?;
    let ri = i.then(&r)?;
    let retraction_exact = ri == SimplicialMap::identity(&points);

    let hx = HomologyData::compute(&points, budget)?;
    let hb = HomologyData::compute(&bar.set, budget)?;
    let mut degrees = Vec::with_capacity(budget + 1);
    for q in 0..=budget {
        let i_star = map_on_homology(&hx, &hb, q, |y| i.apply(q, y))?;
        let r_star = map_on_homology(&hb, &hx, q, |x| r.apply(q, x))?;
        let mutually_inverse = i_star.then(&r_star)?.is_identity() && r_star.then(&i_star)?.is_identity();
        degrees.push(JiDegree {
            degree: q,
            fixed_set: i_star.source.clone(),
            bar: i_star.target.clone(),
            i_isomorphism: i_star.is_isomorphism(),
            r_isomorphism: r_star.is_isomorphism(),
            mutually_inverse,
        });
    }
    let holds = retraction_exact && degrees.iter().all(|d| d.i_isomorphism && d.r_isomorphism && d.mutually_inverse);
    Ok(JiReport {
        degree_budget: budget,
        retraction_exact,
        degrees,
        holds,
    })
}
