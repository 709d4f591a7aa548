//! Fixed points of the subdivided bar construction.
//!
//! A fixed `p`-simplex of `Sd BM` is a word `(m_1, ..., m_{2p+1})` with
//! `m_{2p+2-i} = m̄_i`. Keeping the first `p + 1` letters gives a bijection
//! `b_p` onto `M^p × M^{C_2}`, compatible with the structure maps of
//! `B(*, M, M^{C_2})`.

use std::collections::HashSet;

use serde::Serialize;

use crate::simplicial::{SimplicialObject, Subdivision};

use super::bar::{words, Bar, RightAction, TwistedFixedSet, TwoSidedBar};
use super::finite::FiniteMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionLevel {
    pub level: usize,
    /// Fixed simplices of `Sd BM` at this level.
    pub fixed: usize,
    /// `|M|^p · |M^{C_2}|`.
    pub target: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub degree_budget: usize,
    pub levels: Vec<BijectionLevel>,
    /// Every face and degeneracy checked on every fixed simplex.
    pub structure_maps_checked: usize,
    pub holds: bool,
    pub failure: Option<String>,
}

/// `b_p`: `[*, m_1, ..., m_p, m_{p+1}]`, the last entry as an index into the
/// fixed set.
fn b(fixed: &TwistedFixedSet, p: usize, w: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(p + 2);
    out.push(0);
    out.extend_from_slice(&w[..p]);
    out.push(fixed.index_of(w[p])?);
    Some(out)
}

/// Builds `b_p` for `p <= budget` by enumerating all of `M^{2p+1}`, and
/// checks bijectivity and naturality.
pub fn fixed_point_bijection_b(m: &FiniteMonoid, budget: usize) -> BijectionReport {
    let sd = Subdivision(Bar(m));
    let fixed = TwistedFixedSet::new(m).expect("the twisted action of a valid monoid");
    let point = RightAction::point(m);
    let target_bar = TwoSidedBar {
        x: &point,
        m,
        y: &fixed.action,
    };
    let mut levels = Vec::with_capacity(budget + 1);
    let mut checked = 0;
    let mut failure = None;
    let is_fixed = |p: usize, w: &Vec<usize>| sd.act(p, w) == *w;
    'levels: for p in 0..=budget {
        let fixed_words: Vec<Vec<usize>> = words(m.size(), 2 * p + 1).into_iter().filter(|w| is_fixed(p, w)).collect();
        let target = m.size().pow(p as u32) * fixed.size();
        let mut image = HashSet::with_capacity(fixed_words.len());
        for w in &fixed_words {
            match b(&fixed, p, w) {
                Some(x) => {
                    image.insert(x);
                }
                None => {
                    failure = Some(format!("middle letter of fixed word {w:?} is not self-conjugate"));
                    break 'levels;
                }
            }
        }
        let bijective = image.len() == fixed_words.len() && image.len() == target;
        levels.push(BijectionLevel {
            level: p,
            fixed: fixed_words.len(),
            target,
            bijective,
        });
        if !bijective {
            failure = Some(format!("b_{p} hits {} of {target} elements from {} fixed words", image.len(), fixed_words.len()));
            break;
        }
        for w in &fixed_words {
            let bw = b(&fixed, p, w).expect("checked above");
            if p > 0 {
                for i in 0..=p {
                    let face = sd.face(p, i, w);
                    checked += 1;
                    if !is_fixed(p - 1, &face) || b(&fixed, p - 1, &face) != Some(target_bar.face(p, i, &bw)) {
                        failure = Some(format!("d_{i} disagrees on {w:?}"));
                        break 'levels;
                    }
                }
            }
            if p < budget {
                for j in 0..=p {
                    let deg = sd.degeneracy(p, j, w);
                    checked += 1;
                    if !is_fixed(p + 1, &deg) || b(&fixed, p + 1, &deg) != Some(target_bar.degeneracy(p, j, &bw)) {
                        failure = Some(format!("s_{j} disagrees on {w:?}"));
                        break 'levels;
                    }
                }
            }
        }
    }
    BijectionReport {
        degree_budget: budget,
        levels,
        structure_maps_checked: checked,
        holds: failure.is_none(),
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::finite::{corpus, cyclic, symmetric3, trivial};

    #[test]
    fn level_counts() {
        let r = fixed_point_bijection_b(&trivial(), 3);
        assert!(r.holds);
        assert!(r.levels.iter().all(|l| l.fixed == 1));
        let r = fixed_point_bijection_b(&cyclic(2), 2);
        assert!(r.holds);
        assert_eq!(r.levels[1].fixed, 4);
        let r = fixed_point_bijection_b(&symmetric3(), 1);
        assert!(r.holds, "{:?}", r.failure);
        assert_eq!(r.levels[0].fixed, 4);
        assert_eq!(r.levels[1].fixed, 24);
    }

    #[test]
    fn corpus_passes() {
        for (name, m) in corpus() {
            let r = fixed_point_bijection_b(&m, 2);
            assert!(r.holds, "{name}: {:?}", r.failure);
            assert!(r.structure_maps_checked > 0);
        }
    }

    #[test]
    fn inversion_on_c3() {
        // only e is self-conjugate under g -> g^{-1}
        let names = vec!["e".to_string(), "g".into(), "g2".into()];
        let c3 = cyclic(3);
        let mul = (0..3).map(|a| (0..3).map(|b| c3.mul(a, b)).collect()).collect();
        let m = FiniteMonoid::new(names, 0, mul, vec![0, 2, 1]).unwrap();
        let r = fixed_point_bijection_b(&m, 2);
        assert!(r.holds);
        assert_eq!(r.levels.iter().map(|l| l.fixed).collect::<Vec<_>>(), vec![1, 3, 9]);
    }
}
