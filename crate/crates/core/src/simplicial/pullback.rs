//! Pullbacks along simplices of the target and the homology-fibration
//! criterion phrased through them.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::homology::{compare_homology, normalized_chains, ChainComplex};

use super::map::SimplicialMap;
use super::set::{
    apply_operator, codegeneracy, coface, compose_monotone, materialize, monotone_maps, Labeled, SimplicialObject,
};

/// Pullbacks over simplices of the target with their normalized chains.
type FiberCache = HashMap<SimplexRef, (Labeled<(usize, Vec<usize>)>, ChainComplex)>;

/// `f^{-1}(σ)` for `σ ∈ Y_m`: simplices are pairs `(x, θ)` with
/// `θ: [n] -> [m]` monotone and `f(x) = θ^*(σ)`.
pub struct Pullback<'a> {
    f: &'a SimplicialMap,
    m: usize,
    sigma: usize,
    preimages: Vec<HashMap<usize, Vec<usize>>>,
}

impl<'a> Pullback<'a> {
    pub fn new(f: &'a SimplicialMap, m: usize, sigma: usize) -> Self {
        let preimages = (0..=f.source().max_degree())
            .map(|n| {
                let mut by_image: HashMap<usize, Vec<usize>> = HashMap::new();
                for (x, &y) in f.table(n).iter().enumerate() {
                    by_image.entry(y).or_default().push(x);
                }
                by_image
            })
            .collect();
        Self { f, m, sigma, preimages }
    }
}

impl SimplicialObject for Pullback<'_> {
    type Simplex = (usize, Vec<usize>);

    fn simplices(&self, n: usize) -> Vec<Self::Simplex> {
        let mut out = Vec::new();
        for theta in monotone_maps(n, self.m) {
            let y = apply_operator(self.f.target(), self.m, &self.sigma, &theta);
            for &x in self.preimages[n].get(&y).map_or(&[][..], Vec::as_slice) {
                out.push((x, theta.clone()));
            }
        }
        out
    }

    fn face(&self, n: usize, i: usize, (x, theta): &Self::Simplex) -> Self::Simplex {
        (self.f.source().face(n, i, *x), compose_monotone(theta, &coface(n, i)))
    }

    fn degeneracy(&self, n: usize, j: usize, (x, theta): &Self::Simplex) -> Self::Simplex {
        (self.f.source().degeneracy(n, j, *x), compose_monotone(theta, &codegeneracy(n, j)))
    }

    fn truncation(&self) -> Option<usize> {
        Some(self.f.source().max_degree())
    }
}

/// `f^{-1}(σ)` through the source's truncation degree.
pub fn pullback_over_simplex(f: &SimplicialMap, m: usize, sigma: usize) -> Result<Labeled<(usize, Vec<usize>)>> {
    f.target().require(m, "pullback over simplex")?;
    materialize(&Pullback::new(f, m, sigma), f.source().max_degree())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimplexRef {
    pub degree: usize,
    pub id: usize,
}

/// One instance of the criterion: `α_*: f^{-1}(σ) -> f^{-1}(τ)` where
/// `σ = α^*(τ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationCheck {
    pub sigma: SimplexRef,
    pub tau: SimplexRef,
    pub alpha: Vec<usize>,
    pub holds: bool,
    pub failing_degree: Option<usize>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub degree_budget: usize,
    /// Number of triples `(σ, τ, α)` in range.
    pub total: usize,
    pub checks: Vec<FibrationCheck>,
    /// False when a check limit cut the enumeration short.
    pub complete: bool,
}

impl FibrationReport {
    pub fn holds(&self) -> bool {
        self.complete && self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&FibrationCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

/// For all `τ ∈ Y_m` and monotone `α: [k] -> [m]` with `k, m <= budget`,
/// tests whether `f^{-1}(α^* τ) -> f^{-1}(τ)` is a homology equivalence
/// through `budget`. The source must be truncated at `budget + 1` or above.
/// With `max_checks`, stops after that many triples and reports partial
/// coverage.
pub fn check_homology_fibration(
    f: &SimplicialMap,
    budget: usize,
    max_checks: Option<usize>,
) -> Result<FibrationReport> {
    f.source().require(budget + 1, "homology fibration check")?;
    let y = f.target();
    let mut triples = Vec::new();
    for m in 0..=budget {
        for tau in 0..y.count(m) {
            for k in 0..=budget {
                for alpha in monotone_maps(k, m) {
                    let sigma = apply_operator(y, m, &tau, &alpha);
                    triples.push((SimplexRef { degree: k, id: sigma }, SimplexRef { degree: m, id: tau }, alpha));
                }
            }
        }
    }
    let total = triples.len();
    let limit = max_checks.unwrap_or(total).min(total);
    let mut cache: FiberCache = HashMap::new();
    let fiber = |cache: &mut FiberCache, s: SimplexRef| -> Result<()> {
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(s) {
            let p = pullback_over_simplex(f, s.degree, s.id)?;
            let c = normalized_chains(&p.set, budget)?;
            e.insert((p, c));
        }
        Ok(())
    };
    let mut checks = Vec::with_capacity(limit);
    for (sigma, tau, alpha) in triples.into_iter().take(limit) {
        fiber(&mut cache, sigma)?;
        fiber(&mut cache, tau)?;
        let (sp, sc) = &cache[&sigma];
        let (tp, tc) = &cache[&tau];
        let report = compare_homology(sc, tc, budget, |n, x| {
            let (v, theta) = sp.label(n, x);
            tp.id(n, &(*v, compose_monotone(&alpha, theta)))
                .expect("α_* lands in the pullback over τ")
        })?;
        checks.push(FibrationCheck {
            sigma,
            tau,
            alpha,
            holds: report.holds,
            failing_degree: report.failing_degree,
            witness: report.witness(),
        });
    }
    Ok(FibrationReport {
        degree_budget: budget,
        total,
        checks,
        complete: limit == total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructions::{point, representable};
    use crate::simplicial::SimplicialMap;

    fn vertex_zero_inclusion(degree: usize) -> SimplicialMap {
        let d1 = representable(1, degree);
        SimplicialMap::from_fn(point(degree), d1.set.clone(), |n, _| d1.id(n, &vec![0; n + 1]).unwrap()).unwrap()
    }

    #[test]
    fn identity_pullback_is_standard_simplex() {
        let d2 = representable(2, 3);
        let id = SimplicialMap::identity(&d2.set);
        let top = d2.id(2, &vec![0, 1, 2]).unwrap();
        let p = pullback_over_simplex(&id, 2, top).unwrap();
        assert_eq!(p.set, representable(2, 3).set);
    }

    #[test]
    fn pullback_over_missed_vertex_is_empty() {
        let f = vertex_zero_inclusion(2);
        let p = pullback_over_simplex(&f, 0, 1).unwrap();
        assert!(p.set.is_empty());
    }

    #[test]
    fn counts_match_brute_force() {
        let f = vertex_zero_inclusion(3);
        let d1 = representable(1, 3);
        for m in 0..=1 {
            for s in 0..d1.set.count(m) {
                let p = pullback_over_simplex(&f, m, s).unwrap();
                for n in 0..=3 {
                    let brute = monotone_maps(n, m)
                        .into_iter()
                        .filter(|theta| apply_operator(&d1.set, m, &s, theta) == f.apply(n, 0))
                        .count();
                    assert_eq!(p.set.count(n), brute);
                }
            }
        }
    }

    #[test]
    fn identity_is_a_homology_fibration() {
        let d1 = representable(1, 2).set;
        assert!(check_homology_fibration(&SimplicialMap::identity(&d1), 1, None).unwrap().holds());
    }

    #[test]
    fn vertex_inclusion_is_not() {
        let report = check_homology_fibration(&vertex_zero_inclusion(3), 2, None).unwrap();
        assert!(!report.holds());
        let bad = report.first_failure().unwrap();
        assert_eq!(bad.failing_degree, Some(0));
        assert_eq!(bad.witness.as_deref(), Some("H_0: 0 vs Z"));
    }

    #[test]
    fn partial_coverage_is_reported() {
        let d1 = representable(1, 2).set;
        let r = check_homology_fibration(&SimplicialMap::identity(&d1), 1, Some(2)).unwrap();
        assert!(!r.complete);
        assert_eq!(r.checks.len(), 2);
        assert!(!r.holds());
    }
}
