//! The equivariant group-completion check for discrete monoids.
//!
//! The homology side is `colim_t H_q(dB(M, M, M^{C_2}))`, computed from the
//! translation on stage homology. The localized side is built from sets
//! only: the colimit of `π_0(M^{C_2})` under the twisted action of the
//! cofinal generator, giving `Z^{#classes}` in degree 0 and nothing above.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{AbelianGroup, DirectedSystemDescriptor};
use crate::localization::{localize_finite_set, LocalizedSetDescriptor};

use super::bar::TwistedFixedSet;
use super::finite::FiniteMonoid;
use super::fixed::{fixed_point_bijection_b, BijectionReport};
use super::telescope::{find_cofinal_generator, telescope_homology, CofinalGenerator, TelescopeVariant};

/// `H_0(M) = Z[M]` for a discrete monoid: basis `M`, product of basis
/// elements given by the monoid table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeZeroRing {
    pub basis: Vec<String>,
    pub unit: usize,
    pub product: Vec<Vec<usize>>,
    /// `π_0 M` central in `H_*(M)`; for discrete `M` this is commutativity.
    pub central: bool,
    pub noncommuting_pair: Option<(usize, usize)>,
}

pub fn homology_ring_degree0(m: &FiniteMonoid) -> DegreeZeroRing {
    let noncommuting_pair = m.noncommuting_pair();
    DegreeZeroRing {
        basis: m.names().to_vec(),
        unit: m.unit(),
        product: m.elements().map(|a| m.elements().map(|b| m.mul(a, b)).collect()).collect(),
        central: noncommuting_pair.is_none(),
        noncommuting_pair,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DegreeStatus {
    Match,
    Mismatch,
    Unstabilized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionDegree {
    pub degree: usize,
    pub status: DegreeStatus,
    pub homology_side: DirectedSystemDescriptor,
    /// Absent while the set-level colimit has not stabilized.
    pub localized_side: Option<AbelianGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CompletionOutcome {
    /// A hypothesis of the comparison fails; nothing was compared.
    HypothesisFailed { hypothesis: String, reason: String },
    Compared {
        generator: CofinalGenerator,
        bijection: BijectionReport,
        pi0: LocalizedSetDescriptor,
        degrees: Vec<CompletionDegree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionReport {
    pub degree_budget: usize,
    pub stage_budget: usize,
    pub outcome: CompletionOutcome,
}

impl CompletionReport {
    pub fn hypotheses_hold(&self) -> bool {
        matches!(self.outcome, CompletionOutcome::Compared { .. })
    }

    /// Hypotheses hold, `b` is a natural bijection and every degree matches.
    pub fn all_match(&self) -> bool {
        match &self.outcome {
            CompletionOutcome::Compared { bijection, degrees, .. } => {
                bijection.holds && degrees.iter().all(|d| d.status == DegreeStatus::Match)
            }
            CompletionOutcome::HypothesisFailed { .. } => false,
        }
    }
}

pub fn verify_group_completion(m: &FiniteMonoid, degree_budget: usize, stage_budget: usize) -> Result<CompletionReport> {
    if stage_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let failed = |hypothesis: &str, reason: String| {
        Ok(CompletionReport {
            degree_budget,
            stage_budget,
            outcome: CompletionOutcome::HypothesisFailed {
                hypothesis: hypothesis.into(),
                reason,
            },
        })
    };
    let ring = homology_ring_degree0(m);
    if let Some((a, b)) = ring.noncommuting_pair {
        return failed(
            "pi0_central",
            format!("{}*{} != {}*{}", m.name(a), m.name(b), m.name(b), m.name(a)),
        );
    }
    let generator = match find_cofinal_generator(m) {
        Ok(g) => g,
        Err(e) => return failed("cofinal_generator", e.to_string()),
    };
    let t = generator.element;
    let bijection = fixed_point_bijection_b(m, degree_budget);

    let fixed = TwistedFixedSet::new(m)?;
    let translation: Vec<usize> = (0..fixed.size()).map(|y| fixed.action.act(t, y)).collect();
    let pi0 = localize_finite_set(&translation, stage_budget)?;
    let homology = telescope_homology(m, t, TelescopeVariant::FixedSet, degree_budget, stage_budget)?;

    let degrees = homology
        .into_iter()
        .enumerate()
        .map(|(q, descriptor)| {
            // discrete sets have no homology above degree 0
            let localized_side = match q {
                0 => pi0.class_count().map(AbelianGroup::free),
                _ => Some(AbelianGroup::trivial()),
            };
            let status = match (&descriptor.colimit, &localized_side) {
                (Some(c), Some(l)) if c == l => DegreeStatus::Match,
                (Some(_), Some(_)) => DegreeStatus::Mismatch,
                _ => DegreeStatus::Unstabilized,
            };
            CompletionDegree {
                degree: q,
                status,
                homology_side: descriptor,
                localized_side,
            }
        })
        .collect();
    Ok(CompletionReport {
        degree_budget,
        stage_budget,
        outcome: CompletionOutcome::Compared {
            generator,
            bijection,
            pi0,
            degrees,
        },
    })
}
