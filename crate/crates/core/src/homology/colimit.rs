//! Colimits of `A -> A -> A -> ...` along an endomorphism.
//!
//! With `A = Z^g / R` and `T` the endomorphism on coordinates, stage `k`
//! looks at the image `I_k = (im T^k + R) / R`. The images decrease; once
//! `I_{k+1} = I_k`, `T` restricts to a surjective, hence bijective,
//! endomorphism of `I_k` and the colimit is `I_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

use super::group::AbelianGroup;
use super::lattice::{integer_kernel, Lattice};
use super::matrix::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageProfile {
    pub stage: usize,
    /// `I_k`, the image of `T^k`.
    pub image: AbelianGroup,
    /// Kernel of `T: I_k -> I_{k+1}`.
    pub kernel: AbelianGroup,
    /// `I_k / I_{k+1}`.
    pub cokernel: AbelianGroup,
}

impl StageProfile {
    pub fn injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn surjective(&self) -> bool {
        self.cokernel.is_trivial()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedSystemDescriptor {
    pub group: AbelianGroup,
    pub transition: IntegerMatrix,
    pub stages: Vec<StageProfile>,
    /// First stage whose transition is an isomorphism onto the next image.
    pub stabilized_at: Option<usize>,
    /// Only present once stabilized.
    pub colimit: Option<AbelianGroup>,
}

impl DirectedSystemDescriptor {
    pub fn stabilized(&self) -> bool {
        self.stabilized_at.is_some()
    }
}

/// Coordinate moduli of the canonical presentation of `group`.
fn moduli(group: &AbelianGroup) -> Vec<BigInt> {
    let mut m = group.torsion.clone();
    m.extend(std::iter::repeat_n(BigInt::zero(), group.free_rank));
    m
}

/// Checks that `t` respects the relations of `group`.
fn check_endomorphism(group: &AbelianGroup, t: &IntegerMatrix) -> Result<()> {
    let g = group.generators();
    if t.rows() != g || t.cols() != g {
        return Err(Error::Dimension(format!("endomorphism of {group} must be {g}x{g}")));
    }
    let m = moduli(group);
    for (j, order) in m.iter().enumerate().filter(|(_, o)| !o.is_zero()) {
        for (i, mi) in m.iter().enumerate() {
            let v = &t[(i, j)] * order;
            let ok = if mi.is_zero() { v.is_zero() } else { v.is_multiple_of(mi) };
            if !ok {
                return Err(Error::IllDefinedMap(format!(
                    "generator {j} has order {order} but its image does not"
                )));
            }
        }
    }
    Ok(())
}

pub fn stable_colimit(
    group: &AbelianGroup,
    t: &IntegerMatrix,
    stage_budget: usize,
) -> Result<DirectedSystemDescriptor> {
    if stage_budget == 0 {
        return Err(Error::ZeroBudget);
    }
    check_endomorphism(group, t)?;
    let g = group.generators();
    let m = moduli(group);
    let relations = IntegerMatrix::diagonal(&m);
    let lattice_of = |power: &IntegerMatrix| Lattice::span(&power.hstack(&relations).expect("g rows"));
    let mut power = IntegerMatrix::identity(g);
    let mut current = lattice_of(&power);
    let mut stages = Vec::with_capacity(stage_budget);
    let mut stabilized_at = None;
    let mut colimit: Option<AbelianGroup> = None;
    for k in 0..stage_budget {
        let next_power = t * &power;
        let next = lattice_of(&next_power);
        let basis = current.basis();
        let image = current.quotient_by(&relations);
        let cokernel = current.quotient_by(&next.basis());
        // kernel: c with T (B c) in R, i.e. [T B | -D] (c, y) = 0
        let tb = t * &basis;
        let mut neg = relations.clone();
        for i in 0..g {
            neg[(i, i)] = -neg[(i, i)].clone();
        }
        let solutions = integer_kernel(&tb.hstack(&neg).expect("g rows"));
        let kernel_gens = solutions.select_rows(0..current.rank());
        let mut relation_coords = IntegerMatrix::zeros(current.rank(), g);
        for j in 0..g {
            let c = current.coords(&relations.column(j)).expect("relations lie in every stage");
            for (i, v) in c.into_iter().enumerate() {
                relation_coords[(i, j)] = v;
            }
        }
        let kernel = Lattice::span(&kernel_gens.hstack(&relation_coords).expect("rank rows")).quotient_by(&relation_coords);
        let profile = StageProfile {
            stage: k,
            image,
            kernel,
            cokernel,
        };
        if let Some(c) = &colimit {
            assert_eq!(&profile.image, c, "images changed after stabilization");
            assert!(profile.surjective() && profile.injective());
        } else if profile.surjective() {
            stabilized_at = Some(k);
            colimit = Some(profile.image.clone());
        }
        stages.push(profile);
        power = next_power;
        current = next;
    }
    Ok(DirectedSystemDescriptor {
        group: group.clone(),
        transition: t.clone(),
        stages,
        stabilized_at,
        colimit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_stabilizes_immediately() {
        let a = AbelianGroup::from_invariants(1, [BigInt::from(2)]);
        let d = stable_colimit(&a, &IntegerMatrix::identity(2), 3).unwrap();
        assert_eq!(d.stabilized_at, Some(0));
        assert_eq!(d.colimit, Some(a));
    }

    #[test]
    fn doubling_never_stabilizes() {
        let z = AbelianGroup::free(1);
        let d = stable_colimit(&z, &IntegerMatrix::from_i64(&[vec![2]]), 4).unwrap();
        assert_eq!(d.stabilized_at, None);
        assert_eq!(d.colimit, None);
        for s in &d.stages {
            assert_eq!(s.image, z);
            assert!(s.injective());
            assert_eq!(s.cokernel, AbelianGroup::cyclic(2));
        }
    }

    #[test]
    fn killing_torsion() {
        // Z/2 + Z with T = 0 on the torsion summand and the identity on Z
        let a = AbelianGroup::from_invariants(1, [BigInt::from(2)]);
        let t = IntegerMatrix::from_i64(&[vec![0, 0], vec![0, 1]]);
        let d = stable_colimit(&a, &t, 3).unwrap();
        assert_eq!(d.stabilized_at, Some(1));
        assert_eq!(d.colimit, Some(AbelianGroup::free(1)));
        assert_eq!(d.stages[0].kernel, AbelianGroup::cyclic(2));
    }

    #[test]
    fn collapse_of_two_basis_vectors() {
        let t = IntegerMatrix::from_i64(&[vec![0, 0], vec![1, 1]]);
        let d = stable_colimit(&AbelianGroup::free(2), &t, 3).unwrap();
        assert_eq!(d.stabilized_at, Some(1));
        assert_eq!(d.colimit, Some(AbelianGroup::free(1)));
    }

    #[test]
    fn zero_budget_is_an_error() {
        assert_eq!(stable_colimit(&AbelianGroup::free(1), &IntegerMatrix::identity(1), 0), Err(Error::ZeroBudget));
    }

    #[test]
    fn ill_defined_endomorphism_is_rejected() {
        // an order-2 generator cannot map onto a free one
        let a = AbelianGroup::from_invariants(0, [BigInt::from(6)]);
        assert!(stable_colimit(&a, &IntegerMatrix::from_i64(&[vec![1]]), 1).is_ok());
        let b = AbelianGroup::from_invariants(1, [BigInt::from(2)]);
        assert!(stable_colimit(&b, &IntegerMatrix::from_i64(&[vec![1, 0], vec![1, 1]]), 1).is_err());
    }
}
