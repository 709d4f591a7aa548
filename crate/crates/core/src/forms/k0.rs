//! Stable classes of unimodular forms and the Grothendieck–Witt monoid with
//! hyperbolic forms inverted.
//!
//! Stable isomorphism of unimodular symmetric forms is decided by rank,
//! signature and parity: adding a hyperbolic plane makes both forms
//! indefinite, and indefinite unimodular forms are classified by these
//! invariants. Alternating unimodular forms are classified by rank alone,
//! which [`symplectic_normalize`] proves constructively.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::IntegerMatrix;
use crate::localization::{localize_free, FreeLocalization};

use super::congruence::find_congruence;
use super::form::{invariants, orthogonal_sum, standard_hyperbolic, validate_form, BilinearForm, FormInvariants};
use super::symplectic::symplectic_normalize;

/// `[F] - [H^m]` in normal form. Two differences are equal exactly when
/// these fields agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K0Element {
    pub epsilon: i8,
    /// `rank F - 2m`.
    pub virtual_rank: i64,
    /// `p - q` of `F`; zero for `ε = -1`.
    pub signature: i64,
    /// Some diagonal entry of `F` is odd; always false for `ε = -1`.
    pub odd: bool,
}

impl K0Element {
    pub fn difference(f: &BilinearForm, hyperbolic_planes: usize) -> Result<Self> {
        f.require_nondegenerate()?;
        let inv = invariants(f);
        let (p, q) = inv.signature.unwrap_or((0, 0));
        Ok(Self {
            epsilon: f.epsilon,
            virtual_rank: f.rank() as i64 - 2 * hyperbolic_planes as i64,
            signature: p as i64 - q as i64,
            odd: inv.even == Some(false),
        })
    }

    pub fn class(f: &BilinearForm) -> Result<Self> {
        Self::difference(f, 0)
    }

    pub fn unit(epsilon: i8) -> Self {
        Self {
            epsilon,
            virtual_rank: 0,
            signature: 0,
            odd: false,
        }
    }

    pub fn add(&self, other: &K0Element) -> Result<K0Element> {
        if self.epsilon != other.epsilon {
            return Err(Error::EpsilonMismatch);
        }
        Ok(K0Element {
            epsilon: self.epsilon,
            virtual_rank: self.virtual_rank + other.virtual_rank,
            signature: self.signature + other.signature,
            odd: self.odd || other.odd,
        })
    }

    /// Re-derives the normal form of a class; the identity on valid classes.
    pub fn normalize(&self) -> Result<Self> {
        if self.epsilon != 1 && self.epsilon != -1 {
            return Err(Error::BadEpsilon(self.epsilon as i64));
        }
        if (self.virtual_rank - self.signature) % 2 != 0 {
            return Err(Error::Malformed("rank and signature have different parity".into()));
        }
        if self.epsilon == -1 && (self.signature != 0 || self.odd || self.virtual_rank % 2 != 0) {
            return Err(Error::Malformed("alternating classes have even rank and no signature".into()));
        }
        Ok(*self)
    }
}

/// Invertibility after inverting hyperbolic classes. Hyperbolic forms are
/// even and parity is additive in the sense that an odd summand makes the
/// sum odd, so an odd class can never be cancelled; an even class `[F]` is
/// cancelled by `[-F]`, since `F ⊥ -F` is even, indefinite and of signature
/// zero, hence hyperbolic.
pub fn k0_is_invertible(class: &K0Element) -> Result<bool> {
    let c = class.normalize()?;
    Ok(c.epsilon == -1 || !c.odd)
}

pub fn stably_isomorphic(f: &BilinearForm, g: &BilinearForm) -> Result<bool> {
    if f.epsilon != g.epsilon {
        return Err(Error::EpsilonMismatch);
    }
    f.require_nondegenerate()?;
    g.require_nondegenerate()?;
    if f.epsilon == -1 {
        return Ok(symplectic_normalize(f)?.n == symplectic_normalize(g)?.n);
    }
    let (a, b) = (invariants(f), invariants(g));
    Ok(a.rank == b.rank && a.signature == b.signature && a.even == b.even)
}

/// The `E_8` lattice: even, unimodular, positive definite.
pub fn e8() -> BilinearForm {
    let mut g = IntegerMatrix::identity(8);
    for i in 0..8 {
        g[(i, i)] = BigInt::from(2);
    }
    // chain 0-1-2-3-4-5-6 with 7 attached to 4
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        g[(i, j)] = BigInt::from(-1);
        g[(j, i)] = BigInt::from(-1);
    }
    validate_form(g, 1).expect("symmetric")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WittEntry {
    pub name: String,
    pub invariants: FormInvariants,
    pub class: K0Element,
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WittRelation {
    pub left: String,
    pub right: String,
    pub stably_isomorphic: bool,
    /// `P` with `Pᵀ (F ⊥ H) P = G ⊥ H` from a bounded search, when found.
    pub witness: Option<IntegerMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticEntry {
    pub n: usize,
    pub rank: usize,
    pub change_of_basis: IntegerMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WittReport {
    pub symmetric: Vec<WittEntry>,
    pub relations: Vec<WittRelation>,
    /// Classes of `₋₁H^n`; the rank map identifies the monoid with `N`.
    pub symplectic: Vec<SymplecticEntry>,
    pub symplectic_group: FreeLocalization,
    pub scope: String,
}

fn sum(forms: &[&BilinearForm]) -> BilinearForm {
    forms
        .iter()
        .try_fold(BilinearForm::zero(forms[0].epsilon), |acc, f| orthogonal_sum(&acc, f))
        .expect("same epsilon")
}

pub fn witt_monoid_report() -> WittReport {
    let one = BilinearForm::diagonal_unit(1);
    let minus = BilinearForm::diagonal_unit(-1);
    let h = standard_hyperbolic(1, 1);
    let named = [("0", BilinearForm::zero(1)),
        ("<1>", one.clone()),
        ("<-1>", minus.clone()),
        ("H", h.clone()),
        ("<1> + <-1>", sum(&[&one, &minus])),
        ("<1> + H", sum(&[&one, &h])),
        ("<1> + <1> + <-1>", sum(&[&one, &one, &minus])),
        ("E8", e8())];
    let symmetric = named
        .iter()
        .map(|(name, f)| {
            let class = K0Element::class(f).expect("corpus forms are unimodular");
            WittEntry {
                name: name.to_string(),
                invariants: invariants(f),
                class,
                invertible: k0_is_invertible(&class).expect("normal form"),
            }
        })
        .collect();
    let find = |name: &str| named.iter().find(|(n, _)| *n == name).map(|(_, f)| f).expect("corpus name");
    let relations = [("<1> + <-1>", "H"), ("<1> + H", "<1> + <1> + <-1>"), ("<1>", "<-1>")]
        .iter()
        .map(|&(l, r)| {
            let (f, g) = (find(l), find(r));
            let stable = stably_isomorphic(f, g).expect("unimodular corpus");
            let witness = if stable {
                find_congruence(&orthogonal_sum(f, &h).expect("eps"), &orthogonal_sum(g, &h).expect("eps"), 2)
            } else {
                None
            };
            WittRelation {
                left: l.into(),
                right: r.into(),
                stably_isomorphic: stable,
                witness,
            }
        })
        .collect();
    let symplectic = (0..=3)
        .map(|n| {
            let f = standard_hyperbolic(n, -1);
            let normal = symplectic_normalize(&f).expect("standard symplectic form");
            SymplecticEntry {
                n: normal.n,
                rank: f.rank(),
                change_of_basis: normal.change_of_basis,
            }
        })
        .collect();
    WittReport {
        symmetric,
        relations,
        symplectic,
        symplectic_group: localize_free(1, 4),
        scope: "symmetric classes are listed by (rank, signature, parity) on a fixed corpus; \
                no complete presentation of the symmetric monoid is claimed"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::IntegerMatrix;

    #[test]
    fn invertibility_examples() {
        assert!(k0_is_invertible(&K0Element::class(&standard_hyperbolic(1, 1)).unwrap()).unwrap());
        assert!(!k0_is_invertible(&K0Element::class(&BilinearForm::diagonal_unit(1)).unwrap()).unwrap());
        assert!(k0_is_invertible(&K0Element::unit(1)).unwrap());
        for m in 0..=4 {
            let c = K0Element::difference(&standard_hyperbolic(m, 1), m).unwrap();
            assert_eq!(c, K0Element::unit(1));
            assert!(k0_is_invertible(&K0Element::class(&standard_hyperbolic(m, 1)).unwrap()).unwrap());
        }
    }

    #[test]
    fn malformed_classes_are_rejected() {
        let bad = K0Element {
            epsilon: 1,
            virtual_rank: 1,
            signature: 0,
            odd: true,
        };
        assert!(k0_is_invertible(&bad).is_err());
    }

    #[test]
    fn e8_is_even_and_invertible() {
        let inv = invariants(&e8());
        assert_eq!(inv.determinant, BigInt::from(1));
        assert_eq!(inv.signature, Some((8, 0)));
        assert_eq!(inv.even, Some(true));
    }

    #[test]
    fn stable_isomorphism() {
        let one = BilinearForm::diagonal_unit(1);
        let h = standard_hyperbolic(1, 1);
        let a = orthogonal_sum(&one, &h).unwrap();
        let b = orthogonal_sum(&h, &one).unwrap();
        assert!(stably_isomorphic(&a, &b).unwrap());
        assert!(!stably_isomorphic(&orthogonal_sum(&one, &BilinearForm::diagonal_unit(-1)).unwrap(), &h).unwrap());
        let degenerate = validate_form(IntegerMatrix::from_i64(&[vec![2]]), 1).unwrap();
        assert!(matches!(stably_isomorphic(&degenerate, &one), Err(Error::Degenerate(_))));
    }

    #[test]
    fn report() {
        let r = witt_monoid_report();
        let one = r.symmetric.iter().find(|e| e.name == "<1>").unwrap();
        assert!(!one.invertible);
        assert_eq!(r.symmetric[0].class, K0Element::unit(1));
        assert!(r.relations[1].stably_isomorphic && r.relations[1].witness.is_some());
        assert_eq!(r.symplectic.iter().map(|s| s.n).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert!(r.symplectic_group.classes_are_differences);
    }
}
