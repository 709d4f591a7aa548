//! Symmetric and alternating bilinear forms over the integers.

pub mod congruence;
pub mod form;
pub mod k0;
pub mod random;
pub mod symplectic;
pub mod witness;

pub use congruence::find_congruence;
pub use form::{
    evaluate, hyperbolic, invariants, orthogonal_sum, signature, standard_hyperbolic, validate_form, BilinearForm,
    FormInvariants,
};
pub use k0::{k0_is_invertible, stably_isomorphic, witt_monoid_report, K0Element, WittReport};
pub use random::{random_form, random_unimodular};
pub use symplectic::{symplectic_normalize, SymplecticNormalForm};
pub use witness::{hyperbolic_evenness, symplectic_trials, EvennessWitness, SymplecticTrials};
