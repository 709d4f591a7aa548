//! Computational engine for monoids with anti-involution and categories with
//! strict duality.
//!
//! The crate builds truncated (bi)simplicial sets as explicit face and
//! degeneracy tables, computes their integral homology exactly through Smith
//! normal form, and checks the equivariant group-completion identities on
//! finite instances:
//!
//! * [`simplicial`]: truncated simplicial and bisimplicial sets, real
//!   structures, edgewise subdivision, fixed points, pullbacks over simplices
//!   and the homology-fibration checker.
//! * [`homology`]: integer matrices, Smith normal form, normalized chains,
//!   induced maps and directed-system colimits.
//! * [`monoid`]: finite monoids with anti-involution, bar constructions, the
//!   fixed-point bijection, telescopes and the group-completion pipeline.
//! * [`localization`]: localization of commutative monoids and of sets with a
//!   translation.
//! * [`forms`]: symmetric and symplectic bilinear forms over the integers.
//! * [`category`]: finite categories with duality, nerves, subdivision,
//!   symmetric-form categories and the strictification construction.
//! * [`json`]: the JSON input schemas.

pub mod category;
pub mod error;
pub mod forms;
pub mod homology;
pub mod json;
pub mod localization;
pub mod monoid;
pub mod simplicial;

pub use error::{Error, Result};
