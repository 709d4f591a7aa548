//! Finite categories with duality: nerves, subdivision, symmetric forms and
//! strictification.

pub mod dconstruction;
pub mod duality;
pub mod finite;
pub mod functor;
pub mod sd;
pub mod sym;

pub use dconstruction::{d_construction, verify_d_construction, DConstruction, DConstructionReport};
pub use duality::{nerve, real_nerve, CategoryWithDuality, Chain, Duality, Nerve, RealNerve};
pub use finite::{FiniteCategory, Morphism};
pub use functor::{check_natural, DualityPreservingFunctor, Functor};
pub use sd::{compare_sd_nerve, sd_category, sd_duality, unfold, SdNerveComparison, SubdivisionCategory};
pub use sym::{compare_sym, sym_category, SymCategory, SymComparison};
