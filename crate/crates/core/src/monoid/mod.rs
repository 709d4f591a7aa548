//! Finite monoids with anti-involution and their bar constructions.

pub mod bar;
pub mod completion;
pub mod finite;
pub mod fixed;
pub mod ji;
pub mod telescope;

pub use bar::{bar, bar_projection, real_bar, two_sided_bar, two_sided_bar_bisimplicial, Bar, LeftAction, RightAction, TwistedFixedSet, TwoSidedBar};
pub use completion::{homology_ring_degree0, verify_group_completion, CompletionOutcome, CompletionReport, DegreeStatus};
pub use finite::{corpus, cyclic, max_monoid, symmetric3, trivial, FiniteMonoid};
pub use fixed::{fixed_point_bijection_b, BijectionReport};
pub use ji::{ji_contraction_check, JiReport};
pub use telescope::{find_cofinal_generator, telescope_homology, telescope_stage_bar, CofinalGenerator, TelescopeVariant};
