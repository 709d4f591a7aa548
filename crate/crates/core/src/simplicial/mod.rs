//! Truncated simplicial and bisimplicial sets.

pub mod bisimplicial;
pub mod components;
pub mod constructions;
pub mod map;
pub mod pullback;
pub mod real;
pub mod set;
pub mod subdivision;

pub use bisimplicial::{diagonal, materialize_bi, sd_h, sd_v, BisimplicialObject, BisimplicialSet, LabeledBi};
pub use components::pi0;
pub use constructions::{circle, discrete, point, representable};
pub use map::SimplicialMap;
pub use pullback::{check_homology_fibration, pullback_over_simplex, FibrationReport};
pub use real::{attach_real_structure, fixed_points, materialize_real, sd_action, C2Action, RealSimplicialObject, RealStructure};
pub use set::{materialize, Labeled, SimplicialObject, SimplicialSet};
pub use subdivision::{sd, Subdivision};
