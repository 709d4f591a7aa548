//! Exact integral homology through Smith normal form.

pub mod chains;
pub mod colimit;
pub mod group;
pub mod induced;
pub mod lattice;
pub mod matrix;
pub mod snf;

pub use chains::{homology_through, normalized_chains, ChainComplex};
pub use colimit::{stable_colimit, DirectedSystemDescriptor, StageProfile};
pub use group::AbelianGroup;
pub use induced::{
    compare_homology, induced_map, is_homology_equivalence, map_on_homology, EquivalenceReport, HomologyData,
    HomologyMap, HomologyPresentation,
};
pub use matrix::{IntegerMatrix, SparseMatrix};
pub use snf::{smith_form_invariants, smith_normal_form, SmithForm};
