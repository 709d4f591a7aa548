use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{context}: needs truncation degree {needed}, input is truncated at {available}")]
    Truncation {
        context: &'static str,
        needed: usize,
        available: usize,
    },

    #[error("malformed simplicial data: {0}")]
    Malformed(String),

    #[error("simplicial identity {identity} fails at degree {degree} on simplex {simplex}")]
    SimplicialIdentity {
        identity: String,
        degree: usize,
        simplex: usize,
    },

    #[error("real-structure relation {relation} fails at degree {degree}, index {index}, simplex {simplex}")]
    RealRelation {
        relation: &'static str,
        degree: usize,
        index: usize,
        simplex: usize,
    },

    #[error("map is not simplicial: {operator} at degree {degree} disagrees on simplex {simplex}")]
    NotSimplicial {
        operator: String,
        degree: usize,
        simplex: usize,
    },

    #[error("monoid axiom violated: {0}")]
    MonoidAxiom(String),

    #[error("anti-involution law fails: inv({a}*{b}) != inv({b})*inv({a})")]
    AntiInvolution { a: usize, b: usize },

    #[error("monoid is not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: usize, b: usize },

    #[error("action law violated: {0}")]
    ActionLaw(String),

    #[error("element {element} is not a cofinal generator: {witness} divides no power of it")]
    NotCofinal { element: usize, witness: usize },

    #[error("category axiom violated: {0}")]
    CategoryAxiom(String),

    #[error("duality axiom violated: {0}")]
    DualityAxiom(String),

    #[error("form is not {expected}-symmetric at ({row}, {col})")]
    FormSymmetry { expected: i8, row: usize, col: usize },

    #[error("epsilon must be +1 or -1, got {0}")]
    BadEpsilon(i64),

    #[error("forms with different symmetry signs cannot be combined")]
    EpsilonMismatch,

    #[error("form is degenerate (determinant {0})")]
    Degenerate(String),

    #[error("alternating form has odd rank {0}")]
    OddRank(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree {degree} out of range (computed through {max})")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("map is not well defined on relations: {0}")]
    IllDefinedMap(String),

    #[error("budget must be positive")]
    ZeroBudget,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
