use thiserror::Error;

/// Which lattice operation a homomorphism failed to preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeOp {
    Join,
    Meet,
    Bottom,
    Top,
}

impl std::fmt::Display for LatticeOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LatticeOp::Join => "join",
            LatticeOp::Meet => "meet",
            LatticeOp::Bottom => "bottom",
            LatticeOp::Top => "top",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for a structure with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("relation is not antisymmetric: cycle {cycle:?}")]
    AntisymmetryViolation { cycle: Vec<usize> },

    #[error("empty poset rejected (enable the empty-poset flag to admit it)")]
    EmptyPoset,

    #[error("trivial lattice (0 = 1) rejected (enable the trivial-lattice flag to admit it)")]
    TrivialLattice,

    #[error("not a permutation of 0..{len}")]
    NotAPermutation { len: usize },

    #[error("linear order does not extend the partial order: {lower} < {upper} but {upper} precedes {lower}")]
    NotAnExtension { lower: usize, upper: usize },

    #[error("structures have different flavors (ordered vs unordered)")]
    FlavorMismatch,

    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded { what: String, size: usize, bound: usize },

    #[error("not a lattice: {law} fails at ({x}, {y}, {z})")]
    NotALattice { law: &'static str, x: usize, y: usize, z: usize },

    #[error("not distributive: x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z) at (x, y, z) = ({x}, {y}, {z})")]
    NotDistributive { x: usize, y: usize, z: usize },

    #[error("not bounded: {reason}")]
    NotBounded { reason: String },

    #[error("not a homomorphism: {op} not preserved at ({x}, {y})")]
    NotHomomorphism { op: LatticeOp, x: usize, y: usize },

    #[error("map is not surjective: element {missing} of the target has no preimage")]
    NotSurjective { missing: usize },

    #[error("map is not a poset homomorphism: {x} ≤ {y} but images are not ordered")]
    NotMonotone { x: usize, y: usize },

    #[error("map is not an embedding at ({x}, {y})")]
    NotEmbedding { x: usize, y: usize },

    #[error("not a congruence: {reason}")]
    NotACongruence { reason: String },

    #[error("natural order does not belong to the given lattice")]
    OrderMismatch,

    #[error("not positive: {reason}")]
    NotPositive { reason: String },

    #[error("hom(A, B) is empty")]
    EmptyHomAB,

    #[error("search exceeded the time limit of {secs} s")]
    Timeout { secs: u64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by configured size or time limits.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. } | Error::Timeout { .. })
    }
}

impl Error {
    /// Variant name, stable across releases; used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::AntisymmetryViolation { .. } => "AntisymmetryViolation",
            Error::EmptyPoset => "EmptyPoset",
            Error::TrivialLattice => "TrivialLattice",
            Error::NotAPermutation { .. } => "NotAPermutation",
            Error::NotAnExtension { .. } => "NotAnExtension",
            Error::FlavorMismatch => "FlavorMismatch",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotALattice { .. } => "NotALattice",
            Error::NotDistributive { .. } => "NotDistributive",
            Error::NotBounded { .. } => "NotBounded",
            Error::NotHomomorphism { .. } => "NotHomomorphism",
            Error::NotSurjective { .. } => "NotSurjective",
            Error::NotMonotone { .. } => "NotMonotone",
            Error::NotEmbedding { .. } => "NotEmbedding",
            Error::NotACongruence { .. } => "NotACongruence",
            Error::OrderMismatch => "OrderMismatch",
            Error::NotPositive { .. } => "NotPositive",
            Error::EmptyHomAB => "EmptyHomAB",
            Error::Timeout { .. } => "Timeout",
            Error::Invalid(_) => "Invalid",
        }
    }
}
