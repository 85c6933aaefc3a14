use thiserror::Error;

/// Errors surfaced by decision procedures and filtration builders.
///
/// Ambient-dimension mismatches between operands are programming errors and
/// panic instead, in the style of the linear-algebra crates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation requires a proper nonzero ideal.
    #[error("improper ideal: operation requires a proper nonzero ideal")]
    ImproperIdeal,
    #[error("ideal is not primary")]
    NotPrimary,
    #[error("face {0} does not belong to the multicomplex")]
    NotAFace(String),
    #[error("order is not a permutation of the expected {expected} faces")]
    NotAPermutation { expected: usize },
    #[error("split index {split} out of range 1..={len}")]
    SplitOutOfRange { split: usize, len: usize },
    #[error("search cap exceeded: instance has {size} faces, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("order and split index do not form a maximal shelling")]
    NotAMaximalShelling,
    #[error("order is not a shelling")]
    NotAShelling,
    #[error("step {step}: set difference is not a Stanley set (empty: {empty})")]
    NotStanleySet { step: usize, empty: bool },
    #[error("facet list is not an antichain: {0}")]
    NotAnAntichain(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no squarefree witness monomial generates step {step}")]
    WitnessSearchFailed { step: usize },
    #[error("step {step}: witness degree {got} differs from the expected shelling number {expected}")]
    ShiftDegreeMismatch { step: usize, got: u64, expected: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
