use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` is special: it signals that two independent decision procedures
/// disagreed, which is always an implementation bug and never a mathematical
/// outcome.  The CLI maps it to its own exit code.
#[derive(Debug, Error)]
pub enum ToricError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("monoid needs at least one generator")]
    EmptyGenerators,

    #[error("not a sublattice: row {row:?} is not contained in the ambient lattice")]
    NotSublattice { row: Vec<i64> },

    #[error("functional vanishes on the lattice")]
    FunctionalVanishes,

    #[error("operation requires a cone of dimension >= 1")]
    ZeroDimensional,

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("enumeration bound must be nonnegative")]
    NegativeBound,

    #[error("invalid monoid description: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
