use num_bigint::BigUint;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Polynomial long division left a nonzero remainder, or the quotient
    /// would need non-integer coefficients. For the generating-function
    /// identities in this crate this always signals a misuse or a bug, never
    /// an expected runtime condition.
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    /// A caller-supplied argument was out of range.
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),

    /// The Schubert chain complex would exceed the configured cell budget.
    #[error("complexity limit exceeded: complex has {cells} cells, limit is {limit}")]
    ComplexityLimit { cells: BigUint, limit: usize },

    /// An internal consistency check failed; indicates a bug in this crate.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
