use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operation requires a univariate polynomial, got dimension {dimension}")]
    NotUnivariate { dimension: usize },

    #[error("invalid rational {0}")]
    InvalidRational(String),

    #[error("m = {m} out of range [0, {n}/2] for n = {n}")]
    IndexOutOfRange { n: u32, m: u32 },

    #[error("parameter c must be nonzero for the explicit coefficient formula")]
    ZeroParameter,

    #[error("letter uses generator {generator}, rank is {rank}")]
    LetterOutOfRank { generator: usize, rank: usize },

    #[error("enumeration needs ~{required} nodes, exceeding the budget of {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}
