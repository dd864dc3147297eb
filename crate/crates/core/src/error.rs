use thiserror::Error;

/// Errors raised by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ZeroValuation,
    #[error("evaluation pole at {0}")]
    EvaluationPole(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("box ({row}, {col}) is not addable")]
    NotAddable { row: u32, col: u32 },
    #[error("rank {rank} must exceed the number of parts {parts}")]
    RankTooSmall { rank: usize, parts: usize },
    #[error("shift or rank mismatch between operands")]
    Mismatch,
    #[error("engine invariant violated: {0}")]
    Engine(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
