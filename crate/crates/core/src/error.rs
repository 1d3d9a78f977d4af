use thiserror::Error;

/// Errors produced by the library.
///
/// Infeasible optimization problems are *not* errors; they are reported as a
/// status on the result. Everything here is either bad input or a broken
/// internal invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    Dimension(usize),

    #[error("index {index} out of range 1..={n}")]
    Index { index: usize, n: usize },

    #[error("binomial C({p}, {q}) overflows u128")]
    Overflow { p: u64, q: u64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("orness must lie in [0, 1], got {0}")]
    Orness(f64),

    #[error("k-additive level must lie in 1..={n}, got {k}")]
    KLevel { k: usize, n: usize },

    #[error("alpha vector violates condition {condition} (slack {slack:.3e})")]
    InfeasibleAlpha { condition: String, slack: f64 },

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
