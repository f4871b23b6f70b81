use thiserror::Error;

/// Errors produced by the field, matrix, code and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported modulus {0}: expected one of 2, 3, 5, 7")]
    UnsupportedModulus(u32),

    #[error("modulus mismatch: GF({left}) vs GF({right})")]
    ModulusMismatch { left: u8, right: u8 },

    #[error("zero has no multiplicative inverse")]
    NotInvertible,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("the dual of the full space GF(p)^{n} is the zero code")]
    TrivialDual { n: usize },

    #[error("{what}: {required} exceeds the budget of {cap}")]
    BudgetExceeded {
        what: String,
        required: u128,
        cap: u128,
    },

    #[error("minimum distance must be at least 1, got {0}")]
    InvalidDistance(i64),

    #[error("word of length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("witness revalidation failed: {0}")]
    InvalidWitness(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
