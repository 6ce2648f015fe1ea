use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix is singular")]
    Singular,
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("refusing to enumerate {count} subspaces (cap {cap})")]
    EnumerationCap { count: BigUint, cap: u64 },
    #[error("reduction modulo {p} degenerates the input")]
    DegenerateReduction { p: u64 },
    #[error("forms are linearly dependent")]
    DependentForms,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
