use thiserror::Error;

/// Errors raised by the exact kernels and classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("truncation order must be at least {min}, got {got}")]
    InvalidTruncation { min: usize, got: usize },
    #[error("series with zero constant term is not a unit")]
    NonUnit,
    #[error("division by zero")]
    DivisionByZero,
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("partition (d_beta={d_beta}, d_gamma={d_gamma}) is not stable")]
    NotStable { d_beta: usize, d_gamma: usize },
    #[error("scale must be nonzero")]
    InvalidScale,
    #[error("configuration does not saturate a semistability bound")]
    NotOnBoundary,
    #[error("configuration is outside the stable locus, no affine chart contains it")]
    NoChart,
    #[error("configuration is GIT-unstable")]
    GitUnstable,
    #[error("linearization exponent {n} outside 0..={big_n}")]
    InvalidLinearization { n: i64, big_n: usize },
    #[error("invalid line bundle power r={0}, must be at least 1")]
    InvalidPower(u32),
    #[error("monomial search space N*r={size} exceeds limit {limit}")]
    SearchSpaceTooLarge { size: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("determinant is not a unit multiple of zeta: not a simple-zero Hecke datum")]
    NotSimpleZero,
    #[error("evaluation covector is zero")]
    ZeroCovector,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
