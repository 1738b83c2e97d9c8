use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root of unity order must be positive, got {0}")]
    InvalidOrder(u32),
    #[error("no prime p = 1 (mod {n}) found above {floor}")]
    NoPrime { n: u32, floor: u64 },
    #[error("{p} is not a prime congruent to 1 mod {n}")]
    BadPrime { n: u32, p: u64 },
    #[error("coefficient denominator vanishes modulo {p}")]
    NotSpecializable { p: u64 },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("cartan matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("cartan matrix is empty")]
    EmptyMatrix,
    #[error("invalid cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("cartan matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("unknown cartan type `{0}`")]
    UnknownType(String),
    #[error("resource budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget { what: &'static str, needed: u128, budget: u128 },
    #[error("relation {index} is not homogeneous: {reason}")]
    NonHomogeneous { index: usize, reason: String },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("quotient truncated at degree {built}; degree {requested} unavailable")]
    Truncated { built: usize, requested: usize },
    #[error("operation requires a Cayley quiver")]
    NotCayley,
    #[error("|G| = {order} is not invertible modulo {p}")]
    GroupOrderNotInvertible { order: u128, p: u64 },
    #[error("element has a term of positive length where a vertex combination was expected")]
    NotDegreeZero,
    #[error("unsupported instance: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
