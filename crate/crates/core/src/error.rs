use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field spec `{0}`")]
    BadFieldSpec(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("denominator {den} is not invertible in F_{p}")]
    NonInvertibleDenominator { den: String, p: u64 },

    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("type {0} is excluded in characteristic 2")]
    ExcludedInChar2(String),
    #[error("root {0:?} does not belong to this root system")]
    NotARoot(Vec<i32>),
    #[error("chain length is undefined for proportional roots")]
    ProportionalRoots,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("characteristic {char} not allowed: {reason}")]
    BadCharacteristic { char: u64, reason: String },
    #[error("element is central")]
    CentralElement,
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid Engel coefficients: {0}")]
    BadEngel(String),
    #[error("arity mismatch: polynomial has {expected} variables, got {got} values")]
    ArityMismatch { expected: usize, got: usize },

    #[error("unsupported realization: {0}")]
    UnsupportedRealization(String),
    #[error("matrix is not in {realization}: {reason}")]
    NotInRealization { realization: String, reason: String },
    #[error("zero matrix has no invariant ratio")]
    ZeroMatrix,

    #[error("exhaustive enumeration of {size} points exceeds budget {budget}; use sampled mode")]
    BudgetExceeded { size: String, budget: u64 },
    #[error("center is trivial")]
    TrivialCenter,
    #[error("cost guard: {0}")]
    CostGuard(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
