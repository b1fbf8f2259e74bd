use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NonPositive(u64),

    #[error("gcd of an empty list is undefined")]
    EmptyGcd,

    #[error("not a permutation of 0..{n}: {images:?}")]
    NotABijection { n: usize, images: Vec<usize> },

    #[error("element {value} out of range for a ground set of size {n}")]
    OutOfRange { value: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    #[error("invalid cycle type {0:?}: sum of i*j_i does not equal its length")]
    InvalidCycleType(Vec<u32>),

    #[error("the harrison-gcd variant has no convention for arity 0")]
    GcdArityZero,

    #[error("cycle index must describe the natural action to be induced")]
    NotNatural,

    #[error("result is not an integer: {0}")]
    NonIntegral(String),

    #[error("{0} does not fit in machine range")]
    TooLarge(&'static str),

    #[error("{what} exceeds guard: {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: String,
        limit: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
