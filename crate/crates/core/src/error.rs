use thiserror::Error;

/// Errors raised by the arithmetic routines.
///
/// Every variant corresponds to a violated precondition of some operation;
/// `Internal` is reserved for self-checks that should never fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here")]
    Zero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{0} exceeds the deterministic primality bound 3.3e14")]
    PrimalityBound(String),
    #[error("{0} is not a fundamental discriminant")]
    NonFundamental(i64),
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(i64, i64),
    #[error("objects live over different fields or algebras")]
    FieldMismatch,
    #[error("the narrow class group cannot carry Steinitz classes")]
    NarrowSteinitz,
    #[error("prime {0} ramifies in the order")]
    RamifiedPrime(u64),
    #[error("Gram matrix is not positive definite")]
    IndefiniteGram,
    #[error("operation needs a definite quaternion algebra")]
    IndefiniteAlgebra,
    #[error("right order of the left factor differs from the left order of the right factor")]
    IncompatibleOrders,
    #[error("order is not maximal")]
    NonMaximal,
    #[error("ideals belong to different orders")]
    OrderMismatch,
    #[error("unsupported center: {0}")]
    UnsupportedCenter(String),
    #[error("invalid algebra description: {0}")]
    InvalidSpec(String),
    #[error("lattice is degenerate")]
    Degenerate,
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
