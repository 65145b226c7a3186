use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational constructor was given a negative numerator or a
    /// nonpositive denominator.
    #[error("invalid rational: {0}")]
    InvalidRational(String),

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// p-adic valuation of zero is undefined.
    #[error("p-adic valuation of zero is undefined")]
    UndefinedValuation,

    /// The valuation base is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Descriptor text failed to parse; `position` is a byte offset into the
    /// input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A computation refused to proceed past a resource cap (sieve bound,
    /// table size, enumeration budget) rather than silently degrade.
    #[error("resource limit: {0}")]
    Resource(String),
}
