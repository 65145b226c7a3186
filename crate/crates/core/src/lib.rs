//! Exact-arithmetic library for Puiseux monoids: additive submonoids of the
//! nonnegative rationals described by finite family descriptors.
//!
//! The crate decides membership with certificates, computes atom sets with an
//! exactness status, classifies monoid structure (monotonicity, boundedness,
//! atomicity), analyzes substantiality of prime sets, and builds the classic
//! counterexample submonoids as verifiable witnesses.
//!
//! All arithmetic is exact over arbitrary-precision rationals; the only
//! floating-point values in the crate are the explicitly approximate
//! Mertens-type offsets in [`engine::SubstantialityReport`].

pub mod descriptors;
pub mod engine;
mod error;
pub mod exactnum;
pub mod numsgp;
pub mod witnesses;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
