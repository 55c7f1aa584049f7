//! Error types shared across the crate.
//!
//! Three categories mirror the three ways a call can be invalid:
//!
//! - [`Error::Shape`] — structurally malformed data: wrong length, empty
//!   vector, mismatched dimensions.
//! - [`Error::Domain`] — data outside the mathematical domain of an
//!   operation: coordinates violating the simplex constraints, boundary
//!   points where the relative interior is required, non-finite entries.
//! - [`Error::Parameter`] — a scalar parameter outside its documented range:
//!   nonpositive norm exponent, out-of-range outcome index, a witness `t`
//!   outside its valid interval, regime combinations with no defined value.
//!
//! Constructors and validators return these errors instead of silently
//! repairing input; nothing in this crate renormalizes a vector on the
//! caller's behalf.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally malformed input (wrong length, empty, mismatched dimensions).
    #[error("shape error: {0}")]
    Shape(String),
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Scalar parameter outside its documented range.
    #[error("parameter error: {0}")]
    Parameter(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
