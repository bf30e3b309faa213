//! Exact-arithmetic toolkit for s-binomial coefficients, s-Catalan and
//! spin s-Catalan numbers, and Littlewood-Richardson coefficients computed
//! by tableau enumeration.
//!
//! The counting kernels in [`sbinomial`] and [`catalan`] are generic over a
//! [`count::Count`] scalar; the default alias [`Natural`] is an
//! arbitrary-precision `BigUint`, and the builtin unsigned integers can be
//! substituted for bounded runs.

pub mod catalan;
pub mod cli;
pub mod count;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod sbinomial;
pub mod stretchpoly;
pub mod verify;

/// Default exact counting scalar.
pub type Natural = num_bigint::BigUint;

pub use count::Count;
pub use error::Error;
pub use partitions::{HalfInt, Partition, SkewShape};
