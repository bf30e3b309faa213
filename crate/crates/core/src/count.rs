//! Scalar abstraction for the counting kernels.

use std::fmt;

use num_traits::Num;

/// Exact counting scalar: big-integer by default (`crate::Natural`),
/// or any builtin unsigned integer when the caller knows the values fit.
///
/// Subtraction is only ever applied where the result is mathematically
/// nonnegative (palindromic row differences), so unsigned types are fine.
pub trait Count: Clone + Ord + fmt::Debug + fmt::Display + Num + From<u32> {}

impl<T> Count for T where T: Clone + Ord + fmt::Debug + fmt::Display + Num + From<u32> {}
