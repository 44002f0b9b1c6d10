//! Scalar abstraction for the exact ring arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Integer-like scalars the marks arithmetic is generic over.
///
/// `i64`/`i128` work as long as every intermediate value stays in range;
/// `num_bigint::BigInt` (the crate-level [`crate::Int`] alias) never overflows
/// and is the default.
pub trait Scalar:
    Integer
    + Signed
    + ToPrimitive
    + From<i64>
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + ToPrimitive
        + From<i64>
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts a count into a scalar. Counts in this crate are bounded by the
/// enumeration caps, far below `i64::MAX`.
pub fn from_count<S: Scalar>(v: u64) -> S {
    debug_assert!(v <= i64::MAX as u64);
    S::from(v as i64)
}

/// Exact `base^exp` in the scalar type.
pub fn pow_scalar<S: Scalar>(base: &S, exp: usize) -> S {
    num_traits::pow::pow(base.clone(), exp)
}
