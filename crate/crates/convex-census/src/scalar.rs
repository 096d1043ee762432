//! Exact scalar abstraction for geometric predicates.
//!
//! Predicates in this crate are polynomial sign tests, so they work over
//! any ordered ring with exact arithmetic. Keeping them generic lets the
//! hot counting loops run on machine integers or `BigInt` after
//! denominator scaling while the public interfaces stay on `BigRational`.
//! Floating-point types deliberately have no impl: every predicate here
//! must be exact.

use num_traits::Signed;
use std::ops::{Add, Mul, Sub};

/// An exact, totally ordered ring scalar.
///
/// The by-reference methods exist so that bignum instantiations avoid
/// cloning operands in the innermost predicate loops; for `Copy` types
/// they compile to the plain operations.
pub trait Scalar: Clone + Ord + Signed {
    /// `self - other` without consuming either operand.
    fn ref_sub(&self, other: &Self) -> Self;
    /// `self * other` without consuming either operand.
    fn ref_mul(&self, other: &Self) -> Self;
    /// `self + other` without consuming either operand.
    fn ref_add(&self, other: &Self) -> Self;
}

impl<T> Scalar for T
where
    T: Clone + Ord + Signed,
    for<'a> &'a T: Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    fn ref_sub(&self, other: &Self) -> Self {
        self - other
    }

    fn ref_mul(&self, other: &Self) -> Self {
        self * other
    }

    fn ref_add(&self, other: &Self) -> Self {
        self + other
    }
}
