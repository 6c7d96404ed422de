//! Scalar abstraction for weight coordinates and matrix entries.
//!
//! The whole calculus is scalar-generic: weights and matrices are
//! parametrized over a [`Scalar`] implemented by exact rationals as well as
//! by `f32`/`f64`.  The concrete type aliases at the crate root fix
//! [`crate::Rational`] — the library itself only ever computes exactly, the
//! float instances exist for callers that want approximate mirrors of the
//! same formulas.

use num_rational::Ratio;
use num_traits::{Num, Signed};
use std::fmt::{Debug, Display};

/// Coefficient type for weights and dense matrices.
pub trait Scalar: Clone + PartialEq + PartialOrd + Debug + Display + Num + Signed {
    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Whether the value is an integer.
    fn is_integer(&self) -> bool;
}

impl Scalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_integer(&self) -> bool {
        self.fract() == 0.0
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }

    fn is_integer(&self) -> bool {
        self.fract() == 0.0
    }
}

/// Scalars with exact field arithmetic, suitable for deciding ranks and
/// kernels.  Floats are deliberately excluded: exactness must be decided,
/// not approximated.
pub trait FieldScalar: Scalar {}

impl FieldScalar for Ratio<i64> {}
