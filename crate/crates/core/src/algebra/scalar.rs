//! Scalar bounds for the generic polynomial core.

use std::ops::Neg;

use num_traits::{Num, Signed};

/// Coefficient ring for dense univariate polynomials.
///
/// Blanket-implemented for every `num_traits::Num` type that is cloneable and
/// negatable, in particular [`crate::Rat`] and [`crate::Int`]. `f32`/`f64`
/// satisfy the bounds too, but every verdict in this crate is computed with
/// the exact rational instantiation.
pub trait Coeff: Num + Clone + Neg<Output = Self> {}

impl<T> Coeff for T where T: Num + Clone + Neg<Output = Self> {}

/// Ordered field scalar: what sign counting and bisection need.
///
/// Division must be exact field division and the order total on the values
/// in play; [`crate::Rat`] is the intended instantiation.
pub trait OrderedField: Coeff + Signed + PartialOrd {}

impl<T> OrderedField for T where T: Coeff + Signed + PartialOrd {}
