//! Exact univariate polynomial algebra.
//!
//! Dense polynomials over a generic scalar, Sturm-sequence real-root
//! isolation with exact bisection, and integer threshold extraction.

mod int;
mod poly;
mod roots;
mod scalar;

pub use int::{factorial, integer_sqrt};
pub use poly::{product_linear, Polynomial};
pub use roots::{
    cauchy_root_bound, count_real_roots_in, default_window_width, integer_root_bound,
    last_nonnegative, max_real_root, max_real_root_default, sturm_chain, RootWindow,
};
pub use scalar::{Coeff, OrderedField};

use std::fmt;

/// Errors from the exact-algebra layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraError {
    /// The polynomial has no real root.
    NoRealRoot,
    /// Root isolation needs a nonzero, nonconstant polynomial.
    ZeroOrConstant,
    /// `last_nonnegative` needs a negative leading coefficient.
    UnboundedAbove,
    /// `integer_sqrt` is only defined for nonnegative input.
    NegativeInput,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NoRealRoot => write!(f, "polynomial has no real root"),
            AlgebraError::ZeroOrConstant => {
                write!(f, "operation requires a nonzero, nonconstant polynomial")
            }
            AlgebraError::UnboundedAbove => {
                write!(f, "polynomial is nonnegative for arbitrarily large arguments")
            }
            AlgebraError::NegativeInput => write!(f, "integer square root of a negative number"),
        }
    }
}

impl std::error::Error for AlgebraError {}
