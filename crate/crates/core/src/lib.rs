//! Exact-arithmetic verification engine for second-Betti-number bounds of
//! compact hyperkähler manifolds with vanishing odd Betti numbers.
//!
//! Everything runs over arbitrary-precision rationals: polynomial identities
//! are decided by canonical-form equality, integer bounds by exact sign
//! evaluation up to a certified root bound, and real roots by Sturm-sequence
//! bisection. No verdict anywhere depends on floating point.
//!
//! The crate is organised as
//!
//! - [`algebra`] — generic dense polynomials, root isolation, integer helpers
//! - [`repdim`] — dimension polynomials of the relevant so(b₂+2)-modules and
//!   the dimension-8 Hodge-diamond contribution tables
//! - [`salamon`] — the Salamon relation, residuals, and the bound polynomial
//! - [`engine`] — bound extraction and the printed-identity claim registry
//! - [`feasibility`] — exhaustive generator-multiplicity search in dimension 8
//!
//! The polynomial core is generic over its coefficient scalar (anything
//! satisfying [`algebra::Coeff`]); the aliases below fix the exact types the
//! rest of the crate computes with.

pub mod algebra;
pub mod engine;
pub mod feasibility;
pub mod repdim;
pub mod salamon;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational; always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial with [`Rat`] coefficients.
pub type QPoly = algebra::Polynomial<Rat>;

/// Dense univariate polynomial with [`Int`] coefficients.
pub type ZPoly = algebra::Polynomial<Int>;

pub use algebra::{AlgebraError, Polynomial, RootWindow};
pub use engine::{BoundResult, ClaimReport, ClaimStatus};
pub use salamon::{BettiSequence, Convention};
