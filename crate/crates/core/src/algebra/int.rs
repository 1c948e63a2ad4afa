//! Arbitrary-precision integer helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::AlgebraError;

/// `floor(sqrt(n))` for nonnegative `n`, exact.
pub fn integer_sqrt(n: &BigInt) -> Result<BigInt, AlgebraError> {
    if n.is_negative() {
        return Err(AlgebraError::NegativeInput);
    }
    Ok(n.sqrt())
}

/// `floor(n^(1/k))` for nonnegative `n` and `k >= 1`.
pub(crate) fn floor_nth_root(n: &BigInt, k: u32) -> BigInt {
    debug_assert!(!n.is_negative() && k >= 1);
    n.nth_root(k)
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}
