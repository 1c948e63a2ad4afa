//! The Salamon relation for 2n-dimensional hyperkähler manifolds,
//! `n·b_{2n} = 2 Σ_{i=1}^{2n} (-1)^i (3i² - n) b_{2n-i}`,
//! its residual on candidate Betti sequences, and the bound polynomial
//! P(b₂, n) obtained by specialising it to the symmetric-power model.
//!
//! Two transcriptions of P are kept side by side (see [`Convention`]); every
//! claim check downstream reports against both.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, product_linear};
use crate::repdim::{binomial, sym_dim_poly};
use crate::{Int, QPoly, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SalamonError {
    /// The Salamon coefficient index runs over `1..=2n`.
    IndexOutOfRange,
    /// A Betti sequence for dimension 2n has exactly `2n + 1` entries.
    LengthMismatch,
    /// Betti numbers are dimensions and cannot be negative.
    NegativeEntry,
    /// The relation needs `n >= 1`.
    ZeroDimension,
}

impl fmt::Display for SalamonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SalamonError::IndexOutOfRange => write!(f, "coefficient index outside 1..=2n"),
            SalamonError::LengthMismatch => write!(f, "Betti sequence must have 2n + 1 entries"),
            SalamonError::NegativeEntry => write!(f, "Betti numbers must be >= 0"),
            SalamonError::ZeroDimension => write!(f, "complex dimension 2n requires n >= 1"),
        }
    }
}

impl std::error::Error for SalamonError {}

/// A candidate Betti sequence `b_0 .. b_{2n}` for complex dimension `2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiSequence {
    n: u32,
    values: Vec<Int>,
}

impl BettiSequence {
    pub fn new(n: u32, values: Vec<Int>) -> Result<Self, SalamonError> {
        if n == 0 {
            return Err(SalamonError::ZeroDimension);
        }
        if values.len() != 2 * n as usize + 1 {
            return Err(SalamonError::LengthMismatch);
        }
        if values.iter().any(|v| v.is_negative()) {
            return Err(SalamonError::NegativeEntry);
        }
        Ok(BettiSequence { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    /// `b_k`
    pub fn betti(&self, k: usize) -> &Int {
        &self.values[k]
    }
}

/// Which transcription of the bound polynomial P(b₂, n) to use.
///
/// `Canonical` is the unique reading under which the rearranged relation,
/// applied to the symmetric-power model, reproduces the Salamon relation
/// exactly: `P = -n·S_n + 2 Σ_{j even} (3j² - n) S_{n-j/2}` with
/// `S_m = C(b₂ + m - 1, m)`. `PaperLiteral` transcribes the printed display,
/// whose sum carries no factor 2:
/// `P = -(1/(n-1)!) ∏_{i=0}^{n-1}(b₂+i) + Σ_{j even} (3j² - n) (1/(n-j/2)!) ∏_{i=0}^{n-j/2-1}(b₂+i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Canonical,
    PaperLiteral,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Canonical, Convention::PaperLiteral];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Canonical => "canonical",
            Convention::PaperLiteral => "paper-literal",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The coefficient `2·(-1)^i·(3i² - n)` multiplying `b_{2n-i}`.
pub fn salamon_coefficient(n: u32, i: u32) -> Result<Int, SalamonError> {
    if n == 0 {
        return Err(SalamonError::ZeroDimension);
    }
    if i < 1 || i > 2 * n {
        return Err(SalamonError::IndexOutOfRange);
    }
    let core = 3 * i64::from(i) * i64::from(i) - i64::from(n);
    let signed = if i.is_multiple_of(2) { core } else { -core };
    Ok(Int::from(2 * signed))
}

/// `n·b_{2n} - 2 Σ_{i=1}^{2n} (-1)^i (3i² - n) b_{2n-i}`; zero exactly when
/// the Salamon relation holds.
pub fn salamon_residual(b: &BettiSequence) -> Int {
    let n = b.n();
    let mut acc = Int::from(n) * b.betti(2 * n as usize);
    for i in 1..=2 * n {
        let c = salamon_coefficient(n, i).expect("index in range");
        acc -= c * b.betti((2 * n - i) as usize);
    }
    acc
}

/// The zero-generator model: `b_{2k} = dim Symᵏ H² = C(b₂ + k - 1, k)`,
/// all odd entries explicitly zero.
pub fn sym_model(n: u32, b2: &Int) -> BettiSequence {
    assert!(n >= 1, "sym_model needs n >= 1");
    assert!(!b2.is_negative(), "sym_model needs b2 >= 0");
    let mut values = Vec::with_capacity(2 * n as usize + 1);
    for k in 0..=2 * n as usize {
        if k % 2 == 0 {
            let kk = Int::from(k as u64 / 2);
            values.push(binomial(&(b2 + &kk - 1), &kk).expect("k >= 0"));
        } else {
            values.push(Int::zero());
        }
    }
    BettiSequence::new(n, values).expect("constructed well-formed")
}

/// The degree-n bound polynomial P(b₂, n) under the given convention.
pub fn bound_polynomial(n: u32, convention: Convention) -> QPoly {
    assert!(n >= 1, "bound polynomial needs n >= 1");
    match convention {
        Convention::Canonical => {
            let mut p = sym_dim_poly(n).scale(&Rat::from_integer(-Int::from(n)));
            for j in (2..=2 * n).step_by(2) {
                let w = 2 * (3 * i64::from(j) * i64::from(j) - i64::from(n));
                let term = sym_dim_poly(n - j / 2).scale(&Rat::from_integer(Int::from(w)));
                p = &p + &term;
            }
            p
        }
        Convention::PaperLiteral => {
            // transcribed term by term: -(1/(n-1)!) ∏_{i=0}^{n-1}(b2+i)
            // plus Σ (3j²-n)·(1/(n-j/2)!) ∏_{i=0}^{n-j/2-1}(b2+i)
            let offsets: Vec<Rat> = (0..n).map(|i| Rat::from_integer(Int::from(i))).collect();
            let lead = product_linear(&offsets)
                .scale(&Rat::new(-Int::one(), factorial(n - 1)));
            let mut p = lead;
            for j in (2..=2 * n).step_by(2) {
                let m = n - j / 2;
                let w = 3 * i64::from(j) * i64::from(j) - i64::from(n);
                let offs: Vec<Rat> = (0..m).map(|i| Rat::from_integer(Int::from(i))).collect();
                let term = product_linear(&offs)
                    .scale(&Rat::new(Int::from(w), factorial(m)));
                p = &p + &term;
            }
            p
        }
    }
}
