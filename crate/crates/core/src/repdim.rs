//! Dimension polynomials of the so(b₂+2)-modules generated by primitive
//! cohomology classes, and the two dimension-8 Hodge-diamond contribution
//! tables, transcribed entry by entry.
//!
//! The table variable is `h`; every published cross-check (the degree-8 row
//! sum of the first table against its stated b₂-form) forces `h = b₂ - 2`,
//! and that identification lives in one place, [`h_substitute`].

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, product_linear, Polynomial};
use crate::{Int, QPoly, Rat};

/// Errors from dimension formulas and table lookups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepDimError {
    /// Binomial coefficients need `k >= 0`.
    NegativeK,
    /// Hodge positions run over `0..=8` in the dimension-8 diamond.
    IndexOutOfRange,
    /// Only the L3 and L2 modules have printed diamond tables.
    NoDiamondTable,
    /// Per-degree contributions exist for even degrees of the dimension-8
    /// diamond only.
    UnsupportedDegree,
    /// `betti_formula_n4` covers b₄, b₆, b₈, i.e. `k` in `{2, 3, 4}`.
    BadDegree,
    /// Generator multiplicities are counts and cannot be negative.
    NegativeCount,
}

impl fmt::Display for RepDimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepDimError::NegativeK => write!(f, "binomial requires k >= 0"),
            RepDimError::IndexOutOfRange => write!(f, "Hodge position outside 0..=8"),
            RepDimError::NoDiamondTable => write!(f, "no diamond table for this module"),
            RepDimError::UnsupportedDegree => write!(f, "no contribution at this degree"),
            RepDimError::BadDegree => write!(f, "Betti formula defined for k in {{2, 3, 4}}"),
            RepDimError::NegativeCount => write!(f, "generator multiplicities must be >= 0"),
        }
    }
}

impl std::error::Error for RepDimError {}

/// The irreducible so(b₂+2)-module generated by one primitive class, labelled
/// by its exterior-power isomorphism type. Multiplicities are conventionally
/// written c, d, e, f in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    /// Λ³ℂ^(b₂+2), generated in H^{3,1}; multiplicity symbol `c`.
    L3,
    /// Λ²ℂ^(b₂+2), generated in H^{2,2}; multiplicity symbol `d`.
    L2,
    /// Λ¹ℂ^(b₂+2) (the vector representation), generated in H^{3,3};
    /// multiplicity symbol `e`.
    L1,
    /// The trivial module, generated in H^{4,4}; multiplicity symbol `f`.
    L0,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 4] = [ModuleKind::L3, ModuleKind::L2, ModuleKind::L1, ModuleKind::L0];

    pub fn exterior_power(self) -> u32 {
        match self {
            ModuleKind::L3 => 3,
            ModuleKind::L2 => 2,
            ModuleKind::L1 => 1,
            ModuleKind::L0 => 0,
        }
    }

    pub fn multiplicity_symbol(self) -> char {
        match self {
            ModuleKind::L3 => 'c',
            ModuleKind::L2 => 'd',
            ModuleKind::L1 => 'e',
            ModuleKind::L0 => 'f',
        }
    }

    /// dim Λᵏℂ^(b₂+2) as a polynomial in b₂.
    pub fn dim_poly(self) -> QPoly {
        ext_dim_poly(self.exterior_power())
    }
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `C(n, k)`, exact for every integer `n` (generalised falling-factorial
/// definition, so `C(n, k) = 0` for `0 <= n < k`).
pub fn binomial(n: &Int, k: &Int) -> Result<Int, RepDimError> {
    if k.is_negative() {
        return Err(RepDimError::NegativeK);
    }
    let mut acc = Int::one();
    let mut i = Int::one();
    while &i <= k {
        // product of i consecutive integers is divisible by i!, so the
        // running division is exact
        acc = acc * (n - k + &i) / &i;
        i += 1;
    }
    Ok(acc)
}

/// dim Symᵐ of a b₂-dimensional space, as a degree-`m` polynomial in b₂:
/// `C(b₂ + m - 1, m) = (1/m!) ∏_{i=0}^{m-1} (b₂ + i)`.
pub fn sym_dim_poly(m: u32) -> QPoly {
    let offsets: Vec<Rat> = (0..m).map(|i| rat(i64::from(i))).collect();
    product_linear(&offsets).scale(&Rat::new(Int::one(), factorial(m)))
}

/// dim Λᵏℂ^(b₂+2) as a degree-`k` polynomial in b₂: `C(b₂ + 2, k)`.
pub fn ext_dim_poly(k: u32) -> QPoly {
    let offsets: Vec<Rat> = (0..k).map(|i| rat(2 - i64::from(i))).collect();
    product_linear(&offsets).scale(&Rat::new(Int::one(), factorial(k)))
}

/// Rewrites a polynomial in the table variable `h` as a polynomial in b₂ via
/// the substitution `h = b₂ - 2`.
pub fn h_substitute(p: &QPoly) -> QPoly {
    let shift = Polynomial::new(vec![rat(-2), Rat::one()]);
    p.compose(&shift)
}

/// One printed diamond: entries indexed by Hodge position `(p, q)`,
/// `0 <= p, q <= 8`, each a polynomial in `h`.
pub struct DiamondTable {
    kind: ModuleKind,
    entries: Vec<QPoly>, // row-major 9 x 9
}

impl DiamondTable {
    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn entry(&self, p: usize, q: usize) -> Result<&QPoly, RepDimError> {
        if p > 8 || q > 8 {
            return Err(RepDimError::IndexOutOfRange);
        }
        Ok(&self.entries[p * 9 + q])
    }

    /// Sum of all 81 entries, as a polynomial in `h`.
    pub fn total(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for e in &self.entries {
            acc = &acc + e;
        }
        acc
    }

    /// Sum of the entries with `p + q = degree`, as a polynomial in `h`.
    pub fn row_total(&self, degree: usize) -> QPoly {
        let mut acc = QPoly::zero();
        for p in 0..=8usize {
            if degree >= p && degree - p <= 8 {
                acc = &acc + &self.entries[p * 9 + degree - p];
            }
        }
        acc
    }
}

fn build_table(kind: ModuleKind, nonzero: &[(usize, usize, QPoly)]) -> DiamondTable {
    let mut entries = vec![QPoly::zero(); 81];
    for (p, q, poly) in nonzero {
        entries[p * 9 + q] = poly.clone();
    }
    DiamondTable { kind, entries }
}

fn hpoly(cs: &[i64], den: i64) -> QPoly {
    Polynomial::new(cs.iter().map(|&c| Rat::new(Int::from(c), Int::from(den))).collect())
}

fn l3_table() -> DiamondTable {
    let one = QPoly::one();
    let h = Polynomial::new(vec![rat(0), rat(1)]);
    let q2 = hpoly(&[4, -1, 1], 2); // (h^2 - h + 4)/2
    let center = hpoly(&[-60, -10, -3, 1], 6); // (h^3 - 3h^2 - 10h - 60)/6
    build_table(
        ModuleKind::L3,
        &[
            (1, 3, one.clone()),
            (2, 2, h.clone()),
            (3, 1, one.clone()),
            (1, 5, one.clone()),
            (2, 4, h.clone()),
            (3, 3, q2.clone()),
            (4, 2, h.clone()),
            (5, 1, one.clone()),
            (2, 6, h.clone()),
            (3, 5, q2.clone()),
            (4, 4, center),
            (5, 3, q2.clone()),
            (6, 2, h.clone()),
            (3, 7, one.clone()),
            (4, 6, h.clone()),
            (5, 5, q2),
            (6, 4, h.clone()),
            (7, 3, one.clone()),
            (5, 7, one.clone()),
            (6, 6, h),
            (7, 5, one),
        ],
    )
}

fn l2_table() -> DiamondTable {
    let one = QPoly::one();
    let h = Polynomial::new(vec![rat(0), rat(1)]);
    let center = hpoly(&[-4, -1, 1], 2); // (h^2 - h - 4)/2
    build_table(
        ModuleKind::L2,
        &[
            (2, 2, one.clone()),
            (2, 4, one.clone()),
            (3, 3, h.clone()),
            (4, 2, one.clone()),
            (2, 6, one.clone()),
            (3, 5, h.clone()),
            (4, 4, center),
            (5, 3, h.clone()),
            (6, 2, one.clone()),
            (4, 6, one.clone()),
            (5, 5, h.clone()),
            (6, 4, one.clone()),
            (6, 6, one),
        ],
    )
}

/// The printed diamond for L3 or L2; other kinds have no table.
pub fn diamond_table(kind: ModuleKind) -> Result<&'static DiamondTable, RepDimError> {
    static L3: OnceLock<DiamondTable> = OnceLock::new();
    static L2: OnceLock<DiamondTable> = OnceLock::new();
    match kind {
        ModuleKind::L3 => Ok(L3.get_or_init(l3_table)),
        ModuleKind::L2 => Ok(L2.get_or_init(l2_table)),
        _ => Err(RepDimError::NoDiamondTable),
    }
}

/// Printed table entry at Hodge position `(p, q)`, as a polynomial in `h`.
pub fn table_entry(kind: ModuleKind, p: usize, q: usize) -> Result<QPoly, RepDimError> {
    Ok(diamond_table(kind)?.entry(p, q)?.clone())
}

/// Sum of all 81 printed entries of one diamond, as a polynomial in `h`.
pub fn table_total(kind: ModuleKind) -> Result<QPoly, RepDimError> {
    Ok(diamond_table(kind)?.total())
}

/// Per-degree contribution of one copy of the module to `b_degree` in the
/// dimension-8 splitting, as printed in the b₄/b₆/b₈ formulas, in b₂.
///
/// Degrees 4, 6, 8 carry the printed entries; the remaining even degrees of
/// the diamond contribute zero here (degrees 10..16 mirror 6..0 in the table
/// and are never consumed by the Salamon rearrangement).
pub fn contribution_poly(kind: ModuleKind, degree: u32) -> Result<QPoly, RepDimError> {
    let b2 = Polynomial::new(vec![rat(0), rat(1)]);
    let poly = match (kind, degree) {
        (ModuleKind::L3, 4) => b2,
        (ModuleKind::L3, 6) => hpoly(&[2, -1, 1], 2), // (b2^2 - b2 + 2)/2
        (ModuleKind::L3, 8) => hpoly(&[-24, -4, -3, 1], 6), // (b2^3 - 3b2^2 - 4b2 - 24)/6
        (ModuleKind::L2, 4) => QPoly::one(),
        (ModuleKind::L2, 6) => b2,
        (ModuleKind::L2, 8) => hpoly(&[-2, -1, 1], 2), // (b2^2 - b2 - 2)/2
        (ModuleKind::L1, 6) => QPoly::one(),
        (ModuleKind::L1, 8) => b2,
        (ModuleKind::L0, 8) => QPoly::one(),
        (_, 4 | 6) => QPoly::zero(),
        (_, d) if d <= 16 && d % 2 == 0 => QPoly::zero(),
        _ => return Err(RepDimError::UnsupportedDegree),
    };
    Ok(poly)
}

/// `b_{2k}` in the dimension-8 splitting: the Symᵏ dimension plus the four
/// per-module contributions at degree `2k`, all evaluated exactly.
pub fn betti_formula_n4(
    k: u32,
    c: &Int,
    d: &Int,
    e: &Int,
    f: &Int,
    b2: &Int,
) -> Result<Int, RepDimError> {
    if !(2..=4).contains(&k) {
        return Err(RepDimError::BadDegree);
    }
    for count in [c, d, e, f] {
        if count.is_negative() {
            return Err(RepDimError::NegativeCount);
        }
    }
    let mut total = binomial(&(b2 + Int::from(k) - 1), &Int::from(k))?;
    let b2r = Rat::from_integer(b2.clone());
    for (kind, count) in ModuleKind::ALL.into_iter().zip([c, d, e, f]) {
        let v = contribution_poly(kind, 2 * k)?.eval(&b2r);
        debug_assert!(v.is_integer());
        total += v.to_integer() * count;
    }
    Ok(total)
}
