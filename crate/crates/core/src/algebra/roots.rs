//! Real-root isolation over exact rationals.
//!
//! Roots are never approximated numerically: Sturm sequences count them,
//! bisection with rational midpoints narrows isolating windows, and rational
//! roots are recognised exactly by a bounded rational-root test. Integer
//! thresholds come from direct exact sign evaluation up to a certified root
//! bound, never from rounding a root.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::int::floor_nth_root;
use super::poly::Polynomial;
use super::scalar::OrderedField;
use super::AlgebraError;
use crate::{Int, QPoly, Rat};

/// An isolating window for a single real root.
///
/// `[lo, hi]` contains exactly one real root of the polynomial it was
/// produced for; `exact` means `lo == hi` and that value is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootWindow {
    pub lo: Rat,
    pub hi: Rat,
    pub exact: bool,
}

impl RootWindow {
    fn exact_at(r: Rat) -> Self {
        RootWindow { lo: r.clone(), hi: r, exact: true }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Default window width `2^-32`: narrow enough to separate any two distinct
/// roots of the polynomials this crate constructs.
pub fn default_window_width() -> Rat {
    Rat::new(Int::one(), Int::from(1u64 << 32))
}

fn normalize_scale<T: OrderedField>(p: Polynomial<T>) -> Polynomial<T> {
    // dividing by |leading| keeps every sign and tames coefficient growth
    match p.leading() {
        Some(l) if !l.is_zero() => {
            let inv = T::one() / l.abs();
            p.scale(&inv)
        }
        _ => p,
    }
}

pub(crate) fn poly_gcd<T: OrderedField>(a: &Polynomial<T>, b: &Polynomial<T>) -> Polynomial<T> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = normalize_scale(r);
    }
    normalize_scale(a)
}

/// The square-free part `p / gcd(p, p')`: same root set, all roots simple.
pub(crate) fn square_free<T: OrderedField>(p: &Polynomial<T>) -> Polynomial<T> {
    let g = poly_gcd(p, &p.derivative());
    match g.degree() {
        Some(d) if d >= 1 => {
            let (q, r) = p.divrem(&g);
            debug_assert!(r.is_zero());
            q
        }
        _ => p.clone(),
    }
}

/// Canonical Sturm sequence of `p` (negated remainders, sign-preserving
/// rescaling at each step).
pub fn sturm_chain<T: OrderedField>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(normalize_scale(p.clone()));
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(normalize_scale(d));
    loop {
        let k = chain.len();
        let (_, r) = chain[k - 2].divrem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(normalize_scale(-r));
    }
    chain
}

fn sign_variations_at<T: OrderedField>(chain: &[Polynomial<T>], x: &T) -> usize {
    let mut flips = 0;
    let mut prev = 0i8;
    for f in chain {
        let v = f.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if prev != 0 && s != prev {
                flips += 1;
            }
            prev = s;
        }
    }
    flips
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn count_real_roots_in<T: OrderedField>(p: &Polynomial<T>, a: &T, b: &T) -> usize {
    assert!(a <= b, "interval endpoints out of order");
    match p.degree() {
        None | Some(0) => 0,
        _ => {
            let chain = sturm_chain(&square_free(p));
            sign_variations_at(&chain, a).saturating_sub(sign_variations_at(&chain, b))
        }
    }
}

/// Cauchy bound: every real root of `p` has absolute value below
/// `1 + max_i |a_i| / |a_n|`.
pub fn cauchy_root_bound<T: OrderedField>(p: &Polynomial<T>) -> T {
    let n = p.degree().expect("root bound of the zero polynomial");
    let lead = p.leading().unwrap().abs();
    let mut m = T::zero();
    for c in &p.coeffs()[..n] {
        let r = c.abs() / lead.clone();
        if r > m {
            m = r;
        }
    }
    T::one() + m
}

fn ceil_div(a: &Int, b: &Int) -> Int {
    // a, b >= 0, b > 0
    (a + b - Int::one()).div_floor(b)
}

/// A certified integer upper bound for every real root of `p`: the smaller
/// of the Cauchy bound and the Fujiwara bound, both computed exactly on the
/// primitive integer form.
pub fn integer_root_bound(p: &QPoly) -> Int {
    let z = p.primitive_integer();
    let Some(n) = z.degree() else { return Int::zero() };
    if n == 0 {
        return Int::zero();
    }
    let lead = z.leading().unwrap().abs();
    // Cauchy: 1 + ceil(max |a_i| / |a_n|)
    let mut m = Int::zero();
    for c in &z.coeffs()[..n] {
        let r = ceil_div(&c.abs(), &lead);
        if r > m {
            m = r;
        }
    }
    let cauchy = Int::one() + m;
    // Fujiwara: 2 * max_k (|a_{n-k}| / (|a_n| * [k == n: 2]))^(1/k), rounded up
    let mut fuji = Int::zero();
    for k in 1..=n {
        let num = z.coeff(n - k).abs();
        let den = if k == n { &lead * 2 } else { lead.clone() };
        let root = floor_nth_root(&ceil_div(&num, &den), k as u32) + 1;
        if root > fuji {
            fuji = root;
        }
    }
    fuji *= 2;
    cauchy.min(fuji)
}

/// Divisors of `|n|` via trial division, or `None` when the factorisation
/// cannot be completed within budget.
fn divisors_capped(n: &Int) -> Option<Vec<Int>> {
    const TRIAL_LIMIT: u64 = 1_000_000;
    const MAX_DIVISORS: usize = 200_000;
    let mut rest = n.abs();
    if rest.is_zero() {
        return None;
    }
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let db = Int::from(d);
        if &db * &db > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &db).is_zero() {
            rest /= &db;
            e += 1;
        }
        if e > 0 {
            factors.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        // the cofactor is prime if no divisor up to min(TRIAL_LIMIT, sqrt) was found
        if rest <= Int::from(TRIAL_LIMIT).pow(2) {
            factors.push((rest, 1));
        } else {
            return None;
        }
    }
    let mut divs = vec![Int::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= &p;
                next.push(acc.clone());
            }
        }
        divs = next;
        if divs.len() > MAX_DIVISORS {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

/// All rational roots of `core` with recognisable denominators.
///
/// Complete whenever the leading coefficient of the primitive integer form
/// factors within budget (always true for the polynomials built in this
/// crate, whose primitive forms are monic up to sign). An unrecognised
/// rational root only downgrades `exact` detection; isolation windows stay
/// correct regardless.
fn rational_roots(core: &QPoly) -> Vec<Rat> {
    const SWEEP_BUDGET: u64 = 2_000_000;
    let z = core.primitive_integer();
    let Some(deg) = z.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let a0 = z.coeff(0).abs();
    debug_assert!(!a0.is_zero(), "zero roots must be stripped before the rational-root test");
    let lead = z.leading().unwrap().abs();
    let bound = integer_root_bound(core) + 1;
    let denominators = if lead.is_one() {
        vec![Int::one()]
    } else {
        divisors_capped(&lead).unwrap_or_else(|| vec![Int::one()])
    };
    let a0_divisors = divisors_capped(&a0);
    let mut found: Vec<Rat> = Vec::new();
    let try_candidate = |u: &Int, v: &Int, found: &mut Vec<Rat>| {
        if u.gcd(v).is_one() {
            for cand in [Rat::new(u.clone(), v.clone()), Rat::new(-u.clone(), v.clone())] {
                if core.eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    };
    for v in &denominators {
        let umax: Int = &bound * v;
        if let Some(cap) = umax.to_u64().filter(|&m| m <= SWEEP_BUDGET) {
            for u in 1..=cap {
                let ub = Int::from(u);
                if (&a0 % &ub).is_zero() {
                    try_candidate(&ub, v, &mut found);
                }
            }
        } else if let Some(divs) = &a0_divisors {
            for u in divs {
                if u <= &umax {
                    try_candidate(u, v, &mut found);
                }
            }
        }
    }
    found.sort();
    found.dedup();
    found
}

/// Isolating window for the largest real root of `p`, narrowed to at most
/// `width` by exact bisection; rational roots are reported exactly.
pub fn max_real_root(p: &QPoly, width: &Rat) -> Result<RootWindow, AlgebraError> {
    match p.degree() {
        None | Some(0) => return Err(AlgebraError::ZeroOrConstant),
        _ => {}
    }
    assert!(width.is_positive(), "window width must be positive");

    let sf = square_free(p);
    let mut core = sf;
    let mut rational: Vec<Rat> = Vec::new();
    if core.coeff(0).is_zero() {
        // square-free, so x divides exactly once
        core = Polynomial::new(core.coeffs()[1..].to_vec());
        rational.push(Rat::zero());
    }
    if core.degree() == Some(0) {
        // p was a scaled power of x
        return Ok(RootWindow::exact_at(Rat::zero()));
    }

    rational.extend(rational_roots(&core));
    let mut reduced = core;
    for r in &rational {
        if r.is_zero() {
            continue;
        }
        let factor = Polynomial::new(vec![-r.clone(), Rat::one()]);
        let (q, rem) = reduced.divrem(&factor);
        debug_assert!(rem.is_zero());
        reduced = q;
    }
    let best_rational = rational.iter().max().cloned();

    if reduced.degree().is_none_or(|d| d == 0) {
        return best_rational
            .map(RootWindow::exact_at)
            .ok_or(AlgebraError::NoRealRoot);
    }

    let chain = sturm_chain(&reduced);
    let bound = cauchy_root_bound(&reduced);
    let mut lo = -bound.clone();
    let mut hi = bound;
    let mut v_lo = sign_variations_at(&chain, &lo);
    let mut v_hi = sign_variations_at(&chain, &hi);
    if v_lo == v_hi {
        // no irrational roots left
        return best_rational
            .map(RootWindow::exact_at)
            .ok_or(AlgebraError::NoRealRoot);
    }

    let two = Rat::from_integer(Int::from(2));
    loop {
        let isolated = v_lo - v_hi == 1;
        let clean = rational.iter().all(|r| r < &lo || r > &hi) && !reduced.eval(&lo).is_zero();
        if isolated && clean && &(&hi - &lo) <= width {
            break;
        }
        let mid = (&lo + &hi) / &two;
        if reduced.eval(&mid).is_zero() {
            // a rational root the bounded test did not list; treat exactly
            let v_mid = sign_variations_at(&chain, &mid);
            if v_mid == v_hi {
                let r = match best_rational {
                    Some(b) if b > mid => b,
                    _ => mid,
                };
                return Ok(RootWindow::exact_at(r));
            }
            lo = mid;
            v_lo = sign_variations_at(&chain, &lo);
            continue;
        }
        let v_mid = sign_variations_at(&chain, &mid);
        if v_mid > v_hi {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
            v_hi = v_mid;
        }
    }

    match best_rational {
        Some(r) if r > hi => Ok(RootWindow::exact_at(r)),
        _ => Ok(RootWindow { lo, hi, exact: false }),
    }
}

/// [`max_real_root`] with the default `2^-32` window width.
pub fn max_real_root_default(p: &QPoly) -> Result<RootWindow, AlgebraError> {
    max_real_root(p, &default_window_width())
}

/// Largest integer `b >= 0` with `p(b) >= 0`, or `-1` when there is none.
///
/// Requires a negative leading coefficient so that `p` is eventually
/// negative; the scan evaluates `p` exactly at every integer up to a
/// certified root bound, so the answer carries no rounding assumptions.
pub fn last_nonnegative(p: &QPoly) -> Result<Int, AlgebraError> {
    let Some(_) = p.degree() else {
        return Err(AlgebraError::UnboundedAbove);
    };
    if !p.leading().unwrap().is_negative() {
        return Err(AlgebraError::UnboundedAbove);
    }
    let z = p.primitive_integer();
    let ub = integer_root_bound(p);
    let mut last = -Int::one();
    let mut b = Int::zero();
    while b <= ub {
        if !z.eval(&b).is_negative() {
            last = b.clone();
        }
        b += 1;
    }
    Ok(last)
}
