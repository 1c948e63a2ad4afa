//! Randomised and exhaustive property checks for the exact-algebra layer and
//! the dimension formulas. All randomness is a fixed-seed xorshift, so the
//! suite is deterministic.

use betti_gate::algebra::{
    cauchy_root_bound, count_real_roots_in, integer_sqrt, last_nonnegative, max_real_root_default,
    product_linear, Polynomial,
};
use betti_gate::repdim::{
    binomial, contribution_poly, diamond_table, ext_dim_poly, h_substitute, sym_dim_poly,
    ModuleKind,
};
use betti_gate::salamon::{salamon_residual, BettiSequence};
use betti_gate::{Int, QPoly, Rat};
use num_traits::{Euclid, One, Signed, ToPrimitive, Zero};

struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

fn q(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn random_rat(rng: &mut Rng) -> Rat {
    Rat::new(Int::from(rng.range(-20, 20)), Int::from(rng.range(1, 5)))
}

fn random_poly(rng: &mut Rng, max_deg: usize) -> QPoly {
    let deg = rng.range(0, max_deg as i64) as usize;
    Polynomial::new((0..=deg).map(|_| random_rat(rng)).collect())
}

#[test]
fn ring_axioms_hold_on_random_polynomials() {
    let mut rng = Rng::new(0x5eed);
    for _ in 0..100 {
        let a = random_poly(&mut rng, 8);
        let b = random_poly(&mut rng, 8);
        let c = random_poly(&mut rng, 8);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}

#[test]
fn product_linear_matches_scalar_product() {
    let mut rng = Rng::new(0xfeed);
    for _ in 0..30 {
        let len = rng.range(0, 6) as usize;
        let offsets: Vec<Rat> = (0..len).map(|_| q(rng.range(-10, 10))).collect();
        let p = product_linear(&offsets);
        for _ in 0..20 {
            let x = random_rat(&mut rng);
            let mut want = Rat::from_integer(Int::from(1));
            for off in &offsets {
                want *= &x + off;
            }
            assert_eq!(p.eval(&x), want);
        }
    }
}

#[test]
fn max_root_windows_isolate_the_rightmost_root() {
    let mut rng = Rng::new(0xab5e);
    for _ in 0..40 {
        // distinct rational roots, optionally one irrational quadratic pair
        let mut p = QPoly::one() * Polynomial::constant(random_rat(&mut rng));
        if p.is_zero() {
            continue;
        }
        let mut roots: Vec<Rat> = Vec::new();
        for _ in 0..rng.range(1, 3) {
            let r = q(rng.range(-15, 15));
            if roots.contains(&r) {
                continue;
            }
            roots.push(r.clone());
            p = &p * &Polynomial::new(vec![-r, Rat::from_integer(Int::from(1))]);
        }
        let irrational = rng.range(0, 1) == 1;
        let d = [2i64, 3, 5, 7][rng.range(0, 3) as usize];
        if irrational {
            p = &p * &Polynomial::new(vec![q(-d), q(0), q(1)]);
        }
        let w = max_real_root_default(&p).expect("roots exist by construction");
        // exactly one distinct root inside the window, none above it
        let below = &w.lo - &q(1) / q(1024);
        assert_eq!(count_real_roots_in(&p, &below, &w.hi), 1);
        let far = cauchy_root_bound(&p) + q(1);
        assert_eq!(count_real_roots_in(&p, &w.hi, &far), 0);
        if w.exact {
            assert!(p.eval(&w.lo).is_zero());
        } else {
            // simple roots by construction: strict sign change across the window
            assert!((p.eval(&w.lo) * p.eval(&w.hi)).is_negative());
        }
    }
}

#[test]
fn last_nonnegative_is_the_true_threshold() {
    let mut rng = Rng::new(0xd00d);
    for _ in 0..60 {
        let deg = rng.range(1, 5) as usize;
        let mut coeffs: Vec<Rat> = (0..deg).map(|_| q(rng.range(-50, 50))).collect();
        coeffs.push(q(-rng.range(1, 9))); // negative leading coefficient
        let p = Polynomial::new(coeffs);
        let b = last_nonnegative(&p).unwrap();
        if b >= Int::zero() {
            assert!(!p.eval(&Rat::from_integer(b.clone())).is_negative());
        }
        let next = Rat::from_integer(&b + Int::from(1));
        if &b + Int::from(1) >= Int::zero() {
            assert!(p.eval(&next).is_negative());
        }
        // sampled points between the threshold and the Cauchy bound are negative
        let cauchy = cauchy_root_bound(&p);
        let top = cauchy.numer().div_euclid(cauchy.denom()) + Int::from(2);
        let lo = b.to_i64().unwrap();
        let hi = top.to_i64().unwrap();
        for _ in 0..50 {
            if hi > lo + 1 {
                let s = rng.range(lo + 1, hi);
                assert!(
                    p.eval(&q(s)).is_negative(),
                    "p must be negative at {s} past the threshold {lo}"
                );
            }
        }
    }
}

#[test]
fn integer_sqrt_bracketing() {
    let mut rng = Rng::new(0xcafe);
    for _ in 0..1000 {
        let n = Int::from((rng.next() % 1_000_000_000_000_000_000) as i64);
        let s = integer_sqrt(&n).unwrap();
        assert!(&s * &s <= n);
        assert!((&s + 1) * (&s + 1) > n);
    }
}

#[test]
fn binomial_matches_subset_enumeration() {
    // every k-subset of an n-set, counted explicitly by bitmask
    for n in 0..=12u32 {
        for k in 0..=n {
            let mut count = 0u64;
            for mask in 0u32..(1 << n) {
                if mask.count_ones() == k {
                    count += 1;
                }
            }
            assert_eq!(
                binomial(&Int::from(n), &Int::from(k)).unwrap(),
                Int::from(count)
            );
        }
    }
}

#[test]
fn ext_duality_pointwise() {
    // C(b2+2, k) = C(b2+2, b2+2-k) at every integer point
    for k in 0..=6u32 {
        let pk = ext_dim_poly(k);
        for b2 in (k as i64 - 2).max(0)..=30 {
            let dual = ext_dim_poly((b2 + 2 - k as i64) as u32);
            assert_eq!(pk.eval(&q(b2)), dual.eval(&q(b2)), "k = {k}, b2 = {b2}");
        }
    }
}

#[test]
fn diamond_tables_are_symmetric_and_integral() {
    for kind in [ModuleKind::L3, ModuleKind::L2] {
        let table = diamond_table(kind).unwrap();
        for p in 0..=8usize {
            for q_idx in 0..=8usize {
                let e = table.entry(p, q_idx).unwrap();
                assert_eq!(e, table.entry(q_idx, p).unwrap());
                assert_eq!(e, table.entry(8 - p, 8 - q_idx).unwrap());
                for h in 1..=40i64 {
                    assert!(e.eval(&q(h)).is_integer(), "{kind:?} ({p},{q_idx}) at h={h}");
                }
            }
        }
    }
}

#[test]
fn diamond_entry_nonnegativity_thresholds() {
    // entrywise nonnegativity sets in: L2 from h = 3 (b2 = 5), L3 from
    // h = 7 (b2 = 9); below that the printed centre terms are negative
    let first_nonneg = |kind: ModuleKind| -> i64 {
        let table = diamond_table(kind).unwrap();
        'h: for h in 1..=50i64 {
            for p in 0..=8usize {
                for q_idx in 0..=8usize {
                    if table.entry(p, q_idx).unwrap().eval(&q(h)).is_negative() {
                        continue 'h;
                    }
                }
            }
            return h;
        }
        unreachable!("entries grow without bound")
    };
    assert_eq!(first_nonneg(ModuleKind::L2), 3);
    assert_eq!(first_nonneg(ModuleKind::L3), 7);
}

#[test]
fn l2_row_sums_match_contributions() {
    let table = diamond_table(ModuleKind::L2).unwrap();
    for degree in [4usize, 6, 8] {
        assert_eq!(
            h_substitute(&table.row_total(degree)),
            contribution_poly(ModuleKind::L2, degree as u32).unwrap()
        );
    }
}

#[test]
fn sym_dim_matches_multiset_enumeration_small() {
    // degree-m monomials in v variables, enumerated as nondecreasing index
    // strings
    fn count_multisets(vars: u64, m: u64) -> u64 {
        fn rec(vars: u64, m: u64, min: u64) -> u64 {
            if m == 0 {
                return 1;
            }
            (min..vars).map(|i| rec(vars, m - 1, i)).sum()
        }
        rec(vars, m, 0)
    }
    for b2 in 1..=6i64 {
        for m in 0..=5u32 {
            assert_eq!(
                sym_dim_poly(m).eval(&q(b2)),
                q(count_multisets(b2 as u64, u64::from(m)) as i64)
            );
        }
    }
}

#[test]
fn salamon_residual_is_linear() {
    let mut rng = Rng::new(0xbead);
    for _ in 0..40 {
        let n = rng.range(1, 4) as u32;
        let len = 2 * n as usize + 1;
        let u: Vec<Int> = (0..len).map(|_| Int::from(rng.range(0, 40))).collect();
        let v: Vec<Int> = (0..len).map(|_| Int::from(rng.range(0, 40))).collect();
        let a = Int::from(rng.range(0, 5));
        let b = Int::from(rng.range(0, 5));
        let combined: Vec<Int> = u
            .iter()
            .zip(&v)
            .map(|(x, y)| &a * x + &b * y)
            .collect();
        let ru = salamon_residual(&BettiSequence::new(n, u).unwrap());
        let rv = salamon_residual(&BettiSequence::new(n, v).unwrap());
        let rc = salamon_residual(&BettiSequence::new(n, combined).unwrap());
        assert_eq!(rc, &a * &ru + &b * &rv);
    }
}
