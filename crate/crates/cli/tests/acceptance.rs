//! Acceptance suite: one test per criterion, each ending with a pass line.
//!
//! Everything here is exact; no tolerance is ever relaxed. Criteria that
//! compare against independently derived values recompute those values with
//! their own oracle (binomial point evaluation, explicit enumeration, or a
//! brute-force box search) before asserting.

use std::process::Command;

use betti_gate::algebra::Polynomial;
use betti_gate::engine::{
    b2_bound, closed_form_bound, dim10_lhs, dim10_negativity_threshold, dim8_pipeline,
    printed_dim8_lhs, rederived_rhs, remark_b7, run_all_claims, ClaimStatus, Discrepancy,
};
use betti_gate::feasibility::{dim8_equation, find_witness, scan, Dim8Equation};
use betti_gate::repdim::{binomial, diamond_table, ext_dim_poly, h_substitute, sym_dim_poly, ModuleKind};
use betti_gate::salamon::{bound_polynomial, salamon_residual, sym_model, BettiSequence, Convention};
use betti_gate::{Int, QPoly, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

fn q(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn qpoly_over(cs: &[i64], den: i64) -> QPoly {
    Polynomial::new(cs.iter().map(|&c| Rat::new(Int::from(c), Int::from(den))).collect())
}

fn pass(criterion: u32, message: &str) {
    println!("[criterion {criterion:02}] PASS - {message}");
}

fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_betti-gate"))
        .args(args)
        .env_remove("BETTI_GATE_THREADS")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
        out.status.code().expect("no signal"),
    )
}

#[test]
fn criterion_01_canonical_bounds() {
    let want = [22i64, 23, 23, 24, 25, 26];
    for (n, w) in (1u32..=6).zip(want) {
        let got = b2_bound(n, Convention::Canonical).unwrap().integer_bound;
        assert_eq!(got, Int::from(w), "canonical bound at n = {n}");
    }
    pass(1, "canonical integer bounds for n = 1..6 are 22, 23, 23, 24, 25, 26");
}

#[test]
fn criterion_02_closed_form_agreement() {
    let want = [22i64, 23, 23, 24, 25, 26];
    for (n, w) in (1u32..=6).zip(want) {
        assert_eq!(closed_form_bound(n), Int::from(w), "closed form at n = {n}");
        assert_eq!(
            closed_form_bound(n),
            b2_bound(n, Convention::Canonical).unwrap().integer_bound
        );
    }
    pass(2, "floor((21 + sqrt(433 + 96n))/2) matches the canonical bounds for n = 1..6");
}

#[test]
fn criterion_03_salamon_residuals() {
    let zero_cases: [(u32, &[i64]); 3] = [(1, &[1, 0, 22]), (1, &[1, 4, 6]), (2, &[1, 0, 23, 0, 276])];
    for (n, vals) in zero_cases {
        let seq = BettiSequence::new(n, vals.iter().map(|&v| Int::from(v)).collect()).unwrap();
        assert!(salamon_residual(&seq).is_zero(), "{vals:?}");
    }
    let off = BettiSequence::new(1, vec![Int::from(1), Int::from(0), Int::from(23)]).unwrap();
    assert_eq!(salamon_residual(&off), Int::from(1));
    pass(3, "reference sequences have residual 0; (1,0,23) has residual exactly 1");
}

#[test]
fn criterion_04_cross_module_identity() {
    let mut checks = 0;
    for n in 1..=6u32 {
        let p = bound_polynomial(n, Convention::Canonical);
        for b2 in 3..=30i64 {
            let residual = salamon_residual(&sym_model(n, &Int::from(b2)));
            assert_eq!(
                Rat::from_integer(residual),
                -p.eval(&q(b2)),
                "n = {n}, b2 = {b2}"
            );
            checks += 1;
        }
    }
    assert_eq!(checks, 168);
    pass(4, "salamon_residual(sym_model(n, b2)) = -P(b2, n) for all 168 (n, b2) pairs");
}

#[test]
fn criterion_05_dim8_pipeline() {
    let pipe = dim8_pipeline();

    // independent expansion oracle: integer binomial point values pin the
    // degree-4 polynomial at 9 points
    let lhs_point = |b: i64| -> Int {
        let c = |n: i64, k: i64| binomial(&Int::from(n), &Int::from(k)).unwrap();
        -c(b + 3, 4) * 2 + c(b + 2, 3) * 8 + c(b + 1, 2) * 44 + Int::from(104 * b + 188)
    };
    for b in 0..=8i64 {
        assert_eq!(pipe.lhs.eval(&q(b)), Rat::from_integer(lhs_point(b)), "lhs({b})");
    }
    assert_eq!(pipe.lhs, qpoly_over(&[2256, 1538, 301, 10, -1], 12));
    assert_eq!(pipe.bound, Int::from(24));
    assert_eq!(pipe.lhs.eval(&q(24)), q(1584));
    assert_eq!(pipe.lhs.eval(&q(25)), q(-462));

    // the printed quartic (with its 530 b2 term) is refuted with an exact
    // polynomial discrepancy
    let claims = run_all_claims();
    let printed = claims.iter().find(|c| c.claim_id == "dim8-lhs-printed").unwrap();
    assert_eq!(printed.status, ClaimStatus::Refuted);
    let want_disc = &printed_dim8_lhs() - &pipe.lhs;
    assert_eq!(printed.discrepancy, Discrepancy::Polynomial(want_disc.clone(), "b2"));
    // (530 - 1538) b2 / 12 = -84 b2
    assert_eq!(want_disc, qpoly_over(&[0, -84], 1));
    pass(5, "recomputed LHS numerator is -b2^4 + 10b2^3 + 301b2^2 + 1538b2 + 2256, bound 24, printed 530-variant refuted");
}

#[test]
fn criterion_06_dim8_rhs_claims() {
    let pipe = dim8_pipeline();
    assert_eq!(rederived_rhs(ModuleKind::L3), pipe.rhs_c);
    assert_eq!(rederived_rhs(ModuleKind::L2), pipe.rhs_d);
    assert_eq!(rederived_rhs(ModuleKind::L1), pipe.rhs_e);
    assert_eq!(pipe.rhs_c, qpoly_over(&[-48, -124, -15, 1], 3));
    assert_eq!(pipe.rhs_d, qpoly_over(&[-46, -9, 1], 1));
    assert_eq!(pipe.rhs_e, qpoly_over(&[-8, 2], 1));
    let claims = run_all_claims();
    for id in ["dim8-rhs-c-coefficient", "dim8-rhs-d-coefficient", "dim8-rhs-e-coefficient"] {
        let r = claims.iter().find(|c| c.claim_id == id).unwrap();
        assert_eq!(r.status, ClaimStatus::Verified, "{id}");
    }
    pass(6, "printed c, d, e coefficient polynomials match the exact rearrangement");
}

/// Brute force over the box [0, constant]^4 (with the usual division bounds
/// where a coefficient is positive); independent of the production search.
fn box_oracle_feasible(eq: &Dim8Equation) -> bool {
    let cc = eq.coeff_c.to_i64().unwrap();
    let cd = eq.coeff_d.to_i64().unwrap();
    let ce = eq.coeff_e.to_i64().unwrap();
    let cf = eq.coeff_f.to_i64().unwrap();
    let constant = eq.constant.to_i64().unwrap();
    if constant < 0 {
        // nonnegative unknowns with nonnegative coefficients cannot reach it
        assert!(cc >= 0 && cd >= 0 && ce >= 0 && cf >= 0);
        return false;
    }
    let cap = |coeff: i64| if coeff > 0 { constant / coeff } else { constant };
    for c in 0..=cap(cc) {
        let r1 = constant - cc * c;
        if cc > 0 && r1 < 0 {
            break;
        }
        for d in 0..=cap(cd) {
            let r2 = r1 - cd * d;
            if cd > 0 && r2 < 0 {
                break;
            }
            for e in 0..=cap(ce) {
                let r3 = r2 - ce * e;
                if ce > 0 && r3 < 0 {
                    break;
                }
                if r3 >= 0 && cf > 0 && r3 % cf == 0 {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn criterion_07_feasibility_scan() {
    let rows = scan(&Int::from(3), &Int::from(1000), 4).unwrap();
    assert_eq!(rows.len(), 998);
    for row in &rows {
        let b2 = row.b2.to_i64().unwrap();
        assert_eq!(row.result.is_feasible(), b2 <= 24, "b2 = {b2}");
        if let Some(w) = row.result.witness() {
            assert!(w.satisfies(&dim8_equation(&row.b2)), "witness at b2 = {b2}");
        }
    }
    for b2 in 3..=30i64 {
        let eq = dim8_equation(&Int::from(b2));
        assert_eq!(
            box_oracle_feasible(&eq),
            find_witness(&Int::from(b2)).is_feasible(),
            "box oracle at b2 = {b2}"
        );
    }
    pass(7, "feasible with valid witnesses on [3,24], infeasible on [25,1000], box oracle agrees on [3,30]");
}

#[test]
fn criterion_08_remark_b7() {
    let r = remark_b7();
    // oracle: the recomputed left side at 25 is -462, so b7 up to 461 keeps
    // it negative
    let pipe = dim8_pipeline();
    let v = pipe.lhs.eval(&q(25));
    assert_eq!(v, q(-462));
    assert_eq!(r.threshold, -v.to_integer() - 1);
    assert_eq!(r.threshold, Int::from(461));
    assert_eq!(r.printed_f_at_25, q(-2562));
    let claims = run_all_claims();
    let claim = claims.iter().find(|c| c.claim_id == "remark-b7").unwrap();
    assert_eq!(claim.status, ClaimStatus::Refuted);
    assert!(claim.expected.contains("1281"));
    pass(8, "recomputed b7 threshold 461 and printed F(25) = -2562, both against the printed 1281");
}

#[test]
fn criterion_09_dim10() {
    let lhs = dim10_lhs();
    for b2 in 26..=200i64 {
        assert!(lhs.eval(&q(b2)).is_negative(), "b2 = {b2}");
    }
    assert_eq!(dim10_negativity_threshold(), Int::from(5));
    let claims = run_all_claims();
    let threshold = claims
        .iter()
        .find(|c| c.claim_id == "dim10-negativity-threshold")
        .unwrap();
    assert!(threshold.computed.contains(">= 5"));
    assert_eq!(
        claims.iter().find(|c| c.claim_id == "dim10-bound").unwrap().status,
        ClaimStatus::Verified
    );
    pass(9, "printed quintic negative on [26,200]; exact negativity threshold 5 reported");
}

#[test]
fn criterion_10_table_checks() {
    // summation oracle: add the 81 printed entries one by one
    let oracle_total = |kind: ModuleKind| -> QPoly {
        let table = diamond_table(kind).unwrap();
        let mut acc = QPoly::zero();
        for p in 0..=8usize {
            for q_idx in 0..=8usize {
                acc = &acc + table.entry(p, q_idx).unwrap();
            }
        }
        acc
    };
    let l2 = h_substitute(&oracle_total(ModuleKind::L2));
    assert_eq!(l2, ext_dim_poly(2));
    let l3 = h_substitute(&oracle_total(ModuleKind::L3));
    let discrepancy = &l3 - &ext_dim_poly(3);
    // regression lock: the printed first table exceeds dim Λ³ by exactly 2
    assert_eq!(discrepancy, Polynomial::constant(q(2)));
    pass(10, "L2 diamond total equals dim Λ² exactly; L3 total exceeds dim Λ³ by the constant 2");
}

#[test]
fn criterion_11_dimension_oracles() {
    fn count_multisets(vars: u64, m: u64, min: u64) -> u64 {
        if m == 0 {
            return 1;
        }
        (min..vars).map(|i| count_multisets(vars, m - 1, i)).sum()
    }
    for b2 in 1..=6i64 {
        for m in 0..=5u32 {
            assert_eq!(
                sym_dim_poly(m).eval(&q(b2)),
                q(count_multisets(b2 as u64, u64::from(m), 0) as i64),
                "sym m = {m}, b2 = {b2}"
            );
        }
        let set = (b2 + 2) as u32;
        for k in 0..=5u32 {
            let mut count = 0i64;
            for mask in 0u32..(1 << set) {
                if mask.count_ones() == k {
                    count += 1;
                }
            }
            assert_eq!(
                ext_dim_poly(k).eval(&q(b2)),
                q(count),
                "ext k = {k}, b2 = {b2}"
            );
        }
    }
    pass(11, "sym/ext dimension polynomials match exhaustive multiset/subset enumeration");
}

#[test]
fn criterion_12_determinism_and_exit_codes() {
    let (out1, _, code1) = run_cli(&["verify", "--format", "json"]);
    let (out2, _, code2) = run_cli(&["verify", "--format", "json"]);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2, "verify --format json must be byte-identical across runs");

    let cases: &[(&[&str], i32)] = &[
        (&["bound", "--n", "2"], 0),
        (&["bound", "--n", "0"], 1),
        (&["bound", "--n", "21"], 1),
        (&["salamon", "--n", "1", "--betti", "1,0,22"], 0),
        (&["salamon", "--n", "1", "--betti", "1,0"], 1),
        (&["verify", "--strict"], 2),
        (&["verify", "--claims", "dim8-rhs-c-coefficient", "--strict"], 0),
        (&["verify", "--claims", "no-such-claim"], 1),
        (&["scan", "--b2-min", "5", "--b2-max", "4"], 1),
        (&["scan", "--b2-min", "24", "--b2-max", "24"], 0),
    ];
    for (args, want) in cases {
        let (_, stderr, code) = run_cli(args);
        assert_eq!(code, *want, "args {args:?} (stderr: {stderr})");
    }
    pass(12, "verify --format json is byte-identical across runs; exit codes conform");
}
