//! Output rendering. Every numeric value is printed exactly: integers as
//! decimal strings, rationals as `p/q`. The optional decimal rendering of
//! root windows is clearly labelled display-only and never feeds a verdict.

use betti_gate::engine::{BoundResult, ClaimReport, ClaimStatus};
use betti_gate::feasibility::ScanRow;
use betti_gate::{Int, Rat};
use num_traits::Signed;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Truncated decimal expansion of an exact rational, by integer long
/// division (no floating point).
pub fn decimal_string(r: &Rat, digits: u32) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let int_part = &num / &den;
    let mut rem = &num % &den;
    let mut frac = String::with_capacity(digits as usize);
    for _ in 0..digits {
        rem *= 10;
        frac.push_str(&(&rem / &den).to_string());
        rem %= &den;
    }
    format!("{sign}{int_part}.{frac}")
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields.iter().map(|f| csv_escape(f)).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// bound

pub fn render_bound(r: &BoundResult, closed_form: &Int, format: OutputFormat, approx: bool) -> String {
    let coeffs: Vec<String> = r.polynomial.coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("n: {}\nconvention: {}\n", r.n, r.convention));
            out.push_str(&format!("polynomial: {}\n", r.polynomial.display_with("b2")));
            out.push_str(&format!("coefficients (ascending): {}\n", coeffs.join(", ")));
            out.push_str(&format!(
                "max real root in [{}, {}]{}\n",
                r.max_root.lo,
                r.max_root.hi,
                if r.max_root.exact { " (exact)" } else { "" }
            ));
            if approx {
                out.push_str(&format!(
                    "max real root approx [{}, {}] (display-only decimals)\n",
                    decimal_string(&r.max_root.lo, 12),
                    decimal_string(&r.max_root.hi, 12)
                ));
            }
            out.push_str(&format!("integer bound: {}\n", r.integer_bound));
            out.push_str(&format!("closed-form bound: {closed_form}\n"));
            out
        }
        OutputFormat::Json => {
            let mut root = json!({
                "lo": r.max_root.lo.to_string(),
                "hi": r.max_root.hi.to_string(),
                "exact": r.max_root.exact,
            });
            if approx {
                root["approx_display_only"] = json!({
                    "lo": decimal_string(&r.max_root.lo, 12),
                    "hi": decimal_string(&r.max_root.hi, 12),
                });
            }
            let v = json!({
                "n": r.n,
                "convention": r.convention.name(),
                "polynomial": {
                    "variable": "b2",
                    "coefficients_ascending": coeffs,
                    "display": r.polynomial.display_with("b2"),
                },
                "max_root": root,
                "integer_bound": r.integer_bound.to_string(),
                "closed_form_bound": closed_form.to_string(),
            });
            pretty(&v)
        }
        OutputFormat::Csv => {
            let header = "n,convention,integer_bound,closed_form_bound,root_lo,root_hi,exact,polynomial";
            let row = csv_line(&[
                r.n.to_string(),
                r.convention.name().to_string(),
                r.integer_bound.to_string(),
                closed_form.to_string(),
                r.max_root.lo.to_string(),
                r.max_root.hi.to_string(),
                r.max_root.exact.to_string(),
                r.polynomial.display_with("b2"),
            ]);
            format!("{header}\n{row}\n")
        }
    }
}

// ---------------------------------------------------------------------------
// verify

fn discrepancy_string(report: &ClaimReport) -> String {
    report.discrepancy.to_string()
}

pub fn render_claims(reports: &[ClaimReport], format: OutputFormat) -> String {
    let verified = reports.iter().filter(|r| r.status == ClaimStatus::Verified).count();
    let refuted = reports.iter().filter(|r| r.status == ClaimStatus::Refuted).count();
    let info = reports.iter().filter(|r| r.status == ClaimStatus::Info).count();
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!("[{}] {}\n", r.status, r.claim_id));
                out.push_str(&format!("  expected: {}\n", r.expected));
                out.push_str(&format!("  computed: {}\n", r.computed));
                if r.status != ClaimStatus::Info {
                    out.push_str(&format!("  discrepancy: {}\n", discrepancy_string(r)));
                }
            }
            out.push_str(&format!(
                "{} claims: {verified} verified, {refuted} refuted, {info} info\n",
                reports.len()
            ));
            out
        }
        OutputFormat::Json => {
            let claims: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "claim_id": r.claim_id,
                        "status": r.status.name(),
                        "expected": r.expected,
                        "computed": r.computed,
                        "discrepancy": discrepancy_string(r),
                    })
                })
                .collect();
            let v = json!({
                "claims": claims,
                "summary": {
                    "total": reports.len(),
                    "verified": verified,
                    "refuted": refuted,
                    "info": info,
                },
            });
            pretty(&v)
        }
        OutputFormat::Csv => {
            let mut out = String::from("claim_id,status,expected,computed,discrepancy\n");
            for r in reports {
                out.push_str(&csv_line(&[
                    r.claim_id.clone(),
                    r.status.name().to_string(),
                    r.expected.clone(),
                    r.computed.clone(),
                    discrepancy_string(r),
                ]));
                out.push('\n');
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// scan

pub fn render_scan(rows: &[ScanRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for row in rows {
                match row.result.witness() {
                    Some(w) => out.push_str(&format!(
                        "b2 = {}: feasible, witness (c, d, e, f) = ({}, {}, {}, {})\n",
                        row.b2, w.c, w.d, w.e, w.f
                    )),
                    None => out.push_str(&format!("b2 = {}: infeasible\n", row.b2)),
                }
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|row| match row.result.witness() {
                    Some(w) => json!({
                        "b2": row.b2.to_string(),
                        "feasible": true,
                        "witness": {
                            "c": w.c.to_string(),
                            "d": w.d.to_string(),
                            "e": w.e.to_string(),
                            "f": w.f.to_string(),
                        },
                    }),
                    None => json!({
                        "b2": row.b2.to_string(),
                        "feasible": false,
                        "witness": Value::Null,
                    }),
                })
                .collect();
            let feasible = rows.iter().filter(|r| r.result.is_feasible()).count();
            let v = json!({
                "rows": items,
                "summary": {
                    "total": rows.len(),
                    "feasible": feasible,
                    "infeasible": rows.len() - feasible,
                },
            });
            pretty(&v)
        }
        OutputFormat::Csv => {
            let mut out = String::from("b2,feasible,c,d,e,f\n");
            for row in rows {
                let fields = match row.result.witness() {
                    Some(w) => vec![
                        row.b2.to_string(),
                        "true".to_string(),
                        w.c.to_string(),
                        w.d.to_string(),
                        w.e.to_string(),
                        w.f.to_string(),
                    ],
                    None => vec![
                        row.b2.to_string(),
                        "false".to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ],
                };
                out.push_str(&csv_line(&fields));
                out.push('\n');
            }
            out
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialising plain data cannot fail");
    s.push('\n');
    s
}
