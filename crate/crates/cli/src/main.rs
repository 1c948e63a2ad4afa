//! betti-gate: exact bounds, Salamon residuals, printed-identity claims and
//! dimension-8 feasibility scans from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 at least one refuted
//! claim under `--strict`, 3 internal arithmetic failure.

mod render;

use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use betti_gate::engine::{b2_bound, closed_form_bound, run_all_claims, ClaimStatus};
use betti_gate::feasibility::scan;
use betti_gate::salamon::{salamon_residual, BettiSequence, Convention};
use betti_gate::Int;
use render::OutputFormat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Canonical,
    PaperLiteral,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Canonical => Convention::Canonical,
            ConventionArg::PaperLiteral => Convention::PaperLiteral,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "betti-gate",
    version,
    about = "Exact second-Betti-number bounds for hyperkähler manifolds with vanishing odd Betti numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound polynomial, maximal-root window and integer bound for one n
    Bound {
        /// Half the complex dimension (1..=20)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Canonical)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Add a decimal rendering of the root window (display only)
        #[arg(long)]
        approx: bool,
    },
    /// Salamon residual of a candidate Betti sequence
    Salamon {
        #[arg(long)]
        n: u32,
        /// Comma-separated nonnegative integers b0,b1,..,b2n
        #[arg(long)]
        betti: String,
    },
    /// Verify the printed identities of the derivation
    Verify {
        /// Comma-separated claim ids (defaults to the whole registry)
        #[arg(long)]
        claims: Option<String>,
        /// Exit with code 2 when any selected claim is refuted
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Dimension-8 feasibility scan over a b2 range
    Scan {
        #[arg(long = "b2-min")]
        b2_min: i64,
        #[arg(long = "b2-max")]
        b2_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() {
    let code = match std::panic::catch_unwind(run) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("betti-gate: internal arithmetic failure");
            3
        }
    };
    std::process::exit(code);
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { 0 } else { 1 };
        }
    };
    match cli.command {
        Command::Bound { n, convention, format, approx } => cmd_bound(n, convention.into(), format, approx),
        Command::Salamon { n, betti } => cmd_salamon(n, &betti),
        Command::Verify { claims, strict, format } => cmd_verify(claims.as_deref(), strict, format),
        Command::Scan { b2_min, b2_max, format } => cmd_scan(b2_min, b2_max, format),
    }
}

fn cmd_bound(n: u32, convention: Convention, format: OutputFormat, approx: bool) -> i32 {
    if !(1..=20).contains(&n) {
        eprintln!("betti-gate: --n must be between 1 and 20");
        return 1;
    }
    let result = match b2_bound(n, convention) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("betti-gate: {e}");
            return 3;
        }
    };
    print!("{}", render::render_bound(&result, &closed_form_bound(n), format, approx));
    0
}

fn cmd_salamon(n: u32, betti: &str) -> i32 {
    if n == 0 {
        eprintln!("betti-gate: --n must be at least 1");
        return 1;
    }
    let mut values = Vec::new();
    for part in betti.split(',') {
        match Int::from_str(part.trim()) {
            Ok(v) => values.push(v),
            Err(_) => {
                eprintln!("betti-gate: --betti entries must be integers, got '{part}'");
                return 1;
            }
        }
    }
    let seq = match BettiSequence::new(n, values) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("betti-gate: {e}");
            return 1;
        }
    };
    println!("residual: {}", salamon_residual(&seq));
    0
}

fn cmd_verify(claims: Option<&str>, strict: bool, format: OutputFormat) -> i32 {
    let registry = run_all_claims();
    let selected = match claims {
        None => registry,
        Some(list) => {
            let wanted: Vec<&str> = list.split(',').map(str::trim).collect();
            for id in &wanted {
                if !registry.iter().any(|r| r.claim_id == *id) {
                    eprintln!("betti-gate: unknown claim id '{id}'");
                    return 1;
                }
            }
            registry
                .into_iter()
                .filter(|r| wanted.contains(&r.claim_id.as_str()))
                .collect()
        }
    };
    print!("{}", render::render_claims(&selected, format));
    if strict && selected.iter().any(|r| r.status == ClaimStatus::Refuted) {
        return 2;
    }
    0
}

fn cmd_scan(b2_min: i64, b2_max: i64, format: OutputFormat) -> i32 {
    let threads = match scan_threads() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("betti-gate: {msg}");
            return 1;
        }
    };
    let rows = match scan(&Int::from(b2_min), &Int::from(b2_max), threads) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("betti-gate: {e}");
            return 1;
        }
    };
    print!("{}", render::render_scan(&rows, format));
    0
}

/// Worker cap for `scan`: BETTI_GATE_THREADS when set (a positive integer),
/// otherwise the available parallelism.
fn scan_threads() -> Result<usize, String> {
    match std::env::var("BETTI_GATE_THREADS") {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!("BETTI_GATE_THREADS must be a positive integer, got '{raw}'")),
        },
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)),
        Err(e) => Err(format!("BETTI_GATE_THREADS is not valid unicode: {e}")),
    }
}
