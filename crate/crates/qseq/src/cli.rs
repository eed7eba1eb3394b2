//! Command-line front end: JSON payloads on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check,
//! 2 on domain/precondition errors, 3 on non-convergence.
//!
//! Sequences are accepted inline as comma-separated values (window offset
//! via `--start`), as `@file` holding `{"start": n, "values": [...]}`
//! JSON, or as `-` for the same JSON on stdin. The environment variable
//! `QSEQ_TOL` overrides the default relative tolerance 1e-9 used by the
//! classification and verification commands.

use crate::checks;
use crate::contraction::ContractionProblem;
use crate::error::{Error, Result};
use crate::means::{c_constant, mean_of_chord_ratios, sharpness_witness, MeanSpec};
use crate::sequences::{
    affine_coeffs_with_tol, affine_envelope_with_tol, classify_with_tol, chord_ratios,
    make_affine, pointwise_min, support_chord_with_tol, AffineRep, WindowSequence,
    DEFAULT_REL_TOL,
};
use crate::{cheb_t, cheb_u};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;

#[derive(Parser)]
#[command(name = "qseq", version, about = "q-convex sequence analysis toolkit")]
struct Cli {
    /// Output format for the payload on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(alias = "T")]
    T,
    #[value(alias = "U")]
    U,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Chebyshev polynomial T_k or U_k.
    Cheb {
        /// Polynomial family: T (first kind) or U (second kind).
        #[arg(long, value_enum)]
        kind: Kind,
        /// Integer order, may be negative.
        #[arg(long, allow_hyphen_values = true)]
        order: i64,
        /// Evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Classify a sequence as q-convex / q-concave / q-affine at q.
    Classify {
        /// Sequence: comma-separated values, @file, or - for stdin.
        #[arg(long)]
        seq: String,
        /// Window start for inline sequences.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        #[arg(long)]
        q: f64,
    },
    /// Materialize a q-affine sequence from (a, b), or recover (a, b).
    Affine {
        /// U-coefficient (with --b: materialize mode).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<f64>,
        /// T-coefficient.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<f64>,
        /// Required unless --rep (which carries its own q).
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        /// Window end (materialize mode).
        #[arg(long, allow_hyphen_values = true)]
        end: Option<i64>,
        /// Coefficient pair as @file JSON {"a", "b", "q", "start"}.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        rep: Option<String>,
        /// Sequence to recover coefficients from (recover mode).
        #[arg(long, conflicts_with_all = ["a", "b", "rep"])]
        seq: Option<String>,
    },
    /// q-affine chord through two points of a q-concave sequence.
    Support {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        #[arg(long)]
        q: f64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Min-envelope of q-affine sequences reconstructing a q-concave input.
    Envelope {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        start: i64,
        #[arg(long)]
        q: f64,
    },
    /// Minimax constant for a power mean of chord ratios on {n, ..., m}.
    Bounds {
        /// Mean exponent: a number, "0" (geometric), or "inf" (maximum).
        #[arg(long)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Also emit a sharpness witness; optional value is epsilon.
        #[arg(long, num_args = 0..=1, default_missing_value = "1e-3")]
        witness: Option<f64>,
    },
    /// Solve the min-of-averages fixed-point problem.
    Fixpoint {
        /// Problem as @file / - JSON {"n", "gamma", "weights"}.
        #[arg(long, conflicts_with_all = ["n", "gamma", "weights"])]
        problem: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated offsets gamma_1..gamma_{floor((n+1)/2)}.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// "default" or comma-separated positive weights.
        #[arg(long, default_value = "default")]
        weights: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iter: usize,
    },
    /// Run the identity/property sweeps and print a pass/fail table.
    Verify {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Fan the checks out across threads (output order is unchanged).
        #[arg(long)]
        parallel: bool,
    },
}

fn tolerance() -> Result<f64> {
    match std::env::var("QSEQ_TOL") {
        Err(_) => Ok(DEFAULT_REL_TOL),
        Ok(raw) => {
            let tol: f64 = raw
                .parse()
                .map_err(|_| Error::domain(format!("QSEQ_TOL is not a number: {raw:?}")))?;
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Error::domain(format!(
                    "QSEQ_TOL must be positive and finite, got {tol}"
                )));
            }
            Ok(tol)
        }
    }
}

fn read_source(spec: &str) -> Result<String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::domain(format!("failed to read stdin: {e}")))?;
        return Ok(buf);
    }
    let path = spec.strip_prefix('@').unwrap_or(spec);
    std::fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("failed to read {path}: {e}")))
}

fn parse_floats(raw: &str) -> Result<Vec<f64>> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("not a number: {s:?}")))
        })
        .collect()
}

fn parse_sequence(spec: &str, start: i64) -> Result<WindowSequence> {
    if spec == "-" || spec.starts_with('@') {
        let text = read_source(spec)?;
        return serde_json::from_str(&text)
            .map_err(|e| Error::domain(format!("invalid sequence JSON: {e}")));
    }
    WindowSequence::new(start, parse_floats(spec)?)
}

fn parse_exponent(raw: &str) -> Result<MeanSpec> {
    let r = match raw.trim() {
        "inf" | "+inf" | "max" => f64::INFINITY,
        "-inf" | "min" => f64::NEG_INFINITY,
        other => other
            .parse::<f64>()
            .map_err(|_| Error::domain(format!("not an exponent: {other:?}")))?,
    };
    MeanSpec::new(r)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run_command(command: Command) -> Result<(Value, i32)> {
    let tol = tolerance()?;
    match command {
        Command::Cheb { kind, order, x } => {
            let value = match kind {
                Kind::T => cheb_t(order, x)?,
                Kind::U => cheb_u(order, x)?,
            };
            Ok((json!({ "value": value }), 0))
        }
        Command::Classify { seq, start, q } => {
            let p = parse_sequence(&seq, start)?;
            let cls = classify_with_tol(&p, q, tol)?;
            let ratios = chord_ratios(&p).ok();
            Ok((
                json!({
                    "verdict": to_value(&cls.verdict),
                    "convexity_threshold": cls.convexity_threshold,
                    "concavity_threshold": cls.concavity_threshold,
                    "ratios": ratios,
                }),
                0,
            ))
        }
        Command::Affine {
            a,
            b,
            q,
            start,
            end,
            rep,
            seq,
        } => {
            let need_q = || q.ok_or_else(|| Error::domain("this affine mode needs --q"));
            if let Some(seq) = seq {
                let p = parse_sequence(&seq, start)?;
                let rep = affine_coeffs_with_tol(&p, need_q()?, tol)?;
                return Ok((to_value(&rep), 0));
            }
            let rep = if let Some(path) = rep {
                let text = read_source(&path)?;
                serde_json::from_str::<AffineRep>(&text)
                    .map_err(|e| Error::domain(format!("invalid coefficient JSON: {e}")))?
            } else {
                match (a, b) {
                    (Some(a), Some(b)) => AffineRep::new(a, b, need_q()?, start)?,
                    _ => {
                        return Err(Error::domain(
                            "affine needs --a and --b (materialize), --rep, or --seq (recover)",
                        ))
                    }
                }
            };
            let end = end.ok_or_else(|| Error::domain("materialize mode needs --end"))?;
            let p = make_affine(&rep, end)?;
            Ok((to_value(&p), 0))
        }
        Command::Support { seq, start, q, j, k } => {
            let p = parse_sequence(&seq, start)?;
            let chord = support_chord_with_tol(&p, q, j, k, tol)?;
            Ok((to_value(&chord), 0))
        }
        Command::Envelope { seq, start, q } => {
            let p = parse_sequence(&seq, start)?;
            let members = affine_envelope_with_tol(&p, q, tol)?;
            let mats: Result<Vec<WindowSequence>> =
                members.iter().map(|rep| make_affine(rep, p.end())).collect();
            let min = pointwise_min(&mats?)?;
            let err = p
                .values()
                .iter()
                .zip(min.values())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0_f64, f64::max);
            Ok((
                json!({ "members": to_value(&members), "reconstruction_error": err }),
                0,
            ))
        }
        Command::Bounds { r, n, m, witness } => {
            let spec = parse_exponent(&r)?;
            let report = c_constant(spec, n, m)?;
            let mut payload = to_value(&report);
            if let Some(eps) = witness {
                let w = sharpness_witness(spec, n, m, eps)?;
                let achieved = mean_of_chord_ratios(spec, &w)?;
                payload["witness"] = to_value(&w);
                payload["achieved_mean"] = json!(achieved);
            }
            Ok((payload, 0))
        }
        Command::Fixpoint {
            problem,
            n,
            gamma,
            weights,
            tol: fp_tol,
            max_iter,
        } => {
            let prob = if let Some(src) = problem {
                let text = read_source(&src)?;
                serde_json::from_str::<ContractionProblem>(&text)
                    .map_err(|e| Error::domain(format!("invalid problem JSON: {e}")))?
            } else {
                let n = n.ok_or_else(|| Error::domain("fixpoint needs --n or --problem"))?;
                let gamma =
                    parse_floats(&gamma.ok_or_else(|| Error::domain("fixpoint needs --gamma"))?)?;
                if weights == "default" {
                    ContractionProblem::with_default_weights(n, gamma)?
                } else {
                    ContractionProblem::new(n, gamma, parse_floats(&weights)?)?
                }
            };
            let result = prob.solve_fixed_point(fp_tol, max_iter)?;
            Ok((
                json!({
                    "point": result.point,
                    "iterations": result.iterations,
                    "residual": result.residual_norm,
                    "q": result.certificate.q,
                    "q_star": result.certificate.q_star,
                }),
                0,
            ))
        }
        Command::Verify { seed, parallel } => {
            let reports = checks::run_all(seed, parallel);
            let all_passed = reports.iter().all(|r| r.passed);
            let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in &reports {
                eprintln!(
                    "{:<width$}  {}  {}",
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.detail
                );
            }
            Ok((
                json!({ "checks": to_value(&reports), "passed": all_passed }),
                if all_passed { 0 } else { 1 },
            ))
        }
    }
}

// Flatten a JSON tree into "path,value" rows. Numbers print exactly as in
// the JSON rendering, so both formats carry identical numeric content.
fn render_csv(value: &Value, prefix: &str, rows: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                render_csv(v, &path, rows);
            }
        }
        Value::Array(items) => {
            for (idx, v) in items.iter().enumerate() {
                render_csv(v, &format!("{prefix}[{idx}]"), rows);
            }
        }
        Value::String(s) => rows.push(format!("{prefix},{s}")),
        other => rows.push(format!("{prefix},{other}")),
    }
}

/// Parse arguments, execute, print the payload, and return the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_command(cli.command) {
        Ok((payload, code)) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&payload).expect("valid JSON"));
                }
                Format::Csv => {
                    let mut rows = Vec::new();
                    render_csv(&payload, "", &mut rows);
                    for row in rows {
                        println!("{row}");
                    }
                }
            }
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
