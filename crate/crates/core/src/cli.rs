//! The `dua` command line: verify, classify, eval and table.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::classify::{classify, ClassifyError};
use crate::parse::{parse_poly, parse_scalar, EvalError};
use crate::pbw::{presentation_by_name, PbwError};
use crate::scalars::ScalarError;
use crate::table::{build_table, TableError, TableFixture};
use crate::verify::{verify, Suite, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED_FIELD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dua", version, about = "Exact computations in down-up algebras A(alpha, beta, gamma)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suite
    Verify {
        /// all, section3_1, section3_2, section4 or engine
        #[arg(long, default_value = "all")]
        suite: String,
        /// Degree bound for ideal computations (at least 2)
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Also write the JSON report to PATH
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Stable-rank bounds for A(ALPHA, BETA, GAMMA)
    Classify {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        json: bool,
    },
    /// Normalize an expression in u, w, d
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// A0, A1 or tilde
        #[arg(long, default_value = "A1")]
        alg: String,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the stable-rank table from its witness fixture
    Table {
        /// Write the table to PATH instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Witness fixture (defaults to the built-in one)
        #[arg(long, value_name = "PATH")]
        fixture: Option<PathBuf>,
    },
}

fn scalar_exit(e: &ScalarError) -> i32 {
    match e {
        ScalarError::DivisionByZero => EXIT_USAGE,
        ScalarError::FieldMismatch { .. } | ScalarError::UnsupportedField(_) => {
            EXIT_UNSUPPORTED_FIELD
        }
    }
}

fn eval_exit(e: &EvalError) -> i32 {
    match e {
        EvalError::Scalar(s) | EvalError::Pbw(PbwError::Scalar(s)) => scalar_exit(s),
        _ => EXIT_USAGE,
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match cli.command {
        Command::Verify { suite, bound, json } => cmd_verify(&suite, bound, json, out, err),
        Command::Classify {
            alpha,
            beta,
            gamma,
            json,
        } => cmd_classify([&alpha, &beta, &gamma], json, out, err),
        Command::Eval { expr, alg, json } => cmd_eval(&expr, &alg, json, out, err),
        Command::Table { out: path, fixture } => cmd_table(path, fixture, out, err),
    }
}

fn cmd_verify(
    suite: &str,
    bound: u32,
    json_path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report = match suite.parse::<Suite>().and_then(|s| verify(s, bound)) {
        Ok(r) => r,
        Err(e @ (VerifyError::UnknownSuite(_) | VerifyError::BoundTooSmall(_))) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let _ = write!(out, "{}", report.to_text());
    if let Some(p) = json_path {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(&p, text) {
            let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
            return EXIT_USAGE;
        }
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_classify(args: [&str; 3], as_json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut vals = Vec::new();
    for (name, src) in ["alpha", "beta", "gamma"].iter().zip(args) {
        match parse_scalar(src) {
            Ok(v) => vals.push(v),
            Err(e) => {
                let _ = writeln!(err, "error: {name}: {e}");
                return eval_exit(&e);
            }
        }
    }
    let report = match classify(&vals[0], &vals[1], &vals[2]) {
        Ok(r) => r,
        Err(ClassifyError::NonNoetherian(r)) => *r,
        Err(ClassifyError::UnsupportedField(m)) => {
            let _ = writeln!(err, "error: unsupported field: {m}");
            return EXIT_UNSUPPORTED_FIELD;
        }
    };
    if as_json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializes"));
        return EXIT_OK;
    }
    let i = &report.input;
    let _ = writeln!(out, "A({}, {}, {})", i.alpha, i.beta, i.gamma);
    if !report.noetherian {
        let _ = writeln!(out, "not noetherian (beta = 0): no stable-rank bounds");
    } else {
        if let Some(k) = report.krull_dim {
            let _ = writeln!(out, "Krull dimension: {k}");
        }
        if let Some(r) = &report.roots {
            let order = |o: Option<u32>| o.map_or("none".to_string(), |n| n.to_string());
            let _ = writeln!(
                out,
                "roots: lambda = {}, mu = {} in {} (root-of-unity orders: lambda {}, mu {}, lambda/mu {})",
                r.lambda,
                r.mu,
                r.field,
                order(r.lambda_order),
                order(r.mu_order),
                order(r.ratio_order)
            );
        }
        let _ = writeln!(out, "stable rank: {}", report.bounds_text());
    }
    for rule in &report.rule_trace {
        let _ = writeln!(out, "  by: {rule}");
    }
    EXIT_OK
}

fn cmd_eval(src: &str, alg: &str, as_json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(pres) = presentation_by_name(alg) else {
        let _ = writeln!(err, "error: unknown algebra `{alg}` (expected A0, A1 or tilde)");
        return EXIT_USAGE;
    };
    match parse_poly(src, &pres) {
        Ok(f) => {
            if as_json {
                let v = json!({"algebra": pres.name(), "input": src, "normal_form": f.to_canonical()});
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "{}", f.to_canonical());
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            eval_exit(&e)
        }
    }
}

fn cmd_table(
    path: Option<PathBuf>,
    fixture: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report = match TableFixture::load(fixture.as_deref()).and_then(|f| build_table(&f)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                TableError::Scalar(s) => scalar_exit(&s),
                _ => EXIT_USAGE,
            };
        }
    };
    let md = report.to_markdown();
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, &md) {
                let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = write!(out, "{md}");
        }
    }
    if report.all_match() {
        EXIT_OK
    } else {
        for r in report.mismatches() {
            let _ = writeln!(err, "mismatch: {} [{}]", r.algebra, r.condition);
        }
        EXIT_CHECK_FAILED
    }
}
