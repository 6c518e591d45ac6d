//! `nq`: run verification suites, print tables and solve S₃ Maxwell sources.

use clap::{Parser, Subcommand, ValueEnum};
use nq_core::finite_group::{GroupCalculus, GroupError};
use nq_core::report::SuiteReport;
use nq_core::scalars::FieldCtx;
use nq_core::suites::{self, SuiteConfig, SuiteError};
use nq_core::tables::{self, TableError};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;
const CONSTRUCTION: u8 = 3;

#[derive(Parser)]
#[command(name = "nq", version, about = "Exact braided exterior algebras, Fourier transform and Hodge star")]
struct Cli {
    /// Ground field: rational, ratfun or cyclotomic:N. Defaults per example.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldCtx>,
    /// Degree cap for braided factorials and tensor algebras.
    #[arg(long, global = true, env = "NQ_MAX_DEGREE", default_value_t = 6)]
    max_degree: usize,
    /// Monomial window for the SL₂ Laplacian.
    #[arg(long, global = true, default_value_t = 6)]
    window: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a table for one of the shipped examples.
    Table {
        #[arg(long)]
        example: String,
        #[arg(long)]
        what: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve □α = J with δα = 0 for a JSON 1-form source on S₃.
    Maxwell { source: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_field(s: &str) -> Result<FieldCtx, String> {
    s.parse::<FieldCtx>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SuiteConfig { field: cli.field, max_degree: cli.max_degree, window: cli.window };
    let code = match cli.command {
        Command::Verify { suite, json } => verify(&suite, json, &cfg),
        Command::Table { example, what, format } => table(&example, &what, format, &cfg),
        Command::Maxwell { source } => maxwell(&source),
    };
    ExitCode::from(code)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn verify(suite: &str, path: Option<PathBuf>, cfg: &SuiteConfig) -> u8 {
    let reports = match suites::run(suite, cfg) {
        Ok(r) => r,
        Err(e @ SuiteError::UnknownSuite(_)) => {
            eprintln!("error: {e}; expected one of {} or all", suites::SUITES.join(", "));
            return USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return CONSTRUCTION;
        }
    };
    let pass = reports.iter().all(|r| r.pass);
    let doc = if suite == "all" {
        json!({
            "suite": "all",
            "reports": reports,
            "pass": pass,
            "ms": reports.iter().map(|r| r.ms).sum::<u64>(),
        })
    } else {
        serde_json::to_value(&reports[0]).expect("reports serialize")
    };
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, pretty(&doc) + "\n") {
                eprintln!("error: cannot write {}: {e}", p.display());
                return USAGE;
            }
            for r in &reports {
                summary(r);
            }
        }
        None => emit(&(pretty(&doc) + "\n")),
    }
    if pass {
        PASS
    } else {
        CHECK_FAILED
    }
}

fn summary(r: &SuiteReport) {
    let passed = r.checks.iter().filter(|c| c.pass).count();
    let status = if r.pass { "pass" } else { "FAIL" };
    emit(&format!("{status} {} ({passed}/{} checks, {} ms)\n", r.suite, r.checks.len(), r.ms));
    for c in r.failures() {
        emit(&format!("  failed: {}\n", c.id));
    }
}

fn table(example: &str, what: &str, format: Format, cfg: &SuiteConfig) -> u8 {
    let t = match tables::table(example, what, cfg) {
        Ok(t) => t,
        Err(e @ TableError::Construction(_)) => {
            eprintln!("error: {e}");
            return CONSTRUCTION;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    match format {
        Format::Text => emit(&t.to_text()),
        Format::Json => emit(&(pretty(&t.to_json()) + "\n")),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let rows = std::iter::once(t.columns.clone()).chain(t.rows.iter().map(|r| r.iter().map(|c| c.plain()).collect()));
            for row in rows {
                if let Err(e) = w.write_record(&row) {
                    eprintln!("error: {e}");
                    return USAGE;
                }
            }
            if w.flush().is_err() {
                return USAGE;
            }
        }
    }
    PASS
}

fn maxwell(path: &PathBuf) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return USAGE;
        }
    };
    let c = match GroupCalculus::s3() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return CONSTRUCTION;
        }
    };
    let parsed = serde_json::from_str::<Value>(&text).map_err(|e| GroupError::BadSource(e.to_string()));
    let j = match parsed.and_then(|v| c.parse_one_form(&v)) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    match c.maxwell(&j) {
        Ok(sol) => {
            emit(&(pretty(&json!({ "alpha": c.one_form_to_json(&sol.alpha), "residual_zero": sol.residual_zero })) + "\n"));
            PASS
        }
        Err(GroupError::NotCoexact(reason)) => {
            emit(&(pretty(&json!({ "error": "not coexact", "reason": reason })) + "\n"));
            CHECK_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            CONSTRUCTION
        }
    }
}
