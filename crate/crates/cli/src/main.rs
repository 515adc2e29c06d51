use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hodge_core::series::{closed_targets, g_predict};
use hodge_core::suites::{emit_table, run_suite, Format};
use hodge_core::{Partition, RatFunc};

/// Exact verification of generating-series identities for Hodge integrals.
#[derive(Parser)]
#[command(name = "hodge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named identity suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_size: i64,
        #[arg(long)]
        json: bool,
        /// Compare the JSON report byte-for-byte with a stored file.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Emit a named table.
    Table {
        name: String,
        #[arg(long, default_value = "json")]
        format: String,
        /// Degree of the character table.
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Predict a connected coefficient. Partitions are comma-separated parts; `0` is empty.
    Predict {
        plus: Partition,
        minus: Partition,
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Serialize)]
struct Prediction {
    pair: (Partition, Partition),
    predicted: RatFunc,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<RatFunc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal: Option<bool>,
}

/// Prints `doc`, or compares it with `golden`; returns the exit status.
fn emit(doc: &str, golden: Option<&PathBuf>) -> u8 {
    let Some(path) = golden else {
        print!("{doc}");
        return OK;
    };
    match std::fs::read_to_string(path) {
        Ok(stored) if stored == doc => {
            println!("golden match: {}", path.display());
            OK
        }
        Ok(_) => {
            eprintln!("golden mismatch: {}", path.display());
            print!("{doc}");
            FAILED
        }
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            USAGE
        }
    }
}

fn run(cli: Cli) -> Result<u8, hodge_core::Error> {
    match cli.command {
        Command::Verify {
            suite,
            max_size,
            json,
            golden,
        } => {
            let report = run_suite(&suite, max_size)?;
            eprintln!("{}: {:.3}s", report.suite, report.elapsed.as_secs_f64());
            let doc = if json || golden.is_some() {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                report.to_text()
            };
            let status = emit(&doc, golden.as_ref());
            Ok(if report.passed() { status } else { FAILED })
        }
        Command::Table {
            name,
            format,
            degree,
            golden,
        } => {
            let format: Format = format.parse()?;
            Ok(emit(&emit_table(&name, format, degree)?, golden.as_ref()))
        }
        Command::Predict {
            plus,
            minus,
            cutoff,
            json,
            golden,
        } => {
            let cutoff = cutoff.unwrap_or(plus.size() + minus.size());
            let predicted = g_predict(&plus, &minus, cutoff)?;
            let target = closed_targets()
                .into_iter()
                .find(|t| t.plus == plus && t.minus == minus)
                .map(|t| hodge_core::series::trig_eval(t.displays[0].expected()))
                .transpose()?;
            let equal = target.as_ref().map(|t| t.rf_equal(&predicted));
            let doc = if json || golden.is_some() {
                let p = Prediction {
                    pair: (plus, minus),
                    predicted,
                    target,
                    equal,
                };
                serde_json::to_string_pretty(&p).expect("serializable") + "\n"
            } else {
                let mut s = format!("G_{plus},{minus} = {predicted}\n");
                if let Some(eq) = equal {
                    s.push_str(if eq {
                        "matches closed form\n"
                    } else {
                        "differs from closed form\n"
                    });
                }
                s
            };
            let status = emit(&doc, golden.as_ref());
            Ok(if equal == Some(false) { FAILED } else { status })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
