use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use griess_s3::exact::{fmt_rational, parse_rational};
use griess_s3::format::{algebra_from_json, algebra_to_json, ring_from_json, ring_to_json};
use griess_s3::fusion::builtin;
use griess_s3::report::{self, VerificationReport};
use griess_s3::series::{self, MinimalModelTable};
use griess_s3::Rational;

/// Exact verification of the S3 Griess algebras of two Ising vectors.
#[derive(Parser)]
#[command(name = "griess-s3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the admissible values of lambda.
    SolveLambda {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the algebra at an admissible lambda.
    Build {
        #[arg(long)]
        lambda: String,
        /// Write the algebra here; without it the algebra goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify an algebra file.
    Verify {
        file: PathBuf,
        /// Treat flagged printed constants as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-derive every printed structure constant.
    Audit {
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Unitary discrete series data.
    Series {
        #[arg(long, conflicts_with = "charge", required_unless_present = "charge")]
        m: Option<u32>,
        #[arg(long)]
        charge: Option<String>,
    },
    /// Print or check a fusion ring.
    Fusion {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        ring: Option<String>,
        /// A ring in the JSON file format.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Check unit, commutativity and associativity.
        #[arg(long)]
        check: bool,
    },
    /// Highest weight pairs with integral total weight.
    Pairs {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// Decompose a central charge into series charges.
    Decompose {
        #[arg(long)]
        charge: String,
        #[arg(long)]
        min: String,
        #[arg(long)]
        max: String,
    },
    /// Every result with its computed and stated value.
    PaperReport {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn rational(s: &str, what: &str) -> anyhow::Result<Rational> {
    parse_rational(s).with_context(|| format!("invalid {what} '{s}'"))
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("plain data serializes")
    );
}

fn emit(report: &VerificationReport, format: Format) -> u8 {
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Md => print!("{}", report.to_markdown()),
    }
    report.exit_code() as u8
}

fn strings(values: impl IntoIterator<Item = Rational>) -> Value {
    values.into_iter().map(|v| fmt_rational(&v)).collect()
}

fn series_of(c: &Rational, flag: &str) -> anyhow::Result<u32> {
    match series::find_m(c) {
        Some(m) => Ok(m),
        None => bail!(
            "{flag} = {} is not a unitary series charge",
            fmt_rational(c)
        ),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// `Ok(code)` for completed runs; errors are input errors.
fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::SolveLambda { format } => Ok(emit(&report::solve_lambda_report(), format)),
        Command::Build { lambda, out } => {
            let l = rational(&lambda, "lambda")?;
            let (s3, summary) = report::build_report(&l)?;
            let text = algebra_to_json(s3.algebra());
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    Ok(emit(&summary, Format::Json))
                }
                None => {
                    print!("{text}");
                    Ok(summary.exit_code() as u8)
                }
            }
        }
        Command::Verify {
            file,
            strict,
            format,
        } => {
            let algebra = algebra_from_json(&read(&file)?)
                .with_context(|| format!("malformed {}", file.display()))?;
            let mut r = report::verify_report(algebra);
            if strict {
                r.promote_flags();
            }
            Ok(emit(&r, format))
        }
        Command::Audit { strict, format } => {
            let mut r = report::audit_report();
            if strict {
                r.promote_flags();
            }
            Ok(emit(&r, format))
        }
        Command::Series { m, charge } => {
            let (m, charge) = match (m, charge) {
                (Some(m), _) => (Some(m), series::central_charge(m)),
                (None, Some(c)) => {
                    let c = rational(&c, "charge")?;
                    (series::find_m(&c), c)
                }
                (None, None) => bail!("one of --m or --charge is required"),
            };
            let table = m.map(MinimalModelTable::new);
            let weights = table.as_ref().map_or(Value::Null, |t| strings(t.weights()));
            let cells: Value = table.as_ref().map_or(Value::Null, |t| {
                t.cells
                    .iter()
                    .map(|((r, s), h)| json!({"r": r, "s": s, "h": fmt_rational(h)}))
                    .collect()
            });
            print_json(&json!({
                "charge": fmt_rational(&charge),
                "m": m,
                "weights": weights,
                "cells": cells,
            }));
            Ok(0)
        }
        Command::Fusion { ring, file, check } => {
            let ring = match (ring, file) {
                (Some(name), _) => builtin(&name)?,
                (None, Some(path)) => {
                    let name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    ring_from_json(&name, &read(&path)?)
                        .with_context(|| format!("malformed {}", path.display()))?
                }
                (None, None) => bail!("one of --ring or --file is required"),
            };
            if !check {
                print!("{}", ring_to_json(&ring));
                return Ok(0);
            }
            let r = ring.verify();
            let violations: Vec<String> = r.violations.iter().map(ToString::to_string).collect();
            print_json(&json!({
                "ring": ring.name(),
                "ok": r.is_ok(),
                "associativity_checks": r.associativity_checks,
                "violations": violations,
            }));
            Ok(u8::from(!r.is_ok()))
        }
        Command::Pairs { c1, c2 } => {
            let (c1, c2) = (rational(&c1, "c1")?, rational(&c2, "c2")?);
            let (m1, m2) = (series_of(&c1, "c1")?, series_of(&c2, "c2")?);
            let pairs = series::integer_weight_pairs(&series::weights(m1), &series::weights(m2));
            let list: Vec<Value> = pairs
                .iter()
                .map(|(h, k)| json!([fmt_rational(h), fmt_rational(k)]))
                .collect();
            print_json(&json!({"c1": fmt_rational(&c1), "c2": fmt_rational(&c2), "pairs": list}));
            Ok(0)
        }
        Command::Decompose { charge, min, max } => {
            let c = rational(&charge, "charge")?;
            let lower = rational(&min, "min")?;
            let upper = rational(&max, "max")?;
            let found = series::decompose_charge(&c, &lower, &upper)?;
            let list: Vec<Value> = found.into_iter().map(strings).collect();
            print_json(&json!({"charge": fmt_rational(&c), "decompositions": list}));
            Ok(0)
        }
        Command::PaperReport { format } => Ok(emit(&report::full_report(), format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
