use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use duadic_core::code::classify_duality;
use duadic_core::distance::{
    min_distance, Budget, DEFAULT_COLUMN_BUDGET, DEFAULT_ENUMERATION_BUDGET,
};
use duadic_core::tables::{run_rows, RowManifest, RowReport};
use duadic_core::{find_splittings, Error, SplitKind};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "duadic",
    version,
    about = "Duadic negacyclic codes over F_q[u]/<f(u)> and their Gray images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct BudgetArgs {
    /// Largest number of codewords to enumerate (0 disables exact search)
    #[arg(long, env = "DUADIC_BUDGET", default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,
    /// Largest number of parity-check column subsets to test (defaults to 0 when --budget is 0)
    #[arg(long, env = "DUADIC_COLUMN_BUDGET")]
    column_budget: Option<u64>,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        let fallback = if self.budget == 0 {
            0
        } else {
            DEFAULT_COLUMN_BUDGET
        };
        Budget {
            enumeration: self.budget,
            column: self.column_budget.unwrap_or(fallback),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the splittings of O_2n of the given type
    Split {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        /// type1 or type2
        #[arg(long)]
        kind: SplitKind,
        /// Keep only splittings given by this multiplier (mod 2n)
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
    },
    /// Construct the code described by a manifest and print its generators
    Build {
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Classify the duality properties of a manifest's Gray image
    Check {
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Minimum distance of a manifest's Gray image
    Mindist {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Reproduce one of the built-in example tables
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run every row of a manifest file and compare with its expectations
    Run {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Mismatch,
    Param(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Param(e.to_string())
    }
}

/// A manifest file holds one row object or an array of them.
fn load(path: &Path) -> Result<Vec<RowManifest>, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Param(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Param(format!("{}: {e}", path.display())))?;
    let rows = match value {
        Value::Array(_) => serde_json::from_value(value),
        other => serde_json::from_value(other).map(|r| vec![r]),
    };
    rows.map_err(|e| Failure::Param(format!("{}: {e}", path.display())))
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn text_line(r: &RowReport) -> String {
    let d = match r.distance.exact {
        Some(d) => d.to_string(),
        None => format!("{}..{}", r.distance.lower, r.distance.upper),
    };
    let mut flags = Vec::new();
    if r.flags.self_dual {
        flags.push("self-dual");
    } else if r.flags.self_orthogonal {
        flags.push("self-orthogonal");
    }
    if r.flags.lcd {
        flags.push("LCD");
    }
    if r.flags.isodual == Some(true) && !r.flags.self_dual {
        flags.push("isodual");
    }
    format!(
        "q={:<3} n={:<3} m={} s={:<3} {:<9} A={:?} [{},{},{}] {:<28} {}",
        r.q,
        r.n,
        r.m,
        r.s,
        serde_json::to_value(r.kind)
            .unwrap()
            .as_str()
            .unwrap_or_default(),
        r.splitting.a,
        r.length,
        r.dimension,
        d,
        flags.join(" "),
        if r.pass { "ok" } else { "MISMATCH" }
    )
}

fn report_rows(rows: &[RowManifest], budget: Budget, format: Format) -> Result<(), Failure> {
    let mut failure = None;
    for result in run_rows(rows, &budget) {
        match result {
            Ok(report) => {
                if !report.pass {
                    failure.get_or_insert(Failure::Mismatch);
                }
                match format {
                    Format::Json => {
                        emit(&serde_json::to_value(&report).expect("reports serialize"))
                    }
                    Format::Text => println!("{}", text_line(&report)),
                }
            }
            Err(e) => {
                emit(&json!({ "error": e.to_string() }));
                failure = Some(Failure::Param(e.to_string()));
            }
        }
    }
    failure.map_or(Ok(()), Err)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Split { q, n, kind, s } => {
            let mut splits = find_splittings(q, n, kind)?;
            if let Some(s) = s {
                let two_n = 2 * n as i64;
                let s = s.rem_euclid(two_n) as u64;
                let mut seen = Vec::new();
                splits.retain(|sp| {
                    sp.given_by(s) && !seen.contains(&sp.a) && {
                        seen.push(sp.a.clone());
                        true
                    }
                });
                splits.iter_mut().for_each(|sp| sp.s = s);
            }
            emit(&json!({ "q": q, "n": n, "kind": kind, "splittings": splits }));
        }
        Command::Build { manifest } => {
            for row in load(&manifest)? {
                let built = row.build()?;
                emit(&json!({
                    "field": built.field.manifest(),
                    "ring": built.ring.manifest(),
                    "splitting": built.splitting,
                    "gamma": built.gamma.map(|g| built.field.display(g)),
                    "size_exponent": built.source.size_exponent(),
                    "components": built.source.components().iter().map(|c| c.manifest()).collect::<Vec<_>>(),
                    "image": built.image.manifest(),
                }));
            }
        }
        Command::Check { manifest } => {
            for row in load(&manifest)? {
                let built = row.build()?;
                let flags = classify_duality(&built.image, Some(&built.witness));
                emit(&json!({
                    "length": built.image.length(),
                    "dimension": built.image.dimension(),
                    "splitting": built.splitting,
                    "lambda": built.gray.lambda().map(|l| built.field.display(l)),
                    "flags": flags,
                }));
            }
        }
        Command::Mindist { manifest, budget } => {
            for row in load(&manifest)? {
                let built = row.build()?;
                let report = min_distance(&built.image, &budget.budget(), built.bch)?;
                emit(&json!({
                    "length": built.image.length(),
                    "dimension": built.image.dimension(),
                    "distance": report,
                }));
            }
        }
        Command::Table {
            which,
            budget,
            format,
        } => {
            report_rows(&duadic_core::table(which)?, budget.budget(), format)?;
        }
        Command::Run {
            manifest,
            budget,
            format,
        } => {
            report_rows(&load(&manifest)?, budget.budget(), format)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Param(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
