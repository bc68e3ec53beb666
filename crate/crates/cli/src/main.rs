use std::process::ExitCode;

use clap::{Parser, Subcommand};

use altrun_core::enumerate::{distribution, Budget, EnumError, ObjectClass, Statistic, DEFAULT_BUDGET};
use altrun_core::export::{render, Format};
use altrun_core::families::{polyseq, triangle_by_name, AnyTriangle, Sequence};
use altrun_core::verify::{run_suite, Suite, VerifyError, VerifyParams};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE_LIMIT: u8 = 3;

/// Alternating-run polynomial families: triangles, polynomials,
/// distributions and cross-checks, all in exact arithmetic.
#[derive(Parser)]
#[command(name = "altrun", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows of a recurrence triangle.
    Triangle {
        /// R, T, Rq, a, b, F, gamma or f.
        #[arg(long)]
        family: String,
        /// Largest row index.
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value = "table", value_parser = parse_format)]
        format: Format,
    },
    /// Print one polynomial of a sequence.
    Poly {
        /// bpoly, cpoly, dpoly, gammapoly, Fpoly, eulerA or eulerB.
        #[arg(long, value_parser = parse_sequence)]
        family: Sequence,
        #[arg(long)]
        n: usize,
    },
    /// Distribution of statistics over an object class, by enumeration.
    Dist {
        /// perm, signed, signed_hat, derangement, stirling or dual_stirling.
        #[arg(long, value_parser = parse_class)]
        class: ObjectClass,
        /// Comma-separated statistics, each optionally `name:variable`.
        /// Unnamed variables are x, q, y, z, u, v in order.
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_sequence(s: &str) -> Result<Sequence, String> {
    s.parse().map_err(|e: altrun_core::families::FamilyError| e.to_string())
}

fn parse_class(s: &str) -> Result<ObjectClass, String> {
    s.parse().map_err(|e: EnumError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

const DEFAULT_VARS: [&str; 6] = ["x", "q", "y", "z", "u", "v"];

fn parse_stats(spec: &str) -> Result<Vec<(Statistic, String)>, String> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() || parts.len() > DEFAULT_VARS.len() {
        return Err(format!("expected 1 to {} statistics", DEFAULT_VARS.len()));
    }
    parts
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let (name, var) = match part.split_once(':') {
                Some((n, v)) => (n, v.to_string()),
                None => (*part, DEFAULT_VARS[i].to_string()),
            };
            let st: Statistic = name.parse().map_err(|e: EnumError| e.to_string())?;
            Ok((st, var))
        })
        .collect()
}

fn budget_from_env() -> Result<Budget, String> {
    match std::env::var("ALTRUN_BUDGET") {
        Ok(v) => {
            v.trim().parse().map(Budget).map_err(|_| format!("ALTRUN_BUDGET must be a nonnegative integer, got `{v}`"))
        }
        Err(_) => Ok(Budget(DEFAULT_BUDGET)),
    }
}

enum Failure {
    Usage(String),
    SizeLimit(String),
    Verify,
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::SizeLimit { .. } => Failure::SizeLimit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Triangle { family, rows, format } => {
            let t = triangle_by_name(&family, rows).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(match t {
                AnyTriangle::Scalar(t) => render(&t, format),
                AnyTriangle::QPoly(t) => render(&t, format),
            })
        }
        Command::Poly { family, n } => {
            let seq = polyseq(family, n);
            let p = seq.get(n).ok_or_else(|| {
                Failure::Usage(format!("{} is defined from n = {}", family.name(), family.first_index()))
            })?;
            Ok(format!("{p}\n"))
        }
        Command::Dist { class, stat, n } => {
            let stats = parse_stats(&stat).map_err(Failure::Usage)?;
            let budget = budget_from_env().map_err(Failure::Usage)?;
            let refs: Vec<(Statistic, &str)> = stats.iter().map(|(s, v)| (*s, v.as_str())).collect();
            let d = distribution(class, n, &refs, budget)?;
            Ok(format!("{d}\n"))
        }
        Command::Verify { suite, max_n, order } => {
            let budget = budget_from_env().map_err(Failure::Usage)?;
            let report = run_suite(suite, &VerifyParams { max_n, order, budget }).map_err(|e| match e {
                VerifyError::Enumeration(e) => Failure::from(e),
            })?;
            let text = serde_json::to_string_pretty(&report.to_json()).expect("plain JSON") + "\n";
            if report.overall {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::SizeLimit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_SIZE_LIMIT)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
    }
}
