//! `folex`: exact computations with foliations and distributions on
//! projective hypersurfaces.

mod commands;
mod corpus;
mod report;

use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use commands::{CliError, Command};

#[derive(Parser, Debug)]
#[command(name = "folex", version, about)]
#[command(after_help = "Set FOLEX_THREADS to cap parallelism. Exit codes: 0 ok, 1 verdict mismatch, 2 usage error.")]
pub struct Cli {
    /// Render the report as a table instead of JSON
    #[arg(long, global = true)]
    pub human: bool,
    /// Exit with status 1 unless the reported verdict equals VERDICT
    #[arg(long, global = true, value_name = "VERDICT")]
    pub assert: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

/// Result of one invocation, before anything is printed.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// A report; `failed` is set when `--assert` did not match.
    Report { value: Value, failed: Option<String> },
    /// Usage, parse or input error.
    Usage(String),
}

impl Outcome {
    pub fn code(&self) -> u8 {
        match self {
            Outcome::Report { failed: None, .. } => 0,
            Outcome::Report { failed: Some(_), .. } => 1,
            Outcome::Usage(_) => 2,
        }
    }
}

/// Runs a parsed non-corpus command and applies `--assert`.
pub fn evaluate(cli: &Cli) -> Outcome {
    match commands::execute(&cli.command) {
        Err(CliError(msg)) => Outcome::Usage(msg),
        Ok(value) => {
            let failed = cli.assert.as_ref().and_then(|want| {
                let got = value.get("verdict").and_then(Value::as_str).unwrap_or("");
                (got != want).then(|| format!("verdict {got:?} does not match asserted {want:?}"))
            });
            Outcome::Report { value, failed }
        }
    }
}

fn render(value: &Value, human: bool) -> String {
    if human {
        report::human(value)
    } else {
        let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
        s.push('\n');
        s
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("FOLEX_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("FOLEX_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are reported as errors by clap but exit 0
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let outcome = match &cli.command {
        Command::Corpus(args) => corpus::run(args, cli.assert.as_deref()),
        _ => evaluate(&cli),
    };
    match &outcome {
        Outcome::Report { value, failed } => {
            print!("{}", render(value, cli.human));
            if let Some(msg) = failed {
                eprintln!("assertion failed: {msg}");
            }
        }
        Outcome::Usage(msg) => eprintln!("error: {msg}"),
    }
    ExitCode::from(outcome.code())
}
