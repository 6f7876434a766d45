//! `subspace-cpd`: calibrate and evaluate rank-one covariance change
//! detectors from the command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod table;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use config::{Format, RunConfig};

const THREADS_ENV: &str = "SUBSPACE_CPD_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit status 2.
    Validation(String),
    /// Failure while running; exit status 3.
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Runtime(m) => write!(f, "{m}"),
        }
    }
}

impl From<subspace_cpd::Error> for CliError {
    fn from(e: subspace_cpd::Error) -> Self {
        use subspace_cpd::Error as E;
        match e {
            E::DimensionMismatch { .. }
            | E::InvalidParameter { .. }
            | E::WindowTooSmall { .. }
            | E::OutOfRange(_) => CliError::Validation(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "subspace-cpd", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the threshold that gives a target average run length.
    Calibrate(Common),
    /// Estimate the average run length at given thresholds.
    Arl(Common),
    /// Estimate the worst-case detection delay at given thresholds.
    Edd(Common),
    /// Calibrate several detectors and compare their delays.
    Compare(Common),
    /// Delay as a function of the window length.
    Sweep(Common),
    /// Tracy–Widom threshold approximations for the eigenvalue rule.
    Theory(Common),
    /// Reduce a switching-direction problem by projecting out the old spike.
    Project(Common),
    /// Run one detector over a stream and print its statistic.
    Trace(Common),
}

#[derive(Args)]
struct Common {
    /// JSON file with run settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads [default: $SUBSPACE_CPD_THREADS, else all cores].
    #[arg(long)]
    threads: Option<usize>,
    /// Output file [default: stdout].
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    run: RunConfig,
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| {
                CliError::Validation(format!("{THREADS_ENV}={v:?} is not a thread count"))
            })?),
            Err(_) => None,
        },
    };
    match n {
        Some(0) => Err(CliError::Validation("thread count must be at least 1".into())),
        n => Ok(n),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (name, common) = match cli.command {
        Command::Calibrate(c) => ("calibrate", c),
        Command::Arl(c) => ("arl", c),
        Command::Edd(c) => ("edd", c),
        Command::Compare(c) => ("compare", c),
        Command::Sweep(c) => ("sweep", c),
        Command::Theory(c) => ("theory", c),
        Command::Project(c) => ("project", c),
        Command::Trace(c) => ("trace", c),
    };
    if let Some(n) = thread_count(common.threads)? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Runtime(e.to_string()))?;
    }
    let cfg = RunConfig::merged(common.config.as_deref(), &common.run)?;
    let mut echo = serde_json::to_value(&cfg).expect("config serializes");
    echo.as_object_mut()
        .expect("object")
        .insert("command".into(), Value::from(name));

    let outcome = match name {
        "calibrate" => commands::calibrate(&cfg),
        "arl" => commands::arl(&cfg),
        "edd" => commands::edd(&cfg),
        "compare" => commands::compare_cmd(&cfg),
        "sweep" => commands::sweep(&cfg),
        "theory" => commands::theory(&cfg),
        "project" => commands::project(&cfg, &echo),
        _ => commands::trace_cmd(&cfg, &echo),
    }?;

    match &common.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            outcome.table.write(&mut f, common.format, echo)?;
            f.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            outcome.table.write(&mut lock, common.format, echo)?;
            lock.flush()?;
        }
    }
    match outcome.censoring {
        Some(msg) => Err(CliError::Runtime(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
