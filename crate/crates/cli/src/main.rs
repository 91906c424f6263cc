//! `expolys`: tables of the families, generating-function coefficients, and
//! identity verification over parameter grids.

mod config;
mod series;
mod table;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expolys_core::{Error, Result};

use config::Settings;

#[derive(Parser, Debug)]
#[command(
    name = "expolys",
    version,
    about = "Exact special-number families and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n -> value rows for one family.
    Table(table::TableArgs),
    /// Check registered identities over a parameter grid.
    Verify(verify::VerifyArgs),
    /// Print generating-function coefficients and EGF values.
    Series(series::SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

/// Flags shared by every subcommand.
#[derive(Args, Debug)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (verify only); defaults to the number of CPUs.
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat `key = value` file; keys are long flag names.
    #[arg(long)]
    config: Option<PathBuf>,
}

pub const COMMON_KEYS: [&str; 2] = ["format", "jobs"];

/// Common flags merged with the config file.
pub struct Resolved {
    pub format: Format,
    pub jobs: usize,
    pub settings: Settings,
}

impl Common {
    pub fn resolve(&self, keys: &[&str]) -> Result<Resolved> {
        let allowed: Vec<&str> = COMMON_KEYS.iter().chain(keys).copied().collect();
        let settings = Settings::load(self.config.as_deref(), &allowed)?;
        let format = settings
            .value(self.format, "format")?
            .unwrap_or(Format::Plain);
        let jobs = match settings.value(self.jobs, "jobs")? {
            Some(0) => return Err(Error::usage("jobs must be at least 1")),
            Some(j) => j,
            None => std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        };
        Ok(Resolved {
            format,
            jobs,
            settings,
        })
    }
}

/// Text for stdout and stderr plus the exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    // Writing to a Vec cannot fail.
    w.write_record(fields).expect("in-memory csv");
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 fields")
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Table(a) => table::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Series(a) => series::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // A closed pipe is not worth a panic.
            let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            let kind = match e {
                Error::Domain(_) => "domain error",
                Error::Usage(_) => "usage error",
            };
            eprintln!("expolys: {kind}: {e}");
            ExitCode::from(2)
        }
    }
}
