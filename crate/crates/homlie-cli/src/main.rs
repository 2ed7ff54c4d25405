//! Command-line front end: parse definition files, run computations, emit
//! deterministic reports.
//!
//! Exit codes: 0 all verdicts pass; 1 golden-file comparison mismatch;
//! 2 a published expectation failed; 3 a mathematical hypothesis or axiom
//! check failed; 4 input error; 5 a verified theorem failed to hold
//! (indicates a bug).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "homlie",
    about = "Exact-arithmetic Hom-Lie algebra computations: series, tensor products, central extensions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Also write the report to this path
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,

    /// Series iteration cap (default: dimension + 1)
    #[arg(long, global = true)]
    max_iter: Option<usize>,

    /// Engel classification bound (default: dimension + 1)
    #[arg(long, global = true)]
    engel_bound: Option<usize>,

    /// Compare the comparable report body against a golden file
    #[arg(long, global = true)]
    compare: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every algebra, action and declared pair in a file
    Validate { file: PathBuf },
    /// Report center, twist properties, series, classes and perfectness
    Info { file: PathBuf, algebra: String },
    /// Build the non-abelian tensor product of two algebras from the file
    /// (requires action blocks in both directions)
    Tensor {
        file: PathBuf,
        m: String,
        n: String,
    },
    /// Build the universal central extension of a perfect algebra
    Uce { file: PathBuf, algebra: String },
    /// Run a named invariant suite (or "all") over the file contents
    Check { file: PathBuf, property: String },
    /// Work with the built-in fixture catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List fixture names
    List,
    /// Print a fixture's definition document and expected claims
    Show { name: String },
    /// Replay a fixture's expected claims ("all" runs the whole roster)
    Run { name: String },
}

/// Severity-ordered exit status; the worst one wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    CompareMismatch = 1,
    PublishedFail = 2,
    Hypothesis = 3,
    Input = 4,
    Internal = 5,
}

impl Status {
    fn code(self) -> u8 {
        self as u8
    }

    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

pub fn status_of_error(e: &homlie::Error) -> Status {
    use homlie::Error as E;
    match e {
        E::DimensionMismatch { .. } | E::ParseRational { .. } | E::UnknownFixture { .. } => {
            Status::Input
        }
        E::InvariantViolation { .. } => Status::Internal,
        _ => Status::Hypothesis,
    }
}

pub struct Options {
    pub max_iter: Option<usize>,
    pub engel_bound: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = Options {
        max_iter: cli.max_iter,
        engel_bound: cli.engel_bound,
    };
    let outcome = match &cli.command {
        Command::Validate { file } => commands::cmd_validate(file, &options),
        Command::Info { file, algebra } => commands::cmd_info(file, algebra, &options),
        Command::Tensor { file, m, n } => commands::cmd_tensor(file, m, n, &options),
        Command::Uce { file, algebra } => commands::cmd_uce(file, algebra, &options),
        Command::Check { file, property } => commands::cmd_check(file, property, &options),
        Command::Catalog { action } => match action {
            CatalogCommand::List => commands::cmd_catalog_list(),
            CatalogCommand::Show { name } => commands::cmd_catalog_show(name),
            CatalogCommand::Run { name } => commands::cmd_catalog_run(name),
        },
    };
    let (report, mut status) = match outcome {
        Ok(pair) => pair,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(Status::Input.code());
        }
    };
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Machine => Format::Machine,
    };
    let rendered = report.render(format);
    print!("{rendered}");
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(Status::Input.code());
        }
    }
    if let Some(golden_path) = &cli.compare {
        match std::fs::read_to_string(golden_path) {
            Ok(golden) => {
                let golden_body = report::strip_header(&golden);
                let body = report.comparable_body();
                if golden_body != body {
                    eprintln!(
                        "comparison mismatch against {} ({} vs {} comparable bytes)",
                        golden_path.display(),
                        golden_body.len(),
                        body.len()
                    );
                    status = status.worst(Status::CompareMismatch);
                }
            }
            Err(e) => {
                eprintln!("error: cannot read golden file {}: {e}", golden_path.display());
                return ExitCode::from(Status::Input.code());
            }
        }
    }
    ExitCode::from(status.code())
}
