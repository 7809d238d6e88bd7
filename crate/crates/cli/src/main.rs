//! `maxden`: maximal denumerants of numerical semigroups from the shell.
//!
//! Exit codes: 0 success, 2 input error, 3 method precondition failed,
//! 4 internal consistency failure.

mod commands;
mod render;

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxden_core::Error;

#[derive(Parser)]
#[command(name = "maxden", version, about = "Maximal denumerants of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; defaults to text on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Maximum line width for horizontal text tables.
    #[arg(long, global = true, env = "MAXDEN_WIDTH", default_value_t = 100)]
    width: usize,

    /// Worker threads for the residue sweep of the general method.
    #[arg(long, global = true, env = "MAXDEN_WORKERS", default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal denumerant of the semigroup.
    Dmax {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Cross-check the answer against the general method.
        #[arg(long)]
        verify: bool,
    },
    /// Adjustment scan and R-sets of one residue class.
    Table {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        residue: i64,
    },
    /// Additive / symmetric-blowup / supersymmetric / arithmetic-sequence flags.
    Classify {
        #[command(flatten)]
        gens: Gens,
    },
    /// Apéry set with respect to an element (the multiplicity by default).
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, short = 'u')]
        element: Option<i64>,
    },
    /// Blowup semigroup and its distinguished generating set.
    Blowup {
        #[command(flatten)]
        gens: Gens,
    },
    /// Factorizations of a target over the generators, taken as given.
    Factorizations {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        target: i64,
        /// Keep only factorizations of maximal length.
        #[arg(long)]
        maximal_only: bool,
    },
}

#[derive(Args)]
struct Gens {
    /// Generators, as positive integers.
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
    generators: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    General,
    Additive,
    SymmetricBlowup,
    Ed3,
    Ed3Ceiling,
    Ed3Bezout,
    Arithmetic,
    Oracle,
}

pub struct Settings {
    pub format: Format,
    pub width: usize,
    pub workers: usize,
}

/// Errors surfaced by a command, already classified by exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let msg = err.to_string();
        match err {
            Error::EmptyInput
            | Error::GcdNotOne(_)
            | Error::NonPositiveEntry(_)
            | Error::DuplicateEntry(_)
            | Error::TooLarge(_)
            | Error::NotAMember(_)
            | Error::NotRepresentable(_)
            | Error::InvalidResidue { .. }
            | Error::InvalidParameters(_) => Failure::Input(msg),
            Error::NotAdditive | Error::PreconditionFailed(_) | Error::BoundTooSmall { .. } => {
                Failure::Precondition(msg)
            }
            Error::Inconsistent(_) => Failure::Internal(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        format: cli.format.unwrap_or(if std::io::stdout().is_terminal() {
            Format::Text
        } else {
            Format::Json
        }),
        width: cli.width,
        workers: cli.workers.max(1),
    };

    let outcome = match &cli.command {
        Command::Dmax {
            gens,
            method,
            verify,
        } => commands::dmax(&gens.generators, *method, *verify, &settings),
        Command::Table { gens, residue } => commands::table(&gens.generators, *residue, &settings),
        Command::Classify { gens } => commands::classify(&gens.generators, &settings),
        Command::Apery { gens, element } => commands::apery(&gens.generators, *element, &settings),
        Command::Blowup { gens } => commands::blowup(&gens.generators, &settings),
        Command::Factorizations {
            gens,
            target,
            maximal_only,
        } => commands::factorizations(&gens.generators, *target, *maximal_only, &settings),
    };

    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
