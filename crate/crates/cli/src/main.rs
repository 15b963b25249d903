//! `ckcoh`: build Cayley-Klein quasi-unitary algebras, compute their second
//! cohomology and classify central extensions.
//!
//! Exit status: 0 on success, 1 when a verification or golden comparison
//! fails, 2 for invalid input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use ckcoh_core::ck::Family;
use ckcoh_core::OmegaVector;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "ckcoh",
    version,
    about = "Second cohomology of the CK quasi-unitary algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// `su` or `u`.
    family: Family,
    /// Rank N (the algebra acts on N+1 dimensional space).
    n: usize,
    /// Comma separated ω_1..ω_N: signs `+`, `-`, `0` or rationals `a/b`.
    #[arg(allow_hyphen_values = true)]
    omega: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure constants of su_ω(N+1) or u_ω(N+1) and a Jacobi check.
    Algebra {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// dim Z², B², H² from the generic solver, compared with the closed formula.
    H2 {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Type I/II/III classification of the central extensions.
    Classify {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Representative cocycles of H², entry by entry.
    Rep {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Effect of setting ω_K to zero.
    Contract {
        #[command(flatten)]
        target: Target,
        /// The parameter to contract, 1..=N.
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Extension table over all sign vectors of rank N.
    Table {
        family: Family,
        n: usize,
        /// Compare the text table byte for byte with this file.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Solver against formula for every sign vector, N in an inclusive range `a..b`.
    Sweep {
        family: Family,
        range: String,
        /// Permit N > 6.
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        output: Output,
    },
}

/// Failure classes, mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<ckcoh_core::Error> for Failure {
    fn from(e: ckcoh_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl Target {
    pub fn omega(&self) -> Result<OmegaVector, Failure> {
        let list = self
            .omega
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')');
        let w = OmegaVector::parse(list)?;
        if self.n == 0 {
            return Err(Failure::Usage("N must be positive".into()));
        }
        if w.n() != self.n {
            return Err(Failure::Usage(format!(
                "omega has {} entries but N = {}",
                w.n(),
                self.n
            )));
        }
        Ok(w)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Algebra { target, output } => commands::algebra(&target, &output),
        Command::H2 { target, output } => commands::h2(&target, &output),
        Command::Classify { target, output } => commands::classify(&target, &output),
        Command::Rep { target, output } => commands::rep(&target, &output),
        Command::Contract {
            target,
            index,
            output,
        } => commands::contract(&target, index, &output),
        Command::Table {
            family,
            n,
            golden,
            output,
        } => commands::table(family, n, golden.as_deref(), &output),
        Command::Sweep {
            family,
            range,
            allow_large,
            output,
        } => commands::sweep(family, &range, allow_large, &output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
