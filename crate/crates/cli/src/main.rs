use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

mod run;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Check,
    Build,
    Derive,
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Algebra,
    Rep,
    Prelie,
    MatchedPair,
    Manin,
    Double,
    Equivalence,
    OOperator,
    Chybe,
    Residual,
    Symplectic,
    Metric,
    Derivations,
    PhaseSpace,
    Nilpotent,
    Twist,
    Semidirect,
    Subadjacent,
    CompatiblePrelie,
    Cobracket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Exact checks and constructions for 3-Hom-Lie algebras.
///
/// Exit status: 0 when every clause passes, 1 when a check fails (the
/// report carries the first witness), 2 on input or precondition errors.
#[derive(Debug, Parser)]
#[command(name = "trihom", version)]
pub struct Cli {
    pub verb: Verb,
    pub target: Target,
    /// Input artifacts; see `run::usage` for the expected kinds per target.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Output directory for built artifacts and report files.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation degree for `build nilpotent`.
    #[arg(long, default_value_t = 2)]
    pub steps: usize,
    /// `build twist` composes the bracket with the map instead of a Yau twist.
    #[arg(long)]
    pub composition: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = run::execute(&cli);
    print!("{text}");
    ExitCode::from(code)
}
