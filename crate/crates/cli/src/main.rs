//! `primdec`: search, verification, certificates and self-tests for additive
//! decompositions of the primitive elements of `F_p`.
//!
//! Exit status: 0 on success, 2 when a verification, certificate or identity
//! check fails, 1 on usage and resource errors.

mod commands;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "primdec",
    version,
    about = "Additive decompositions of primitive roots modulo p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate normalized B of size k and test A_max + B = P_p.
    Search(SearchArgs),
    /// Check A + B = P_p.
    Verify(VerifyArgs),
    /// Verify and attach the H- and r-certificates and bound reports.
    Certify(PairArgs),
    /// Numeric side of a nonexistence statement at p.
    Bounds(BoundsArgs),
    /// Seeded self-test of a correlation identity.
    Identity(IdentityArgs),
    /// Seeded Weil-bound checks on random admissible instances.
    Weil(WeilArgs),
    /// Evaluate one of the three character-sum families.
    Charsum(CharsumArgs),
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub k: usize,
    /// Largest allowed element of B (default p - 1).
    #[arg(long)]
    pub span: Option<u32>,
    /// Wall-clock budget; checked between batches of candidates.
    #[arg(long = "budget-ms", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_ms: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub p: u64,
    /// Comma-separated residues.
    #[arg(long, value_delimiter = ',', required = true)]
    pub a: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub b: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Report the translate with min B = 0.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    Shparlinski,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// |A|.
    #[arg(long)]
    pub a: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Shkredov,
    Inner,
    Quadruple,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long)]
    pub p: u64,
    /// Tensor order for the Shkredov identity (default 2).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct WeilArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long = "max-degree", default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_degree: u64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("family").required(true).args(["sum_a", "sum_b", "sum_c"])))]
pub struct CharsumArgs {
    #[arg(long)]
    pub p: u64,
    /// Order of the character; must divide p - 1.
    #[arg(long)]
    pub d: u64,
    /// Exponent, a unit modulo d.
    #[arg(long)]
    pub r: u64,
    #[arg(long = "sumA", requires = "b1")]
    pub sum_a: bool,
    #[arg(long = "sumB", requires = "shifts")]
    pub sum_b: bool,
    #[arg(long = "sumC", requires_all = ["b1", "shifts"])]
    pub sum_c: bool,
    #[arg(long)]
    pub b1: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub shifts: Option<Vec<u64>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::CheckFailed) => ExitCode::from(2),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
