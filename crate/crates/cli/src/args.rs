use clap::{Args, Parser, Subcommand, ValueEnum};
use diagzeta::Family;

#[derive(Debug, Parser)]
#[command(name = "diagzeta", version, about = "Multiple zeta and t-values at identical arguments")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate numerically by every method and report pairwise deltas.
    Eval(EvalArgs),
    /// Exact value at an even positive, zero or negative integer.
    Exact(ExactArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Pole table of the depth-r zeta function.
    Poles(PolesArgs),
    /// Values over a range of depths (CSV-friendly).
    Table(TableArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: diagzeta::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, default_value = "zeta", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub depth: usize,
    /// Real argument s.
    #[arg(long, allow_hyphen_values = true)]
    pub arg: String,
    /// Also sum the first N series terms (needs s > 1).
    #[arg(long)]
    pub oracle_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long, default_value = "zeta", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub depth: usize,
    /// Integer argument s.
    #[arg(long, allow_hyphen_values = true)]
    pub arg: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FunctionalRelation,
    Merca,
    Harmonic,
    ThreeWay,
    SpecialValues,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub max_depth: u32,
    #[arg(long, default_value_t = 10)]
    pub max_k: u32,
    /// Absolute residual threshold replacing the built-in numeric tolerances.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long, default_value_t = 5000)]
    pub oracle_n: usize,
}

#[derive(Debug, Args)]
pub struct PolesArgs {
    #[arg(long)]
    pub depth: u32,
    /// Relative final-gap threshold replacing the per-order table.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Restrict to one family (default: all four).
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    #[arg(long, default_value_t = 6)]
    pub max_depth: usize,
    /// Argument s; integers with a closed form are evaluated exactly.
    #[arg(long, allow_hyphen_values = true)]
    pub arg: String,
    /// Add oracle rows summing N series terms (needs s > 1).
    #[arg(long)]
    pub oracle_n: Option<usize>,
}
