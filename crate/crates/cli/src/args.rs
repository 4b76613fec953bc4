use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpv_core::verify::{DEFAULT_N_MAX, DEFAULT_TRUNCATION};
use qpv_core::Side;

#[derive(Parser, Debug)]
#[command(
    name = "qpv",
    version,
    about = "Exact q-series and coloured partition identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a product expression such as "(-aq;q^2)_inf/(q;q)_inf".
    Expand(ExpandArgs),
    /// List the partitions of a case, or count them with --count-only.
    Enumerate(EnumerateArgs),
    /// Verify a built-in case, `all`, `rr`, or the cases of a case file.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    pub expr: String,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    pub trunc: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Built-in case name, or a case name inside --case-file.
    #[arg(long)]
    pub case: Option<String>,
    /// JSON file with one case or an array of cases.
    #[arg(long, conflicts_with = "matrix")]
    pub case_file: Option<PathBuf>,
    /// Colour system text file (colour names, matrix rows, optional weights).
    #[arg(long, conflicts_with = "case")]
    pub matrix: Option<PathBuf>,
    #[arg(long, default_value = "A", value_parser = parse_side)]
    pub side: Side,
    /// Exact weight.
    #[arg(long, conflicts_with = "nmax")]
    pub n: Option<u32>,
    /// All weights 0..=NMAX.
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Print the table of counts by weight and statistics.
    #[arg(long)]
    pub count_only: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(default_value = "all")]
    pub target: String,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub nmax: u32,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    pub trunc: u32,
    #[arg(long)]
    pub case_file: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_side(s: &str) -> Result<Side, String> {
    s.parse().map_err(|e: qpv_core::Error| e.to_string())
}
