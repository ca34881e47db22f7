//! Command-line flags.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyckgen::genfun::Ceiling;
use dyckgen::ConventionTag;

#[derive(Debug, Parser)]
#[command(
    name = "dyckgen",
    version,
    about = "Generating functions for height-restricted Dyck paths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand the length-and-area generating function.
    Genfun(GenfunArgs),
    /// Enumerate paths and print their counts.
    Table(TableArgs),
    /// Coefficients of the logarithm in powers of z.
    Cluster(ClusterArgs),
    /// Check identities exactly and report mismatches.
    Verify(VerifyArgs),
}

/// `--k` accepts an integer or `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CeilingArg(pub Ceiling);

impl FromStr for CeilingArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(CeilingArg(Ceiling::Unbounded));
        }
        s.parse::<usize>()
            .map(|k| CeilingArg(Ceiling::Finite(k)))
            .map_err(|_| format!("expected a non-negative integer or `inf`, got `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Determinant,
    ContinuedFraction,
    ClusterExp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::ContinuedFraction => "continued-fraction",
            Method::ClusterExp => "cluster-exp",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct PathArgs {
    /// Ceiling height, or `inf`.
    #[arg(long)]
    pub k: CeilingArg,
    /// Starting height.
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Ending height.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Largest path length (in steps).
    #[arg(long)]
    pub max_len: usize,
    #[arg(long, default_value = "step-plaquette", value_parser = parse_convention)]
    pub convention: ConventionTag,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_convention(s: &str) -> Result<ConventionTag, String> {
    s.parse()
}

#[derive(Clone, Debug, Args)]
pub struct GenfunArgs {
    #[command(flatten)]
    pub path: PathArgs,
    /// Mark touchdowns with t.
    #[arg(long)]
    pub touchdown: bool,
    #[arg(long, value_enum, default_value_t = Method::Determinant)]
    pub method: Method,
    /// Recompute with every applicable method and exit 3 on disagreement.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub path: PathArgs,
    /// Keep touchdown counts separate.
    #[arg(long)]
    pub touchdowns: bool,
}

#[derive(Clone, Debug, Args)]
pub struct ClusterArgs {
    /// Ceiling height, or `inf`.
    #[arg(long)]
    pub k: CeilingArg,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Highest power of z.
    #[arg(long)]
    pub a_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub k_max: usize,
    #[arg(long, default_value_t = 12)]
    pub len_max: usize,
    /// determinants, genfun, duality, recursions, cluster, touchdown or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Print passing checks too.
    #[arg(long)]
    pub verbose: bool,
}
