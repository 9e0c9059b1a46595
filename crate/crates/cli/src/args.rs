use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use topk_info::measures::{B2Scheme, KendallParams, MeasureOptions, Step6Scheme};
use topk_info::{DomainSpec, MeasureError};

#[derive(Debug, Parser)]
#[command(name = "topk-info", version, about = "Compare top-k ranked lists by information content")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure one ordered pair of lists, with a per-step breakdown.
    Info(InfoArgs),
    /// Measure a pair of lists over a range of k.
    Sweep(SweepArgs),
    /// Score every permutation of n elements against the identity.
    Permscan(PermscanArgs),
    /// Pairwise matrix of one measure over several lists.
    Matrix(MatrixArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum B2Arg {
    Optimal,
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Step6Arg {
    Sequential,
    PaperLiteral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureKind {
    Info,
    Footrule,
    Kendall,
    Canberra,
}

/// Flags shared by every command that evaluates the measure.
#[derive(Debug, Clone, Args)]
pub struct MeasureFlags {
    /// Size of the element domain, when known to both parties.
    #[arg(long, value_name = "N", conflicts_with = "unknown_domain")]
    pub domain_size: Option<u64>,
    /// Treat the domain as unknown (the default).
    #[arg(long)]
    pub unknown_domain: bool,
    /// Code used for the overlap positions in the second list.
    #[arg(long, value_enum, default_value = "optimal")]
    pub b2: B2Arg,
    /// Code used for labels held only by the second list (known domain).
    #[arg(long, value_enum, default_value = "sequential")]
    pub step6: Step6Arg,
    /// Penalty p of the extended Kendall distance, in [0, 1].
    #[arg(long, default_value_t = 0.5)]
    pub kendall_p: f64,
}

impl MeasureFlags {
    pub fn domain(&self) -> DomainSpec {
        match self.domain_size {
            Some(n) => DomainSpec::Known(n),
            None => DomainSpec::Unknown,
        }
    }

    pub fn options(&self) -> MeasureOptions {
        MeasureOptions {
            b2_scheme: match self.b2 {
                B2Arg::Optimal => B2Scheme::Optimal,
                B2Arg::Adaptive => B2Scheme::Adaptive,
            },
            step6_scheme: match self.step6 {
                Step6Arg::Sequential => Step6Scheme::Sequential,
                Step6Arg::PaperLiteral => Step6Scheme::PaperLiteral,
            },
        }
    }

    pub fn kendall(&self) -> Result<KendallParams, MeasureError> {
        KendallParams::new(self.kendall_p)
    }
}

#[derive(Debug, Clone, Args)]
pub struct InfoArgs {
    pub file_a: PathBuf,
    pub file_b: PathBuf,
    /// Compare the top k of each list (default: the shorter list's length).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub flags: MeasureFlags,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    pub file_a: PathBuf,
    pub file_b: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub k_min: usize,
    /// Largest k (default: the shorter list's length).
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub step: usize,
    #[command(flatten)]
    pub flags: MeasureFlags,
}

#[derive(Debug, Clone, Args)]
pub struct PermscanArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    #[arg(required = true, num_args = 2..)]
    pub files: Vec<PathBuf>,
    /// Compare the top k of each list (default: the shortest list's length).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "info")]
    pub measure: MeasureKind,
    #[command(flatten)]
    pub flags: MeasureFlags,
}
