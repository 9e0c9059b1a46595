use std::io;
use std::path::PathBuf;

use thiserror::Error;
use topk_info::{ListError, MeasureError};

/// Exit status for malformed input.
pub const EXIT_PARSE: i32 = 2;
/// Exit status for size or domain violations.
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    List { path: PathBuf, source: ListError },
    #[error("{path}: label at rank {rank} contains a comma and cannot be written as CSV")]
    CommaInLabel { path: PathBuf, rank: usize },
    #[error("file name {0:?} contains a comma and cannot be written as CSV")]
    CommaInName(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("k range {k_min}..={k_max} step {step} is empty or invalid")]
    KRange { k_min: usize, k_max: usize, step: usize },
    #[error("n = {0} is outside 2..=10")]
    NOutOfRange(usize),
    #[error("at least two lists are required")]
    TooFewLists,
    #[error(transparent)]
    Output(#[from] io::Error),
}

impl From<ListError> for CliError {
    fn from(e: ListError) -> Self {
        CliError::Measure(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::CommaInLabel { .. } | CliError::CommaInName(_) => EXIT_PARSE,
            CliError::List { source, .. } => list_exit_code(source),
            CliError::Measure(MeasureError::List(e)) => list_exit_code(e),
            CliError::Measure(MeasureError::InvalidPenalty(_)) => EXIT_PARSE,
            CliError::Measure(MeasureError::DomainTooSmall { .. }) => EXIT_DOMAIN,
            CliError::KRange { .. } | CliError::NOutOfRange(_) | CliError::TooFewLists => EXIT_DOMAIN,
            CliError::Output(_) => 1,
        }
    }
}

fn list_exit_code(e: &ListError) -> i32 {
    match e {
        ListError::EmptyInput | ListError::DuplicateLabel { .. } | ListError::InvalidLabel { .. } => EXIT_PARSE,
        ListError::KOutOfRange { .. } | ListError::LengthMismatch { .. } => EXIT_DOMAIN,
    }
}
