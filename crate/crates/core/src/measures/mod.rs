//! The information measure for a pair of top-k lists and the classical
//! rank-distance baselines.

mod baselines;
mod info;
mod perm;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::list::{DomainSpec, ListError};

pub use baselines::{canberra_topk, footrule_ext, kendall_ext, KendallParams};
pub use info::{asymmetry, info_case1, info_case2, info_cost, info_total, serialize_labels};
pub use perm::{perm_measures, PermMeasures};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error(transparent)]
    List(#[from] ListError),
    #[error("domain of {domain} elements cannot hold a union of {union} labels")]
    DomainTooSmall { domain: u64, union: usize },
    #[error("Kendall penalty p = {0} is outside [0, 1]")]
    InvalidPenalty(f64),
}

/// How the positions of the overlap in the second list are stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum B2Scheme {
    /// Uniform over the `C(k, m)` possible masks.
    #[default]
    Optimal,
    /// Adaptive code over columns where the two masks agree or differ.
    Adaptive,
}

/// How the labels held only by the second list are stated when the domain
/// is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Step6Scheme {
    /// The `j`-th such label is one of the `N - k - (j - 1)` labels not yet
    /// named.
    #[default]
    Sequential,
    /// Each such label costs `log2(N - |union|)`.
    PaperLiteral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MeasureOptions {
    pub b2_scheme: B2Scheme,
    pub step6_scheme: Step6Scheme,
}

/// One component of the two-part message.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `k` under a known domain.
    Size,
    /// The first list as a k-permutation of the domain.
    Tau1Labels,
    /// Which labels of the first list overlap.
    B1,
    /// Where the overlap sits in the second list.
    B2,
    /// Order of the overlap within the second list.
    Perm,
    /// Labels held only by the second list, known domain.
    Tau2Only,
    /// Size of the union, unknown domain.
    UnionSize,
    /// `k`, unknown domain.
    KSize,
    /// Compressed labels of the union, unknown domain.
    LzwLabels,
}

impl Step {
    pub const KNOWN: [Step; 6] = [Step::Size, Step::Tau1Labels, Step::B1, Step::B2, Step::Perm, Step::Tau2Only];
    pub const UNKNOWN: [Step; 6] = [Step::UnionSize, Step::KSize, Step::LzwLabels, Step::B1, Step::B2, Step::Perm];

    pub fn as_str(self) -> &'static str {
        match self {
            Step::Size => "size",
            Step::Tau1Labels => "tau1_labels",
            Step::B1 => "b1",
            Step::B2 => "b2",
            Step::Perm => "perm",
            Step::Tau2Only => "tau2_only",
            Step::UnionSize => "union_size",
            Step::KSize => "k_size",
            Step::LzwLabels => "lzw_labels",
        }
    }

    /// Steps reported for `mode`, in message order.
    pub fn for_mode(mode: DomainSpec) -> &'static [Step; 6] {
        match mode {
            DomainSpec::Known(_) => &Self::KNOWN,
            DomainSpec::Unknown => &Self::UNKNOWN,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Bit counts for one ordered pair of lists.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub mode: DomainSpec,
    pub k: usize,
    /// Size of the overlap.
    pub m: usize,
    /// Per-step costs in message order.
    pub step_bits: Vec<(Step, f64)>,
    pub i_tau1: f64,
    pub i_tau2_given_tau1: f64,
    /// Cost of stating both lists independently.
    pub null_bits: f64,
    /// `min(null_bits, i_tau1 + i_tau2_given_tau1)`.
    pub total_bits: f64,
    pub used_null: bool,
}

impl MeasureReport {
    pub fn step(&self, step: Step) -> Option<f64> {
        self.step_bits
            .iter()
            .find_map(|&(s, bits)| (s == step).then_some(bits))
    }

    /// Length of the conditional two-part message.
    pub fn two_part_bits(&self) -> f64 {
        self.i_tau1 + self.i_tau2_given_tau1
    }
}
