//! Ranked lists, truncation to the top k, and the overlap decomposition of a
//! pair of lists that every measure is built from.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use thiserror::Error;

use crate::codes::BitMask;
use crate::factoradic::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("input contains no labels")]
    EmptyInput,
    #[error("label {label:?} appears at rank {first_rank} and again at rank {second_rank}")]
    DuplicateLabel {
        label: String,
        first_rank: usize,
        second_rank: usize,
    },
    #[error("label at rank {rank} is empty or spans several lines")]
    InvalidLabel { rank: usize },
    #[error("k = {k} is outside 1..={len}")]
    KOutOfRange { k: usize, len: usize },
    #[error("lists have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

/// An ordered sequence of distinct labels. The rank of a label is its
/// 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedList {
    labels: Vec<String>,
}

impl RankedList {
    /// Builds a list from labels in rank order.
    ///
    /// Labels are taken verbatim (no trimming) and compared byte for byte.
    pub fn new<I, S>(labels: I) -> Result<Self, ListError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(ListError::EmptyInput);
        }
        Self::check(&labels)?;
        Ok(Self { labels })
    }

    fn check(labels: &[String]) -> Result<(), ListError> {
        let mut seen: HashMap<&str, usize> = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains('\n') {
                return Err(ListError::InvalidLabel { rank: i + 1 });
            }
            if let Some(&first) = seen.get(label.as_str()) {
                return Err(ListError::DuplicateLabel {
                    label: label.clone(),
                    first_rank: first + 1,
                    second_rank: i + 1,
                });
            }
            seen.insert(label.as_str(), i);
        }
        Ok(())
    }

    /// Number of labels, `k`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a ranked list holds at least one label.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        self.labels.iter().map(String::as_str)
    }

    /// 1-based rank of `label`, if present. Linear scan.
    pub fn rank_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label).map(|i| i + 1)
    }

    /// Map from label to 1-based rank.
    pub fn rank_map(&self) -> HashMap<&str, usize> {
        self.iter().enumerate().map(|(i, l)| (l, i + 1)).collect()
    }

    pub fn reversed(&self) -> Self {
        Self {
            labels: self.labels.iter().rev().cloned().collect(),
        }
    }
}

impl fmt::Display for RankedList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for label in &self.labels {
            writeln!(f, "{label}")?;
        }
        Ok(())
    }
}

/// Whether the size of the element domain is known to both parties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainSpec {
    Known(u64),
    Unknown,
}

/// Parses a list document: one label per line, rank = line number after
/// blank lines are dropped. Each line is trimmed of surrounding whitespace.
pub fn parse_list(text: &str) -> Result<RankedList, ListError> {
    let labels: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(ToString::to_string)
        .collect();
    RankedList::new(labels)
}

/// The first `k` labels of `list`.
pub fn top_k(list: &RankedList, k: usize) -> Result<RankedList, ListError> {
    if k == 0 || k > list.len() {
        return Err(ListError::KOutOfRange { k, len: list.len() });
    }
    Ok(RankedList {
        labels: list.labels[..k].to_vec(),
    })
}

/// What the second list shares with the first, and what it does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapDecomposition<'a> {
    /// Bit `i` set iff the `i`-th label of the first list occurs in the second.
    pub b1: BitMask,
    /// Bit `j` set iff the `j`-th label of the second list occurs in the first.
    pub b2: BitMask,
    /// Size of the overlap.
    pub m: usize,
    /// `sigma(j)` is the position, counted among the common labels in
    /// first-list order, of the `j`-th common label met while scanning the
    /// second list.
    pub sigma: Permutation,
    /// Labels of the second list absent from the first, in second-list order.
    pub tau2_only: Vec<&'a str>,
}

impl OverlapDecomposition<'_> {
    /// Size of the union of the two lists.
    pub fn union_len(&self) -> usize {
        self.b1.len() + self.tau2_only.len()
    }

    /// Rebuilds the second list from the first list and this decomposition.
    pub fn reconstruct_second(&self, t1: &RankedList) -> Vec<String> {
        let commons: Vec<&str> = t1
            .iter()
            .zip(self.b1.iter())
            .filter_map(|(l, set)| set.then_some(l))
            .collect();
        let mut perm = self.sigma.as_slice().iter();
        let mut only = self.tau2_only.iter();
        self.b2
            .iter()
            .map(|set| {
                let label = if set {
                    commons[*perm.next().expect("sigma shorter than b2 popcount") as usize - 1]
                } else {
                    only.next().expect("tau2_only shorter than b2 zeros")
                };
                label.to_string()
            })
            .collect()
    }
}

/// Splits `t2` into what it shares with `t1` and what it does not.
pub fn decompose<'a>(
    t1: &RankedList,
    t2: &'a RankedList,
) -> Result<OverlapDecomposition<'a>, ListError> {
    if t1.len() != t2.len() {
        return Err(ListError::LengthMismatch {
            left: t1.len(),
            right: t2.len(),
        });
    }
    let index: HashMap<&str, u32> = t1.iter().zip(0u32..).collect();

    // for each t2 label, the 0-based t1 index of its twin, if any
    let mut b1 = vec![false; t1.len()];
    let twins: Vec<Option<u32>> = t2
        .iter()
        .map(|label| {
            let twin = index.get(label).copied();
            if let Some(i) = twin {
                b1[i as usize] = true;
            }
            twin
        })
        .collect();

    // 1-based position of each common label among the commons, in t1 order
    let mut common_order = vec![0u32; t1.len()];
    let mut m = 0u32;
    for (slot, _) in common_order.iter_mut().zip(&b1).filter(|(_, &shared)| shared) {
        m += 1;
        *slot = m;
    }

    let mut b2 = Vec::with_capacity(t2.len());
    let mut sigma = Vec::with_capacity(m as usize);
    let mut tau2_only = Vec::with_capacity(t2.len() - m as usize);
    for (label, twin) in t2.iter().zip(twins) {
        b2.push(twin.is_some());
        match twin {
            Some(i) => sigma.push(common_order[i as usize]),
            None => tau2_only.push(label),
        }
    }

    Ok(OverlapDecomposition {
        b1: BitMask::from(b1),
        b2: BitMask::from(b2),
        m: m as usize,
        sigma: Permutation::from_one_based_unchecked(sigma),
        tau2_only,
    })
}
