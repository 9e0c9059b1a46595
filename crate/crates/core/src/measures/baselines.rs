//! Classical rank distances extended to top-k lists. Every element missing
//! from a list is treated as sitting at rank `k + 1` (or beyond).

use super::MeasureError;
use crate::list::{decompose, ListError, RankedList};

/// Penalty `p` charged by the extended Kendall tau to pairs whose order
/// cannot be decided because both elements are missing from one list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KendallParams {
    p: f64,
}

impl KendallParams {
    pub fn new(p: f64) -> Result<Self, MeasureError> {
        if (0.0..=1.0).contains(&p) {
            Ok(Self { p })
        } else {
            Err(MeasureError::InvalidPenalty(p))
        }
    }

    pub fn p(self) -> f64 {
        self.p
    }
}

impl Default for KendallParams {
    fn default() -> Self {
        Self { p: 0.5 }
    }
}

fn check_lengths(t1: &RankedList, t2: &RankedList) -> Result<(), ListError> {
    if t1.len() != t2.len() {
        return Err(ListError::LengthMismatch {
            left: t1.len(),
            right: t2.len(),
        });
    }
    Ok(())
}

/// Rank sums over `t1 - t2` and `t2 - t1`, plus the overlap size.
fn exclusive_rank_sums(t1: &RankedList, t2: &RankedList) -> (u64, u64, usize) {
    let r1 = t1.rank_map();
    let r2 = t2.rank_map();
    let only1 = r1.iter().filter(|(l, _)| !r2.contains_key(*l)).map(|(_, &r)| r as u64).sum();
    let only2 = r2.iter().filter(|(l, _)| !r1.contains_key(*l)).map(|(_, &r)| r as u64).sum();
    let m = r1.keys().filter(|l| r2.contains_key(*l)).count();
    (only1, only2, m)
}

/// Extended Spearman footrule:
/// `2(k - m)(k + 1) + sum_overlap |r1 - r2| - sum_{t1 - t2} r1 - sum_{t2 - t1} r2`.
pub fn footrule_ext(t1: &RankedList, t2: &RankedList) -> Result<f64, MeasureError> {
    check_lengths(t1, t2)?;
    let k = t1.len() as u64;
    let r2 = t2.rank_map();
    let displacement: u64 = t1
        .iter()
        .enumerate()
        .filter_map(|(i, l)| r2.get(l).map(|&j| (i + 1).abs_diff(j) as u64))
        .sum();
    let (only1, only2, m) = exclusive_rank_sums(t1, t2);
    let m = m as u64;
    let value = 2 * (k - m) * (k + 1) + displacement - only1 - only2;
    Ok(value as f64)
}

/// Extended Kendall tau with penalty `p`:
/// `(k - m)((2 + p)k - p m + 1 - p) + discordant overlap pairs
///  - sum_{t1 - t2} r1 - sum_{t2 - t1} r2`.
pub fn kendall_ext(t1: &RankedList, t2: &RankedList, params: KendallParams) -> Result<f64, MeasureError> {
    check_lengths(t1, t2)?;
    let k = t1.len() as f64;
    // sigma lists the overlap's first-list positions in second-list order,
    // so its inversions are exactly the discordant pairs
    let discordant = decompose(t1, t2)?.sigma.inversions() as f64;
    let (only1, only2, m) = exclusive_rank_sums(t1, t2);
    let m = m as f64;
    let p = params.p();
    Ok((k - m) * ((2.0 + p) * k - p * m + 1.0 - p) + discordant - only1 as f64 - only2 as f64)
}

/// Canberra distance over the union, `sum |r1 - r2| / (r1 + r2)`, with a
/// missing element ranked `k + 1`.
pub fn canberra_topk(t1: &RankedList, t2: &RankedList) -> Result<f64, MeasureError> {
    check_lengths(t1, t2)?;
    let missing = t1.len() + 1;
    let r2 = t2.rank_map();
    let term = |a: usize, b: usize| a.abs_diff(b) as f64 / (a + b) as f64;
    let mut sum: f64 = t1
        .iter()
        .enumerate()
        .map(|(i, l)| term(i + 1, r2.get(l).copied().unwrap_or(missing)))
        .sum();
    let r1 = t1.rank_map();
    sum += t2
        .iter()
        .enumerate()
        .filter(|(_, l)| !r1.contains_key(l))
        .map(|(j, _)| term(missing, j + 1))
        .sum::<f64>();
    Ok(sum)
}
