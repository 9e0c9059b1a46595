//! Code-length calculators.
//!
//! Every length here is an ideal (arithmetic-coding) length in bits: the
//! negative base-2 logarithm of the probability the code assigns to the
//! message. No bitstreams are produced.

use alloc::vec::Vec;
use core::f64::consts::LN_2;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("masks have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("digit {digit} is outside 0..{range}")]
    DigitOutOfRange { digit: u64, range: u64 },
    #[error("integer codes are defined for positive integers only")]
    ZeroInteger,
    #[error("invalid bit mask character {0:?}")]
    InvalidMaskChar(char),
}

/// A sequence of bits, most naturally written as a `0`/`1` string.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct BitMask(Vec<bool>);

impl BitMask {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }
}

impl From<Vec<bool>> for BitMask {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits)
    }
}

impl FromStr for BitMask {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(CodeError::InvalidMaskChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

impl fmt::Display for BitMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// An exact probability `num / den`, as estimated by an adaptive counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn bits(self) -> f64 {
        libm::log2(self.den as f64) - libm::log2(self.num as f64)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub(crate) fn ln_factorial(n: u64) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

/// `log2(n choose r)`.
pub fn log2_binomial(n: u64, r: u64) -> f64 {
    assert!(r <= n, "binomial ({n} choose {r}) undefined");
    if r == 0 || r == n {
        return 0.0;
    }
    ((ln_factorial(n) - ln_factorial(r) - ln_factorial(n - r)) / LN_2).max(0.0)
}

/// Length of a binary sequence with `zeros` zeros and `ones` ones under the
/// adaptive binomial code (both counters start at 1):
/// `-log2(zeros! * ones! / (zeros + ones + 1)!)`.
pub fn adaptive_binary_len(zeros: u64, ones: u64) -> f64 {
    let n = zeros + ones;
    ((ln_factorial(n + 1) - ln_factorial(zeros) - ln_factorial(ones)) / LN_2).max(0.0)
}

/// Per-symbol probabilities the adaptive binomial code assigns while
/// scanning `bits` left to right.
pub fn adaptive_probabilities<I: IntoIterator<Item = bool>>(bits: I) -> Vec<Ratio> {
    let mut cnt = [1u64, 1u64];
    bits.into_iter()
        .map(|b| {
            let p = Ratio {
                num: cnt[b as usize],
                den: cnt[0] + cnt[1],
            };
            cnt[b as usize] += 1;
            p
        })
        .collect()
}

/// Cost of stating `mask` with the adaptive binomial code. Depends only on
/// the number of zeros and ones.
pub fn adaptive_mask_len(mask: &BitMask) -> f64 {
    let ones = mask.count_ones() as u64;
    adaptive_binary_len(mask.len() as u64 - ones, ones)
}

fn agreement_events<'a>(
    b1: &'a BitMask,
    b2: &'a BitMask,
) -> Result<impl Iterator<Item = bool> + 'a, CodeError> {
    if b1.len() != b2.len() {
        return Err(CodeError::LengthMismatch {
            left: b1.len(),
            right: b2.len(),
        });
    }
    // true = the column differs
    Ok(b1.iter().zip(b2.iter()).map(|(x, y)| x != y))
}

/// Per-column probabilities of the agreement code: one counter for columns
/// where the masks agree, one for columns where they differ.
pub fn agreement_probabilities(b1: &BitMask, b2: &BitMask) -> Result<Vec<Ratio>, CodeError> {
    Ok(adaptive_probabilities(agreement_events(b1, b2)?))
}

/// Cost of stating `b2` given `b1` with the adaptive agreement code.
///
/// The same/different event stream is itself coded adaptively, so the
/// length has the adaptive closed form over the agree/differ counts.
pub fn agreement_code_len(b1: &BitMask, b2: &BitMask) -> Result<f64, CodeError> {
    let differ = agreement_events(b1, b2)?.filter(|&d| d).count() as u64;
    Ok(adaptive_binary_len(b1.len() as u64 - differ, differ))
}

/// Cost of stating which `m` of `k` positions are set, all `C(k, m)`
/// candidates being equally likely.
///
/// # Panics
///
/// If `m > k`.
pub fn optimal_positions_len(k: u64, m: u64) -> f64 {
    log2_binomial(k, m)
}

/// Number of Wallace tree code buckets needed to cover every `u64`.
const WTC_BUCKETS: usize = 40;

/// `WTC_CUMULATIVE[t - 1]` counts the integers whose code is at most
/// `2t - 1` bits: the partial sums of the Catalan numbers, which count the
/// binary trees with `t` leaves.
const WTC_CUMULATIVE: [u128; WTC_BUCKETS] = {
    let mut out = [0u128; WTC_BUCKETS];
    let (mut catalan, mut seen, mut j) = (1u128, 0u128, 0);
    while j < WTC_BUCKETS {
        seen += catalan;
        out[j] = seen;
        catalan = catalan * 2 * (2 * j as u128 + 1) / (j as u128 + 2);
        j += 1;
    }
    out
};

/// `2^-(2t - 1)`, exactly.
fn bucket_weight(t: usize) -> f64 {
    f64::from_bits((1023 - (2 * t as u64 - 1)) << 52)
}

/// Wallace tree code length of the positive integer `n`.
///
/// Integers are assigned to binary trees in order of increasing leaf count;
/// a tree with `t` leaves serialises in preorder to `2t - 1` bits. There are
/// `Catalan(t - 1)` such trees, so the lengths run 1, 3, 5, 5, 7 (x5), 9
/// (x14), ...
pub fn wtc_len(n: u64) -> Result<u32, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroInteger);
    }
    let t = WTC_CUMULATIVE.partition_point(|&seen| seen < n as u128) + 1;
    Ok(2 * t as u32 - 1)
}

/// `sum_{j=1..range} 2^-wtc_len(j)`, the probability mass the Wallace tree
/// code places on `1..=range`.
pub fn wtc_mass(range: u64) -> f64 {
    let range = range as u128;
    let mut mass = 0.0;
    let mut below = 0u128;
    for (t, &seen) in (1..).zip(WTC_CUMULATIVE.iter()) {
        if range <= seen {
            return mass + (range - below) as f64 * bucket_weight(t);
        }
        mass += (seen - below) as f64 * bucket_weight(t);
        below = seen;
    }
    unreachable!("buckets cover every u64")
}

/// Cost of the digit `digit` in `0..range` under the Wallace tree code
/// shifted by one and renormalised to the finite range.
pub fn truncated_wtc_len(digit: u64, range: u64) -> Result<f64, CodeError> {
    if digit >= range {
        return Err(CodeError::DigitOutOfRange { digit, range });
    }
    if range == 1 {
        return Ok(0.0);
    }
    let len = wtc_len(digit + 1)? as f64;
    Ok((len + libm::log2(wtc_mass(range))).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn mask(s: &str) -> BitMask {
        s.parse().unwrap()
    }

    fn r(num: u64, den: u64) -> Ratio {
        Ratio { num, den }
    }

    #[test]
    fn adaptive_mask_worked_example() {
        let m = mask("0011001000");
        let probs = adaptive_probabilities(m.iter());
        assert_eq!(
            probs,
            [
                r(1, 2),
                r(2, 3),
                r(1, 4),
                r(2, 5),
                r(3, 6),
                r(4, 7),
                r(3, 8),
                r(5, 9),
                r(6, 10),
                r(7, 11)
            ]
        );
        assert!((adaptive_mask_len(&m) - libm::log2(1320.0)).abs() < 1e-9);
        let incremental: f64 = probs.iter().map(|p| p.bits()).sum();
        assert!((incremental - adaptive_mask_len(&m)).abs() < 1e-9);
    }

    #[test]
    fn adaptive_mask_small_cases() {
        assert!((adaptive_mask_len(&mask("1")) - 1.0).abs() < 1e-12);
        assert!((adaptive_mask_len(&mask("000")) - 2.0).abs() < 1e-12);
        assert_eq!(adaptive_mask_len(&mask("")), 0.0);
    }

    #[test]
    fn agreement_worked_example() {
        let b1 = mask("0011001000");
        let b2 = mask("0011100000");
        assert_eq!(
            agreement_probabilities(&b1, &b2).unwrap(),
            [
                r(1, 2),
                r(2, 3),
                r(3, 4),
                r(4, 5),
                r(1, 6),
                r(5, 7),
                r(2, 8),
                r(6, 9),
                r(7, 10),
                r(8, 11)
            ]
        );
        assert!((agreement_code_len(&b1, &b2).unwrap() - libm::log2(495.0)).abs() < 1e-9);
    }

    #[test]
    fn agreement_small_cases() {
        let b = mask("101");
        assert!((agreement_code_len(&b, &b).unwrap() - 2.0).abs() < 1e-12);
        assert!((agreement_code_len(&mask("1"), &mask("0")).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(
            agreement_code_len(&mask("1"), &mask("10")),
            Err(CodeError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn optimal_positions() {
        assert!((optimal_positions_len(10, 3) - libm::log2(120.0)).abs() < 1e-9);
        assert_eq!(optimal_positions_len(7, 0), 0.0);
        assert!((optimal_positions_len(2, 1) - 1.0).abs() < 1e-12);
        // large k stays finite
        let big = optimal_positions_len(100_000, 50_000);
        assert!(big.is_finite() && big > 99_000.0 && big < 100_000.0);
    }

    #[test]
    fn wtc_lengths() {
        let expect = [(1, 1), (2, 3), (3, 5), (4, 5), (5, 7), (9, 7), (10, 9), (23, 9), (24, 11)];
        for (n, len) in expect {
            assert_eq!(wtc_len(n).unwrap(), len, "n = {n}");
        }
        assert_eq!(wtc_len(0), Err(CodeError::ZeroInteger));
        assert!(wtc_len(u64::MAX).is_ok());
    }

    #[test]
    fn truncated_wtc_examples() {
        assert_eq!(truncated_wtc_len(0, 1).unwrap(), 0.0);
        assert!((truncated_wtc_len(0, 2).unwrap() - libm::log2(1.25)).abs() < 1e-12);
        assert!((truncated_wtc_len(1, 2).unwrap() - libm::log2(5.0)).abs() < 1e-12);
        assert!((truncated_wtc_len(3, 4).unwrap() - libm::log2(22.0)).abs() < 1e-12);
        assert_eq!(
            truncated_wtc_len(4, 4),
            Err(CodeError::DigitOutOfRange { digit: 4, range: 4 })
        );
    }

    #[test]
    fn mask_parse_and_display() {
        assert_eq!(mask("0110").to_string(), "0110");
        assert_eq!("01x".parse::<BitMask>(), Err(CodeError::InvalidMaskChar('x')));
    }
}
