//! Permutations, their Lehmer codes (factoradic digits) and lexicographic
//! ranks, and the cost of stating a permutation digit by digit.
//!
//! Digit `i` of the Lehmer code counts the later entries that are smaller
//! than entry `i`. Read as a mixed-radix number with radices
//! `n, n-1, ..., 1`, the digits give the lexicographic index of the
//! permutation: `dbca` = (4,2,3,1) has digits (3,1,1,0) and index
//! `3*3! + 1*2! + 1*1! + 0 = 21`.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::codes;
use crate::fenwick::Fenwick;

/// Largest `n` for which every rank in `0..n!` fits a `u64`.
pub const MAX_RANKABLE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FactoradicError {
    #[error("sequence is not a permutation of 1..={n}")]
    InvalidPermutation { n: usize },
    #[error("digit {digit} at position {index} exceeds its radix bound {bound}")]
    InvalidDigit { index: usize, digit: u32, bound: u32 },
    #[error("rank of a permutation of {n} elements does not fit in 64 bits")]
    Overflow { n: usize },
    #[error("rank {rank} is not below {n}!")]
    RankOutOfRange { rank: u64, n: usize },
}

/// A bijection on `1..=n`, stored as the sequence of its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, FactoradicError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(FactoradicError::InvalidPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub(crate) fn from_one_based_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self(values)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().zip(1u32..).all(|(&v, i)| v == i)
    }

    /// Number of pairs out of order, i.e. the Kendall distance to the
    /// identity. Equals the digit sum of the Lehmer code.
    pub fn inversions(&self) -> u64 {
        lehmer(self).digits().iter().map(|&d| d as u64).sum()
    }
}

/// Lehmer code digits `(f_0, ..., f_{n-1})`, with `f_i <= n - i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoradicDigits(Vec<u32>);

impl FactoradicDigits {
    pub fn new(digits: Vec<u32>) -> Result<Self, FactoradicError> {
        let n = digits.len();
        for (index, &digit) in digits.iter().enumerate() {
            let bound = (n - index - 1) as u32;
            if digit > bound {
                return Err(FactoradicError::InvalidDigit { index, digit, bound });
            }
        }
        Ok(Self(digits))
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lexicographic index, `sum_i f_i * (n - i - 1)!`.
    pub fn rank(&self) -> Result<u64, FactoradicError> {
        let n = self.len();
        if n > MAX_RANKABLE {
            return Err(FactoradicError::Overflow { n });
        }
        // Horner over the mixed radix n, n-1, ..., 1
        Ok(self
            .0
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &d)| acc * (n - i) as u64 + d as u64))
    }

    /// The permutation these digits encode.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.len();
        let mut remaining = Fenwick::full(n);
        let values = self
            .0
            .iter()
            .map(|&d| {
                let v = remaining.select(d + 1);
                remaining.add(v, -1);
                v as u32
            })
            .collect();
        Permutation(values)
    }
}

/// Lehmer code of `p`. O(n log n).
pub fn lehmer(p: &Permutation) -> FactoradicDigits {
    let n = p.len();
    let mut seen = Fenwick::new(n);
    let mut digits = vec![0u32; n];
    for (i, &v) in p.0.iter().enumerate().rev() {
        digits[i] = seen.prefix(v as usize - 1);
        seen.add(v as usize, 1);
    }
    FactoradicDigits(digits)
}

/// Lexicographic rank of the digits `d`.
pub fn rank(d: &FactoradicDigits) -> Result<u64, FactoradicError> {
    d.rank()
}

/// The permutation of `1..=n` with lexicographic rank `r`.
pub fn unrank(r: u64, n: usize) -> Result<Permutation, FactoradicError> {
    if n <= MAX_RANKABLE {
        let total: u64 = (1..=n as u64).product();
        if r >= total {
            return Err(FactoradicError::RankOutOfRange { rank: r, n });
        }
    }
    let mut digits = vec![0u32; n];
    let mut rest = r;
    for (i, slot) in digits.iter_mut().enumerate().rev() {
        let radix = (n - i) as u64;
        *slot = (rest % radix) as u32;
        rest /= radix;
    }
    Ok(FactoradicDigits(digits).to_permutation())
}

/// Cost of stating `p` as its Lehmer digits, each digit coded with the
/// Wallace tree code truncated to that digit's range `0..n-i`.
pub fn perm_info_len(p: &Permutation) -> f64 {
    digits_info_len(&lehmer(p))
}

/// [`perm_info_len`] for digits already in hand.
pub fn digits_info_len(d: &FactoradicDigits) -> f64 {
    // the ranges run n, n - 1, ..., 1, so walk them upwards and grow the
    // normalising mass one integer at a time
    let mut mass = 0.0;
    let mut total = 0.0;
    for (range, &digit) in (1u64..).zip(d.0.iter().rev()) {
        mass += libm::exp2(-(codes::wtc_len(range).expect("ranges are positive") as f64));
        if range > 1 {
            let len = codes::wtc_len(digit as u64 + 1).expect("digits are non-negative") as f64;
            total += (len + libm::log2(mass)).max(0.0);
        }
    }
    total
}
