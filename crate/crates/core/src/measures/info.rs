use alloc::vec;
use alloc::vec::Vec;

use super::{B2Scheme, MeasureError, MeasureOptions, MeasureReport, Step, Step6Scheme};
use crate::codes::{adaptive_mask_len, agreement_code_len, optimal_positions_len, wtc_len};
use crate::factoradic::perm_info_len;
use crate::list::{decompose, DomainSpec, ListError, OverlapDecomposition, RankedList};
use crate::lzw::{lzw_bit_length, LzwEncoder};

fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// `log2(n! / (n - count)!)`, summed term by term so a huge `n` with a
/// small `count` keeps full precision.
fn log2_falling(n: u64, count: usize) -> f64 {
    (0..count as u64).map(|i| log2((n - i) as f64)).sum()
}

/// Steps 3 to 5: overlap mask, its positions in the second list, and the
/// permutation of the overlap. Shared by both domain cases.
fn overlap_steps(d: &OverlapDecomposition<'_>, opts: MeasureOptions) -> [(Step, f64); 3] {
    let k = d.b1.len() as u64;
    let b2 = match opts.b2_scheme {
        B2Scheme::Optimal => optimal_positions_len(k, d.m as u64),
        B2Scheme::Adaptive => agreement_code_len(&d.b1, &d.b2).expect("masks share length k"),
    };
    [
        (Step::B1, adaptive_mask_len(&d.b1)),
        (Step::B2, b2),
        (Step::Perm, perm_info_len(&d.sigma)),
    ]
}

fn finish(
    mode: DomainSpec,
    d: &OverlapDecomposition<'_>,
    step_bits: Vec<(Step, f64)>,
    first_part: &[Step],
    null_bits: f64,
) -> MeasureReport {
    let (i_tau1, i_tau2_given_tau1) = step_bits.iter().fold((0.0, 0.0), |(a, b), &(s, bits)| {
        if first_part.contains(&s) {
            (a + bits, b)
        } else {
            (a, b + bits)
        }
    });
    let two_part = i_tau1 + i_tau2_given_tau1;
    let used_null = null_bits < two_part;
    MeasureReport {
        mode,
        k: d.b1.len(),
        m: d.m,
        step_bits,
        i_tau1,
        i_tau2_given_tau1,
        null_bits,
        total_bits: if used_null { null_bits } else { two_part },
        used_null,
    }
}

/// The measure when both parties know the domain has `domain` elements.
pub fn info_case1(
    t1: &RankedList,
    t2: &RankedList,
    domain: u64,
    opts: MeasureOptions,
) -> Result<MeasureReport, MeasureError> {
    let d = decompose(t1, t2)?;
    let union = d.union_len();
    if domain < union as u64 {
        return Err(MeasureError::DomainTooSmall { domain, union });
    }
    let k = t1.len();
    let only = k - d.m;
    let tau2_only = match opts.step6_scheme {
        // j-th label among the N - k - (j - 1) not yet named
        Step6Scheme::Sequential => log2_falling(domain - k as u64, only),
        Step6Scheme::PaperLiteral if only == 0 => 0.0,
        Step6Scheme::PaperLiteral => {
            let pool = domain - union as u64;
            if pool == 0 {
                return Err(MeasureError::DomainTooSmall { domain, union });
            }
            only as f64 * log2(pool as f64)
        }
    };
    let size = log2(domain as f64);
    let tau1_labels = log2_falling(domain, k);

    let mut steps = vec![(Step::Size, size), (Step::Tau1Labels, tau1_labels)];
    steps.extend(overlap_steps(&d, opts));
    steps.push((Step::Tau2Only, tau2_only));

    let null_bits = 2.0 * (size + tau1_labels);
    Ok(finish(
        DomainSpec::Known(domain),
        &d,
        steps,
        &[Step::Size, Step::Tau1Labels],
        null_bits,
    ))
}

/// Labels joined with a linefeed after each one.
pub fn serialize_labels<'a, I: IntoIterator<Item = &'a str>>(labels: I) -> Vec<u8> {
    let labels = labels.into_iter();
    let mut out = Vec::with_capacity(labels.size_hint().0 * 9);
    for label in labels {
        out.extend_from_slice(label.as_bytes());
        out.push(b'\n');
    }
    out
}

fn wtc_bits(n: usize) -> f64 {
    wtc_len(n as u64).expect("list sizes are positive") as f64
}

/// The measure when the domain is unknown and labels must be sent
/// explicitly. The first part states the union size, `k`, and the union's
/// labels (first list in rank order, then the second list's own labels in
/// its order) compressed with LZW.
pub fn info_case2(
    t1: &RankedList,
    t2: &RankedList,
    opts: MeasureOptions,
) -> Result<MeasureReport, MeasureError> {
    let d = decompose(t1, t2)?;
    let k = t1.len();
    // LZW is online, so the union's encoder passes through the first
    // list's own encoding on the way
    let first = serialize_labels(t1.iter());
    let rest = serialize_labels(d.tau2_only.iter().copied());
    let mut enc = LzwEncoder::with_capacity(first.len() + rest.len());
    enc.push(&first);
    let lzw_t1 = enc.bit_length();
    enc.push(&rest);
    let lzw_union = enc.bit_length();

    let mut steps = vec![
        (Step::UnionSize, wtc_bits(d.union_len())),
        (Step::KSize, wtc_bits(k)),
        (Step::LzwLabels, lzw_union as f64),
    ];
    steps.extend(overlap_steps(&d, opts));

    let lzw_t2 = lzw_bit_length(&serialize_labels(t2.iter()));
    let null_bits = 2.0 * wtc_bits(k) + (lzw_t1 + lzw_t2) as f64;
    Ok(finish(
        DomainSpec::Unknown,
        &d,
        steps,
        &[Step::UnionSize, Step::KSize, Step::LzwLabels],
        null_bits,
    ))
}

/// Joint information of the ordered pair `(t1, t2)`.
pub fn info_total(
    t1: &RankedList,
    t2: &RankedList,
    domain: DomainSpec,
    opts: MeasureOptions,
) -> Result<MeasureReport, MeasureError> {
    match domain {
        DomainSpec::Known(n) => info_case1(t1, t2, n, opts),
        DomainSpec::Unknown => info_case2(t1, t2, opts),
    }
}

/// Information cost of `t2` relative to `t1`: `I(t1, t2) - I(t1, t1)`.
pub fn info_cost(
    t1: &RankedList,
    t2: &RankedList,
    domain: DomainSpec,
    opts: MeasureOptions,
) -> Result<f64, MeasureError> {
    if t1.len() != t2.len() {
        return Err(ListError::LengthMismatch {
            left: t1.len(),
            right: t2.len(),
        }
        .into());
    }
    let pair = info_total(t1, t2, domain, opts)?;
    let own = info_total(t1, t1, domain, opts)?;
    Ok(pair.total_bits - own.total_bits)
}

/// `|I(t1, t2) - I(t2, t1)|`. The coder is only approximately symmetric;
/// this reports by how much.
pub fn asymmetry(
    t1: &RankedList,
    t2: &RankedList,
    domain: DomainSpec,
    opts: MeasureOptions,
) -> Result<f64, MeasureError> {
    let forward = info_total(t1, t2, domain, opts)?;
    let backward = info_total(t2, t1, domain, opts)?;
    Ok((forward.total_bits - backward.total_bits).abs())
}
