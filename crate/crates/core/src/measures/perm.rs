use crate::factoradic::{perm_info_len, Permutation};

/// All four measures of a full permutation against the identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermMeasures {
    pub footrule: f64,
    pub kendall: f64,
    pub canberra: f64,
    pub info_bits: f64,
}

pub fn perm_measures(p: &Permutation) -> PermMeasures {
    let (footrule, canberra) = p
        .as_slice()
        .iter()
        .zip(1u32..)
        .fold((0u64, 0.0), |(f, c), (&v, i)| {
            let d = v.abs_diff(i);
            (f + d as u64, c + d as f64 / (v + i) as f64)
        });
    PermMeasures {
        footrule: footrule as f64,
        kendall: p.inversions() as f64,
        canberra,
        info_bits: perm_info_len(p),
    }
}
