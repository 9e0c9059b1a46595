use std::collections::HashMap;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topk_info::measures::{
    canberra_topk, footrule_ext, info_total, kendall_ext, B2Scheme, KendallParams, MeasureOptions, Step6Scheme,
};
use topk_info::{DomainSpec, RankedList};

fn three_lists() -> Vec<RankedList> {
    let letters = ["a", "b", "c", "d", "e"];
    let mut out = Vec::new();
    for &x in &letters {
        for &y in &letters {
            for &z in &letters {
                if x != y && y != z && x != z {
                    out.push(RankedList::new([x, y, z]).unwrap());
                }
            }
        }
    }
    out
}

fn ranks(t: &RankedList) -> HashMap<&str, usize> {
    t.iter().enumerate().map(|(i, l)| (l, i + 1)).collect()
}

/// Footrule with every missing element placed at rank k + 1.
fn footrule_oracle(t1: &RankedList, t2: &RankedList) -> f64 {
    let (r1, r2) = (ranks(t1), ranks(t2));
    let missing = t1.len() + 1;
    let mut union: Vec<&str> = t1.iter().collect();
    union.extend(t2.iter().filter(|l| !r1.contains_key(l)));
    union
        .iter()
        .map(|l| {
            let a = r1.get(l).copied().unwrap_or(missing);
            let b = r2.get(l).copied().unwrap_or(missing);
            a.abs_diff(b) as f64
        })
        .sum()
}

/// Pairwise case analysis of the Kendall distance with penalty p.
fn kendall_oracle(t1: &RankedList, t2: &RankedList, p: f64) -> f64 {
    let (r1, r2) = (ranks(t1), ranks(t2));
    let mut union: Vec<&str> = t1.iter().collect();
    union.extend(t2.iter().filter(|l| !r1.contains_key(l)));
    let mut total = 0.0;
    for (x, &i) in union.iter().enumerate() {
        for &j in &union[x + 1..] {
            let (i1, j1, i2, j2) = (r1.get(i), r1.get(j), r2.get(i), r2.get(j));
            total += match (i1, j1, i2, j2) {
                // both ranked by both lists
                (Some(a), Some(b), Some(c), Some(d)) => ((a < b) != (c < d)) as u8 as f64,
                // both in one list, one of them missing from the other
                (Some(a), Some(b), Some(_), None) => (b < a) as u8 as f64,
                (Some(a), Some(b), None, Some(_)) => (a < b) as u8 as f64,
                (Some(_), None, Some(c), Some(d)) => (d < c) as u8 as f64,
                (None, Some(_), Some(c), Some(d)) => (c < d) as u8 as f64,
                // each in exactly one list, different lists
                (Some(_), None, None, Some(_)) | (None, Some(_), Some(_), None) => 1.0,
                // both only in the same list: order unknown in the other
                (Some(_), Some(_), None, None) | (None, None, Some(_), Some(_)) => p,
                _ => unreachable!(),
            };
        }
    }
    total
}

#[test]
fn baselines_match_oracles_and_are_symmetric() {
    let lists = three_lists();
    for t1 in &lists {
        for t2 in &lists {
            let f = footrule_ext(t1, t2).unwrap();
            assert_eq!(f, footrule_oracle(t1, t2));
            assert_eq!(f, footrule_ext(t2, t1).unwrap());
            assert_eq!(f == 0.0, t1 == t2);
            for p in [0.0, 0.5, 1.0] {
                let params = KendallParams::new(p).unwrap();
                let k = kendall_ext(t1, t2, params).unwrap();
                assert!((k - kendall_oracle(t1, t2, p)).abs() < 1e-12, "{t1:?} {t2:?} p={p}");
                assert_eq!(k, kendall_ext(t2, t1, params).unwrap());
                assert_eq!(k == 0.0, t1 == t2);
            }
            let c = canberra_topk(t1, t2).unwrap();
            assert!((c - canberra_topk(t2, t1).unwrap()).abs() < 1e-12);
            assert_eq!(c == 0.0, t1 == t2);
        }
    }
}

#[test]
fn disjoint_closed_forms() {
    for k in 1..=50usize {
        let t1 = RankedList::new((0..k).map(|i| format!("x{i}"))).unwrap();
        let t2 = RankedList::new((0..k).map(|i| format!("y{i}"))).unwrap();
        assert_eq!(footrule_ext(&t1, &t1).unwrap(), 0.0);
        assert_eq!(footrule_ext(&t1, &t2).unwrap(), (k * (k + 1)) as f64);
        let p0 = KendallParams::new(0.0).unwrap();
        assert_eq!(kendall_ext(&t1, &t1, p0).unwrap(), 0.0);
        assert_eq!(kendall_ext(&t1, &t2, p0).unwrap(), (k * k) as f64);
    }
}

#[test]
fn canberra_weighs_top_displacements_more() {
    let base = RankedList::new(["a", "b", "c", "d", "e", "f"]).unwrap();
    let top_swap = RankedList::new(["b", "a", "c", "d", "e", "f"]).unwrap();
    let bottom_swap = RankedList::new(["a", "b", "c", "d", "f", "e"]).unwrap();
    assert!(canberra_topk(&base, &top_swap).unwrap() > canberra_topk(&base, &bottom_swap).unwrap());
}

fn random_pair(rng: &mut ChaCha8Rng, pool: &[String]) -> (RankedList, RankedList) {
    let k = rng.random_range(1..=12);
    let a: Vec<String> = pool.choose_multiple(rng, k).cloned().collect();
    let b: Vec<String> = pool.choose_multiple(rng, k).cloned().collect();
    (RankedList::new(a).unwrap(), RankedList::new(b).unwrap())
}

#[test]
fn total_is_min_of_null_and_two_part() {
    let pool: Vec<String> = (0..20).map(|i| format!("label-{i}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let schemes = [
        MeasureOptions::default(),
        MeasureOptions {
            b2_scheme: B2Scheme::Adaptive,
            step6_scheme: Step6Scheme::PaperLiteral,
        },
    ];
    for i in 0..1000 {
        let (t1, t2) = random_pair(&mut rng, &pool);
        for domain in [DomainSpec::Known(21 + i % 7), DomainSpec::Unknown] {
            for opts in schemes {
                let r = info_total(&t1, &t2, domain, opts).unwrap();
                assert_eq!(r.total_bits, r.null_bits.min(r.two_part_bits()));
                assert_eq!(r.used_null, r.null_bits < r.two_part_bits());
                assert!(r.total_bits <= r.null_bits);
                assert!(r.step_bits.iter().all(|&(_, b)| b >= 0.0 && b.is_finite()));
            }
        }
    }
}

fn permutations(items: &[String]) -> Vec<Vec<String>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

#[test]
fn conditional_cost_is_smallest_for_a_copy() {
    for k in 1..=7usize {
        let labels: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
        let t1 = RankedList::new(labels.clone()).unwrap();
        for domain in [DomainSpec::Known(3 * k as u64), DomainSpec::Unknown] {
            let own = info_total(&t1, &t1, domain, MeasureOptions::default()).unwrap();
            for perm in permutations(&labels) {
                let t2 = RankedList::new(perm).unwrap();
                let r = info_total(&t1, &t2, domain, MeasureOptions::default()).unwrap();
                assert!(own.i_tau2_given_tau1 <= r.i_tau2_given_tau1 + 1e-12);
            }
        }
    }
}

#[test]
fn shared_first_list_cancels() {
    let pool: Vec<String> = (0..30).map(|i| format!("w{i}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..300 {
        let k = rng.random_range(2..=10);
        let mut shuffled = pool.clone();
        shuffled.shuffle(&mut rng);
        let t1 = RankedList::new(shuffled[..k].to_vec()).unwrap();
        let t2 = RankedList::new(shuffled[k / 2..k / 2 + k].to_vec()).unwrap();
        let t3 = RankedList::new(pool.choose_multiple(&mut rng, k).cloned().collect::<Vec<_>>()).unwrap();
        // with a known domain the first part depends on t1 alone
        let opts = MeasureOptions::default();
        let a = info_total(&t1, &t2, DomainSpec::Known(30), opts).unwrap();
        let b = info_total(&t1, &t3, DomainSpec::Known(30), opts).unwrap();
        if a.used_null || b.used_null {
            continue;
        }
        let lhs = a.total_bits - b.total_bits;
        let rhs = a.i_tau2_given_tau1 - b.i_tau2_given_tau1;
        assert!((lhs - rhs).abs() < 1e-9);
        checked += 1;
    }
    assert!(checked > 100);
}
