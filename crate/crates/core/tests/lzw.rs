use std::collections::HashMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topk_info::lzw::{code_width, lzw_compress, lzw_decompress};

/// Textbook LZW over a string-keyed dictionary.
fn naive_codes(data: &[u8]) -> Vec<u32> {
    let mut dict: HashMap<Vec<u8>, u32> = (0..=255u8).map(|b| (vec![b], b as u32)).collect();
    let mut out = Vec::new();
    let mut w: Vec<u8> = Vec::new();
    for &c in data {
        let mut wc = w.clone();
        wc.push(c);
        if dict.contains_key(&wc) {
            w = wc;
        } else {
            out.push(dict[&w]);
            let next = dict.len() as u32;
            dict.insert(wc, next);
            w = vec![c];
        }
    }
    if !w.is_empty() {
        out.push(dict[&w]);
    }
    out
}

#[test]
fn random_strings_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let big: Vec<u8> = (0..10 * 1024).map(|_| rng.random()).collect();
    let r = lzw_compress(&big);
    assert_eq!(lzw_decompress(&r).unwrap(), big);
    assert_eq!(r.codes, naive_codes(&big));
}

#[test]
fn one_megabyte_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // small alphabet so long phrases and wide codes both occur
    let data: Vec<u8> = (0..1 << 20).map(|_| b'a' + rng.random_range(0..4u8)).collect();
    let r = lzw_compress(&data);
    assert_eq!(lzw_decompress(&r).unwrap(), data);
    assert!(r.bit_length < 8 * data.len() as u64);
    let widths: u64 = (0..r.codes.len()).map(|i| code_width(i) as u64).sum();
    assert_eq!(r.bit_length, widths);
    assert_eq!(r.dict_final_size, 256 + r.codes.len() - 1);
}

proptest! {
    #[test]
    fn matches_naive_and_round_trips(data in prop::collection::vec(0u8..6, 0..2000)) {
        let r = lzw_compress(&data);
        prop_assert_eq!(&r.codes, &naive_codes(&data));
        prop_assert_eq!(lzw_decompress(&r).unwrap(), data);
    }

    #[test]
    fn appending_data_never_shrinks_output(
        x in prop::collection::vec(any::<u8>(), 0..500),
        y in prop::collection::vec(any::<u8>(), 1..500),
    ) {
        let mut xy = x.clone();
        xy.extend_from_slice(&y);
        prop_assert!(lzw_compress(&xy).bit_length >= lzw_compress(&x).bit_length);
    }
}
