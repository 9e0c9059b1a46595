//! Lempel-Ziv-Welch compression with variable-width codes.
//!
//! The dictionary starts with the 256 single-byte strings and grows by one
//! entry per emitted code without bound; there are no clear or stop codes.
//! Codes start 9 bits wide and widen to `w + 1` bits once the next free
//! dictionary index reaches `2^w`. Since the `i`-th emitted code is always
//! written when the next free index is `256 + i`, encoder and decoder agree
//! on every width from the code's position alone.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

const ALPHABET: u32 = 256;
const MIN_WIDTH: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LzwError {
    #[error("code {code} at position {position} is not in the dictionary")]
    InvalidCode { position: usize, code: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LzwResult {
    pub codes: Vec<u32>,
    /// Sum of the emitted code widths.
    pub bit_length: u64,
    pub dict_final_size: usize,
}

/// Width in bits of the code emitted at `position` (0-based).
pub fn code_width(position: usize) -> u32 {
    let next_free = ALPHABET as u64 + position as u64;
    MIN_WIDTH.max(u64::BITS - next_free.leading_zeros())
}

/// Sum of the widths of the first `codes` codes, one run of equal widths
/// at a time.
fn total_width(codes: usize) -> u64 {
    let codes = codes as u64;
    let mut total = 0;
    let mut start = 0u64;
    while start < codes {
        let width = code_width(start as usize) as u64;
        // first position whose next free index needs another bit
        let end = ((1u64 << width) - ALPHABET as u64).min(codes);
        total += (end - start) * width;
        start = end;
    }
    total
}

/// Dictionary of the phrases seen so far, keyed by `(prefix code, byte)`.
#[derive(Debug)]
struct Dictionary {
    pairs: Vec<u32>,
    /// Packed `code << 36 | prefix << 8 | byte`, zero when empty.
    slots: Vec<u64>,
    longer: usize,
}

const CODE_SHIFT: u32 = 36;

impl Dictionary {
    fn with_capacity(entries: usize) -> Self {
        Self {
            pairs: vec![0; (ALPHABET * ALPHABET) as usize],
            slots: vec![0; (2 * entries).max(1024)],
            longer: 0,
        }
    }

    fn home(&self, key: u64) -> usize {
        let hash = key.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        // maps the hash onto 0..len without a power-of-two table size
        ((hash as u128 * self.slots.len() as u128) >> 64) as usize
    }

    fn next(&self, i: usize) -> usize {
        if i + 1 == self.slots.len() {
            0
        } else {
            i + 1
        }
    }

    fn get(&self, prefix: u32, byte: u8) -> Option<u32> {
        if prefix < ALPHABET {
            let code = self.pairs[(prefix << 8 | byte as u32) as usize];
            return (code != 0).then_some(code);
        }
        let key = (prefix as u64) << 8 | byte as u64;
        let mut i = self.home(key);
        loop {
            let slot = self.slots[i];
            if slot == 0 {
                return None;
            }
            if slot & ((1 << CODE_SHIFT) - 1) == key {
                return Some((slot >> CODE_SHIFT) as u32);
            }
            i = self.next(i);
        }
    }

    fn insert(&mut self, prefix: u32, byte: u8, code: u32) {
        if prefix < ALPHABET {
            self.pairs[(prefix << 8 | byte as u32) as usize] = code;
            return;
        }
        // keep linear probing runs short: load stays below 0.7
        if 10 * (self.longer + 1) > 7 * self.slots.len() {
            self.grow();
        }
        self.longer += 1;
        let key = (prefix as u64) << 8 | byte as u64;
        self.place(key | (code as u64) << CODE_SHIFT);
    }

    fn place(&mut self, slot: u64) {
        let mut i = self.home(slot & ((1 << CODE_SHIFT) - 1));
        while self.slots[i] != 0 {
            i = self.next(i);
        }
        self.slots[i] = slot;
    }

    fn grow(&mut self) {
        let doubled = vec![0; 2 * self.slots.len()];
        let old = core::mem::replace(&mut self.slots, doubled);
        for slot in old.into_iter().filter(|&s| s != 0) {
            self.place(slot);
        }
    }
}

/// Incremental LZW encoder. Feeding a message in pieces emits exactly the
/// codes of compressing it in one go.
#[derive(Debug)]
pub struct LzwEncoder {
    dict: Dictionary,
    next_free: u32,
    codes: Vec<u32>,
    phrase: Option<u32>,
}

impl LzwEncoder {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    /// An encoder sized for roughly `bytes` bytes of input.
    pub fn with_capacity(bytes: usize) -> Self {
        Self {
            dict: Dictionary::with_capacity(bytes / 3),
            next_free: ALPHABET,
            codes: Vec::with_capacity(bytes / 2),
            phrase: None,
        }
    }

    pub fn push(&mut self, data: &[u8]) {
        let mut bytes = data.iter().copied();
        let mut phrase = match self.phrase {
            Some(p) => p,
            None => match bytes.next() {
                Some(b) => b as u32,
                None => return,
            },
        };
        for byte in bytes {
            match self.dict.get(phrase, byte) {
                Some(code) => phrase = code,
                None => {
                    self.codes.push(phrase);
                    self.dict.insert(phrase, byte, self.next_free);
                    self.next_free += 1;
                    phrase = byte as u32;
                }
            }
        }
        self.phrase = Some(phrase);
    }

    /// Bits the message fed so far would take if it ended here.
    pub fn bit_length(&self) -> u64 {
        total_width(self.codes.len() + self.phrase.is_some() as usize)
    }

    pub fn finish(mut self) -> LzwResult {
        self.codes.extend(self.phrase);
        LzwResult {
            bit_length: total_width(self.codes.len()),
            dict_final_size: self.next_free as usize,
            codes: self.codes,
        }
    }
}

impl Default for LzwEncoder {
    fn default() -> Self {
        Self::new()
    }
}

pub fn lzw_compress(data: &[u8]) -> LzwResult {
    let mut enc = LzwEncoder::with_capacity(data.len());
    enc.push(data);
    enc.finish()
}

/// Compressed size of `data` in bits.
pub fn lzw_bit_length(data: &[u8]) -> u64 {
    lzw_compress(data).bit_length
}

pub fn lzw_decompress(r: &LzwResult) -> Result<Vec<u8>, LzwError> {
    lzw_decompress_codes(&r.codes)
}

/// Inverse of [`lzw_compress`] on its code sequence.
pub fn lzw_decompress_codes(codes: &[u32]) -> Result<Vec<u8>, LzwError> {
    // entries past the alphabet: (prefix code, last byte, first byte)
    let mut entries: Vec<(u32, u8, u8)> = Vec::with_capacity(codes.len());
    let mut out = Vec::new();
    let mut scratch = Vec::new();

    let first_byte = |entries: &[(u32, u8, u8)], code: u32| -> u8 {
        if code < ALPHABET {
            code as u8
        } else {
            entries[(code - ALPHABET) as usize].2
        }
    };
    let expand = |entries: &[(u32, u8, u8)], mut code: u32, buf: &mut Vec<u8>| {
        let start = buf.len();
        while code >= ALPHABET {
            let (prefix, byte, _) = entries[(code - ALPHABET) as usize];
            buf.push(byte);
            code = prefix;
        }
        buf.push(code as u8);
        buf[start..].reverse();
    };

    let mut prev: Option<u32> = None;
    for (position, &code) in codes.iter().enumerate() {
        let next_free = ALPHABET + entries.len() as u32;
        match prev {
            None => {
                if code >= ALPHABET {
                    return Err(LzwError::InvalidCode { position, code });
                }
                out.push(code as u8);
            }
            Some(p) => {
                let head = if code < next_free {
                    first_byte(&entries, code)
                } else if code == next_free {
                    // the phrase being defined right now: prev + first(prev)
                    first_byte(&entries, p)
                } else {
                    return Err(LzwError::InvalidCode { position, code });
                };
                entries.push((p, head, first_byte(&entries, p)));
                scratch.clear();
                expand(&entries, code, &mut scratch);
                out.extend_from_slice(&scratch);
            }
        }
        prev = Some(code);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input() {
        let r = lzw_compress(b"");
        assert!(r.codes.is_empty());
        assert_eq!(r.bit_length, 0);
        assert_eq!(lzw_decompress(&r).unwrap(), b"");
    }

    #[test]
    fn hand_traces() {
        let r = lzw_compress(b"ab");
        assert_eq!(r.codes, vec![97, 98]);
        assert_eq!(r.bit_length, 18);

        let r = lzw_compress(b"aaaa");
        assert_eq!(r.codes, vec![97, 256, 97]);
        assert_eq!(r.bit_length, 27);
        assert_eq!(r.dict_final_size, 258);
        assert_eq!(lzw_decompress(&r).unwrap(), b"aaaa");
    }

    #[test]
    fn kwkwk_case() {
        // a b ab aba b: "aba" is emitted while it is still being defined
        let r = lzw_compress(b"abababab");
        assert_eq!(r.codes, vec![97, 98, 256, 258, 98]);
        assert_eq!(lzw_decompress(&r).unwrap(), b"abababab");
    }

    #[test]
    fn widths_grow_with_dictionary() {
        assert_eq!(code_width(0), 9);
        assert_eq!(code_width(255), 9);
        assert_eq!(code_width(256), 10);
        assert_eq!(code_width(767), 10);
        assert_eq!(code_width(768), 11);
    }

    #[test]
    fn rejects_codes_beyond_dictionary() {
        assert_eq!(
            lzw_decompress_codes(&[256]),
            Err(LzwError::InvalidCode { position: 0, code: 256 })
        );
        assert_eq!(
            lzw_decompress_codes(&[97, 300]),
            Err(LzwError::InvalidCode { position: 1, code: 300 })
        );
    }

    #[test]
    fn streaming_matches_one_shot() {
        let data = b"the cat sat on the mat with the other cat";
        for split in 0..=data.len() {
            let mut enc = LzwEncoder::new();
            enc.push(&data[..split]);
            enc.push(&data[split..]);
            assert_eq!(enc.finish(), lzw_compress(data));
        }
        let mut enc = LzwEncoder::new();
        enc.push(b"abab");
        assert_eq!(enc.bit_length(), lzw_bit_length(b"abab"));
    }

    #[test]
    fn total_width_matches_per_code_sum() {
        for n in [0, 1, 255, 256, 257, 767, 768, 769, 5000] {
            let naive: u64 = (0..n).map(|i| code_width(i) as u64).sum();
            assert_eq!(total_width(n), naive);
        }
    }

    #[test]
    fn repetitive_input_compresses() {
        let data = vec![b'a'; 1000];
        let r = lzw_compress(&data);
        assert!(r.bit_length < 8 * 1000);
        assert_eq!(lzw_decompress(&r).unwrap(), data);
    }
}
