//! Information-theoretic comparison of two top-k ranked lists.
//!
//! The dissimilarity of two lists is measured as the length, in bits, of a
//! lossless two-part message: the first list, then the second list stated
//! relative to the first. Stating the second list reuses everything the two
//! lists share: which elements overlap, where the overlap sits in the second
//! list, how the overlap is permuted, and finally the labels only the second
//! list holds. A null model (sending both lists independently) bounds the
//! joint message from above.
//!
//! The crate also provides the classical baselines for top-k lists: the
//! extended Spearman footrule, the extended Kendall tau and a top-k Canberra
//! distance.
//!
//! ```
//! use topk_info::{parse_list, measures::{info_total, MeasureOptions}, DomainSpec};
//!
//! let a = parse_list("a\nb").unwrap();
//! let b = parse_list("b\nc").unwrap();
//! let report = info_total(&a, &b, DomainSpec::Known(5), MeasureOptions::default()).unwrap();
//! assert!((report.total_bits - 11.8137).abs() < 1e-4);
//! assert!(!report.used_null);
//! ```
//!
//! The crate is `no_std` and only needs an allocator.
#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod codes;
pub mod factoradic;
mod fenwick;
pub mod list;
pub mod lzw;
pub mod measures;

pub use codes::{BitMask, CodeError};
pub use factoradic::{FactoradicDigits, FactoradicError, Permutation};
pub use list::{decompose, parse_list, top_k, DomainSpec, ListError, OverlapDecomposition, RankedList};
pub use lzw::{lzw_compress, lzw_decompress, LzwError, LzwResult};
pub use measures::{MeasureError, MeasureOptions, MeasureReport};
