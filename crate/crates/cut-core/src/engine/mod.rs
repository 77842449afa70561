//! Exact Grundy values and nim-sets for arbitrary cut-sets.
//!
//! The nim-set 𝒩(n, p) is the set of values 𝒢(h₁) ⊕ … ⊕ 𝒢(h_p) over all
//! cuts of n into exactly p nonempty piles. Enumerating partitions is
//! exponential, but XOR does not care about the order of the parts, so the
//! sets obey a composition-style recurrence that strips the first part off
//! the front:
//!
//! ```text
//! 𝒩(n, 1) = { 𝒢(n) }
//! 𝒩(n, p) = ⋃_{h=1}^{n−p+1} { 𝒢(h) ⊕ v : v ∈ 𝒩(n−h, p−1) }
//! ```
//!
//! and the game value of a single pile closes the loop:
//!
//! ```text
//! 𝒢(n) = mex ⋃_{d ∈ 𝒞} 𝒩(n, d+1).
//! ```
//!
//! [`GrundyTable`] memoizes both layers of this recurrence;
//! [`enumerate_partitions`] provides the (slow) direct enumeration that the
//! tests use as an independent check.

mod cutset;
mod partition;
mod table;
mod value_set;

pub use cutset::CutSet;
pub use partition::{enumerate_partitions, Partitions, PilePartition};
pub use table::{GrundyTable, DEFAULT_ENTRY_LIMIT};
pub use value_set::NimValueSet;

/// XOR of all values; the nim-sum of an empty list is 0.
pub fn nim_sum<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(0, |a, v| a ^ v)
}

/// Minimum excludant: the least nonnegative integer missing from `values`.
pub fn mex<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().collect::<NimValueSet>().mex()
}
