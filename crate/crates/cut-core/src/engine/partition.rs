use std::fmt;

use crate::{Error, Result};

/// A multiset of pile sizes in canonical nondecreasing order, each ≥ 1.
///
/// Options of the game are written as partitions; only the multiset matters
/// for nim-values, so the parts are canonicalized at construction. The
/// derived `Ord` is lexicographic on the sorted parts, which is the order
/// used for move tie-breaking and counterexample reporting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PilePartition {
    parts: Vec<u64>,
}

impl PilePartition {
    /// Sorts `parts`; rejects an empty list or a zero part.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidPartition("needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts are positive".into()));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    /// Internal constructor for parts already in nondecreasing order.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(!parts.is_empty() && parts[0] >= 1);
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for PilePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` into exactly `p` positive parts, each yielded once
/// in canonical form, lexicographically ascending:
///
/// ```
/// use cut_core::engine::enumerate_partitions;
/// let parts: Vec<Vec<u64>> = enumerate_partitions(7, 3)
///     .map(|o| o.parts().to_vec())
///     .collect();
/// assert_eq!(parts, [vec![1, 1, 5], vec![1, 2, 4], vec![1, 3, 3], vec![2, 2, 3]]);
/// ```
///
/// The stream is empty when `n < p` or `p = 0`.
pub fn enumerate_partitions(n: u64, p: u64) -> Partitions {
    let state = if p == 0 || n < p {
        None
    } else {
        let mut first = vec![1u64; (p - 1) as usize];
        first.push(n - p + 1);
        Some(first)
    };
    Partitions { state }
}

pub struct Partitions {
    state: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = PilePartition;

    fn next(&mut self) -> Option<PilePartition> {
        let current = self.state.take()?;
        self.state = successor(current.clone());
        Some(PilePartition::from_sorted(current))
    }
}

/// Next partition in lexicographic order: find the rightmost non-final part
/// that can grow by one, then refill the tail with the smallest valid values.
fn successor(mut a: Vec<u64>) -> Option<Vec<u64>> {
    let p = a.len();
    let mut suffix = a[p - 1];
    for j in (0..p - 1).rev() {
        suffix += a[j];
        let v = a[j] + 1;
        let k = (p - j) as u64; // parts j..p-1 inclusive
        if suffix >= v * k {
            for slot in &mut a[j..p - 1] {
                *slot = v;
            }
            a[p - 1] = suffix - v * (k - 1);
            return Some(a);
        }
    }
    None
}
