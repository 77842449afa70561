use std::fmt;

/// A set of nim-values, stored as a growable bitmask over 64-bit words.
///
/// Grundy values in this game are unbounded (the solved families climb by a
/// fixed saltus every period, and the `{1,2}` sequence grows roughly
/// linearly), so the mask extends on demand instead of assuming a universe.
#[derive(Clone, Default)]
pub struct NimValueSet {
    words: Vec<u64>,
}

impl NimValueSet {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    pub fn singleton(value: u64) -> Self {
        let mut s = Self::new();
        s.insert(value);
        s
    }

    pub fn insert(&mut self, value: u64) {
        let w = (value / 64) as usize;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (value % 64);
    }

    pub fn contains(&self, value: u64) -> bool {
        self.words
            .get((value / 64) as usize)
            .is_some_and(|&w| w >> (value % 64) & 1 == 1)
    }

    /// Minimum excludant: the least nonnegative integer not in the set.
    pub fn mex(&self) -> u64 {
        for (i, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                return 64 * i as u64 + (!w).trailing_zeros() as u64;
            }
        }
        64 * self.words.len() as u64
    }

    pub fn union_with(&mut self, other: &NimValueSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Inserts `v ⊕ shift` for every `v` in `other`: the translation of an
    /// option set induced by one extra pile of fixed value `shift`.
    pub fn union_xor(&mut self, other: &NimValueSet, shift: u64) {
        for v in other.iter() {
            self.insert(v ^ shift);
        }
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let base = 64 * i as u64;
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as u64;
                    w &= w - 1;
                    Some(base + b)
                }
            })
        })
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &NimValueSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

impl PartialEq for NimValueSet {
    /// Equality ignores trailing zero words, so sets built along different
    /// paths compare by membership alone.
    fn eq(&self, other: &Self) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| {
            self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0)
        })
    }
}

impl Eq for NimValueSet {}

impl FromIterator<u64> for NimValueSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for NimValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
