use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A validated cut-set 𝒞: the numbers of cuts a single move may make.
///
/// Cutting a pile with `d` cuts leaves `d + 1` nonempty parts. The entries
/// are kept strictly increasing; construction sorts its input and rejects
/// zeros, duplicates, and the empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSet {
    cuts: Vec<u64>,
}

impl CutSet {
    pub fn new(cuts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut cuts = cuts.into();
        if cuts.is_empty() {
            return Err(Error::InvalidCutSet("needs at least one cut number".into()));
        }
        cuts.sort_unstable();
        if cuts[0] == 0 {
            return Err(Error::InvalidCutSet("cut numbers are positive".into()));
        }
        if let Some(w) = cuts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCutSet(format!("repeated cut number {}", w[0])));
        }
        Ok(Self { cuts })
    }

    /// The cut numbers, ascending.
    pub fn cuts(&self) -> &[u64] {
        &self.cuts
    }

    pub fn min_cut(&self) -> u64 {
        self.cuts[0]
    }

    pub fn max_cut(&self) -> u64 {
        *self.cuts.last().unwrap()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.cuts.binary_search(&d).is_ok()
    }
}

impl FromStr for CutSet {
    type Err = Error;

    /// Parses a comma-separated list such as `"1,6"`; order-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let cuts = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidCutSet(format!("bad cut number {part:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::new(cuts)
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.cuts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_validates() {
        let c = CutSet::new(vec![6, 1]).unwrap();
        assert_eq!(c.cuts(), &[1, 6]);
        assert_eq!(c.min_cut(), 1);
        assert_eq!(c.max_cut(), 6);
        assert!(c.contains(6));
        assert!(!c.contains(2));

        assert!(CutSet::new(vec![]).is_err());
        assert!(CutSet::new(vec![0, 1]).is_err());
        assert!(CutSet::new(vec![3, 3]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let c: CutSet = "6, 1".parse().unwrap();
        assert_eq!(c, CutSet::new(vec![1, 6]).unwrap());
        assert_eq!(c.to_string(), "{1,6}");
        assert!("1,,6".parse::<CutSet>().is_err());
        assert!("1,6,6".parse::<CutSet>().is_err());
        assert!("".parse::<CutSet>().is_err());
    }
}
