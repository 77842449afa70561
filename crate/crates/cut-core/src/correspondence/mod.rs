//! Structural classification of pile sizes and partitions for 𝒞 = {1,2c},
//! and the index correspondence φ that carries the {1,2c} nim-sets onto
//! the {1,6} nim-sets.
//!
//! The nim-set columns for {1,2c} consist of alternating subsequences. The
//! positions where a subsequence begins are the *innumbers* (n ≡ 1 mod 2c
//! or n ≡ 4c+2 mod 12c); the positions where one ends are the *outnumbers*
//! (n ≡ 0 mod 2c or n ≡ 4c+1 mod 12c). Note the two families meet: an
//! n ≡ 4c+1 (mod 12c) satisfies both predicates, since 4c+1 ≡ 1 (mod 2c).
//! Such a position both ends one subsequence and begins the next;
//! [`classify_number`] tags it as an outnumber.
//!
//! A partition is *entering* when every part is an innumber, *exiting*
//! when every part is an outnumber, and *intermediate* otherwise. Floors
//! and ceilings round parts to the nearest innumber below / outnumber
//! above. φ compresses each length-2c block of positions onto a length-6
//! block, sending block boundaries to block boundaries.
//!
//! Bounded sweeps that check the correspondence claims against the engine
//! live in the `checks` submodule and are re-exported here.

use crate::engine::PilePartition;
use crate::{Error, Result};

mod checks;

pub use checks::{
    verify_corollary_two, verify_lemma_seven, verify_lemma_three, verify_map_lemma,
    verify_rem1, verify_stick, verify_theorem5,
};

/// Single tag for a pile size; see [`classify_number`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberClass {
    Innumber,
    Outnumber,
    Neither,
}

/// Single tag for a partition; see [`classify_partition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionClass {
    Entering,
    Exiting,
    Intermediate,
}

/// True iff `n` begins an alternating subsequence: n ≡ 1 (mod 2c) or
/// n ≡ 4c+2 (mod 12c).
///
/// This is the raw residue predicate; it overlaps [`is_outnumber`] at
/// n ≡ 4c+1 (mod 12c).
///
/// # Panics
///
/// Panics if `n < 1` or `c < 2`.
pub fn is_innumber(n: u64, c: u64) -> bool {
    assert!(n >= 1 && c >= 2);
    n % (2 * c) == 1 || n % (12 * c) == 4 * c + 2
}

/// True iff `n` ends an alternating subsequence: n ≡ 0 (mod 2c) or
/// n ≡ 4c+1 (mod 12c).
///
/// # Panics
///
/// Panics if `n < 1` or `c < 2`.
pub fn is_outnumber(n: u64, c: u64) -> bool {
    assert!(n >= 1 && c >= 2);
    n.is_multiple_of(2 * c) || n % (12 * c) == 4 * c + 1
}

/// Tags `n` as innumber, outnumber, or neither under 𝒞 = {1,2c}.
///
/// At the overlap residue n ≡ 4c+1 (mod 12c) the tag is `Outnumber`; every
/// other position satisfies at most one predicate, so the tag classes
/// partition the positive integers.
///
/// # Panics
///
/// Panics if `n < 1` or `c < 2`.
pub fn classify_number(n: u64, c: u64) -> NumberClass {
    if is_outnumber(n, c) {
        NumberClass::Outnumber
    } else if is_innumber(n, c) {
        NumberClass::Innumber
    } else {
        NumberClass::Neither
    }
}

/// True iff every part of `o` is an innumber (raw predicate).
pub fn is_entering(o: &PilePartition, c: u64) -> bool {
    o.parts().iter().all(|&h| is_innumber(h, c))
}

/// True iff every part of `o` is an outnumber (raw predicate).
pub fn is_exiting(o: &PilePartition, c: u64) -> bool {
    o.parts().iter().all(|&h| is_outnumber(h, c))
}

/// Tags a partition as entering, exiting, or intermediate.
///
/// A partition whose parts all lie on the overlap residue satisfies both
/// raw predicates; such a partition is tagged `Entering`. The raw
/// predicates [`is_entering`] and [`is_exiting`] are available where both
/// roles matter.
pub fn classify_partition(o: &PilePartition, c: u64) -> PartitionClass {
    if is_entering(o, c) {
        PartitionClass::Entering
    } else if is_exiting(o, c) {
        PartitionClass::Exiting
    } else {
        PartitionClass::Intermediate
    }
}

/// Greatest innumber ≤ `n`. Total: 1 is an innumber, so every n ≥ 1 has
/// a floor. Consecutive innumbers are at most 2c apart, so the scan is
/// O(c).
pub fn floor_number(n: u64, c: u64) -> u64 {
    assert!(n >= 1 && c >= 2);
    let mut h = n;
    while !is_innumber(h, c) {
        h -= 1;
    }
    h
}

/// Least outnumber ≥ `n`. Consecutive outnumbers are at most 2c apart.
pub fn ceil_number(n: u64, c: u64) -> u64 {
    assert!(n >= 1 && c >= 2);
    let mut h = n;
    while !is_outnumber(h, c) {
        h += 1;
    }
    h
}

/// Part-wise floor of a partition, with one exceptional clause: when the
/// partition has exactly 3 parts and all three floors are ≡ 4c+2
/// (mod 12c), the two smallest floors are lowered by one more.
///
/// The clause keeps the floor usable as a lower bound in the 3-part
/// sandwich argument; without it the all-(4c+2) floor overshoots.
///
/// ```
/// use cut_core::correspondence::floor_partition;
/// use cut_core::engine::PilePartition;
///
/// let o = PilePartition::new(vec![14, 14, 14]).unwrap();
/// let floored = floor_partition(&o, 3);
/// assert_eq!(floored.parts(), &[13, 13, 14]);
/// ```
pub fn floor_partition(o: &PilePartition, c: u64) -> PilePartition {
    let mut floors: Vec<u64> = o.parts().iter().map(|&h| floor_number(h, c)).collect();
    if floors.len() == 3 && floors.iter().all(|&f| f % (12 * c) == 4 * c + 2) {
        floors[0] -= 1;
        floors[1] -= 1;
    }
    // floor_number is monotone, so the floors of a sorted partition are
    // sorted; the clause lowers only the two smallest.
    PilePartition::new(floors).expect("floors of positive parts are positive")
}

/// Part-wise ceiling of a partition: least outnumber ≥ each part. No
/// exceptional clause.
pub fn ceil_partition(o: &PilePartition, c: u64) -> PilePartition {
    let ceils: Vec<u64> = o.parts().iter().map(|&h| ceil_number(h, c)).collect();
    PilePartition::new(ceils).expect("ceilings of positive parts are positive")
}

/// The block-compression table: positions 1 and 2 of a length-2c block
/// keep their index, the last two map to 5 and 6, and the interior
/// collapses to 3 (odd) or 4 (even).
///
/// At c = 3 the blocks already have length 6 and the table is the
/// identity.
///
/// # Panics
///
/// Panics unless `c >= 3` and `1 <= r <= 2c`.
pub fn r_prime(r: u64, c: u64) -> u64 {
    assert!(c >= 3, "the correspondence is defined for c >= 3");
    assert!((1..=2 * c).contains(&r));
    match r {
        1 => 1,
        2 => 2,
        _ if r == 2 * c - 1 => 5,
        _ if r == 2 * c => 6,
        _ if r % 2 == 1 => 3,
        _ => 4,
    }
}

/// The index correspondence φ_p: writing n = 2cq + r + p − 1 with
/// 1 ≤ r ≤ 2c, returns 6q + r′ + p − 1.
///
/// Maps the column of p-part nim-sets for {1,2c} onto the column for
/// {1,6}, block by block.
///
/// ```
/// use cut_core::correspondence::phi;
///
/// assert_eq!(phi(14, 1, 5).unwrap(), 10);
/// assert_eq!(phi(1, 1, 7).unwrap(), 1);
/// assert_eq!(phi(60, 1, 5).unwrap(), 36);
/// ```
pub fn phi(n: u64, p: u64, c: u64) -> Result<u64> {
    if c < 3 {
        return Err(Error::Domain(format!(
            "the correspondence requires c >= 3, got {c}"
        )));
    }
    if p < 1 {
        return Err(Error::Domain("pile count must be positive".into()));
    }
    if n < p {
        return Err(Error::Domain(format!(
            "phi_{p} is defined for n >= p, got n={n}"
        )));
    }
    let k = n - p + 1;
    let q = (k - 1) / (2 * c);
    let r = (k - 1) % (2 * c) + 1;
    Ok(6 * q + r_prime(r, c) + p - 1)
}

/// A fixed (c, p) slice of the correspondence, for callers that apply the
/// same map across a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiMap {
    c: u64,
    p: u64,
}

impl PhiMap {
    pub fn new(c: u64, p: u64) -> Result<Self> {
        if c < 3 {
            return Err(Error::Domain(format!(
                "the correspondence requires c >= 3, got {c}"
            )));
        }
        if p < 1 {
            return Err(Error::Domain("pile count must be positive".into()));
        }
        Ok(PhiMap { c, p })
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// φ_p(n); domain error when `n < p`.
    pub fn apply(&self, n: u64) -> Result<u64> {
        phi(n, self.p, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(parts: &[u64]) -> PilePartition {
        PilePartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn innumbers_and_outnumbers_match_the_c3_lists() {
        let inns: Vec<u64> = (1..=36).filter(|&n| is_innumber(n, 3)).collect();
        assert_eq!(inns, vec![1, 7, 13, 14, 19, 25, 31]);
        let outs: Vec<u64> = (1..=36).filter(|&n| is_outnumber(n, 3)).collect();
        assert_eq!(outs, vec![6, 12, 13, 18, 24, 30, 36]);
    }

    #[test]
    fn overlap_positions_are_tagged_outnumber() {
        // 13 = 4c+1 at c=3 lies in both raw classes; the tag picks one.
        assert!(is_innumber(13, 3) && is_outnumber(13, 3));
        assert_eq!(classify_number(13, 3), NumberClass::Outnumber);
        assert_eq!(classify_number(2, 3), NumberClass::Neither);
        assert_eq!(classify_number(14, 3), NumberClass::Innumber);
        assert_eq!(classify_number(6, 3), NumberClass::Outnumber);
    }

    #[test]
    fn raw_classes_overlap_only_at_the_known_residue() {
        for c in 2..=8 {
            for n in 1..=24 * c {
                if is_innumber(n, c) && is_outnumber(n, c) {
                    assert_eq!(n % (12 * c), 4 * c + 1, "c={c} n={n}");
                    assert_eq!(classify_number(n, c), NumberClass::Outnumber);
                }
            }
        }
    }

    #[test]
    fn partition_tags() {
        assert_eq!(classify_partition(&partition(&[7, 1]), 3), PartitionClass::Entering);
        assert_eq!(classify_partition(&partition(&[12, 6]), 3), PartitionClass::Exiting);
        assert_eq!(
            classify_partition(&partition(&[5, 4]), 3),
            PartitionClass::Intermediate
        );
        // All parts on the overlap residue: both raw predicates hold.
        let both = partition(&[13, 13]);
        assert!(is_entering(&both, 3) && is_exiting(&both, 3));
        assert_eq!(classify_partition(&both, 3), PartitionClass::Entering);
    }

    #[test]
    fn floors_and_ceilings_round_to_the_lists() {
        assert_eq!(floor_partition(&partition(&[15, 8]), 3), partition(&[14, 7]));
        assert_eq!(floor_partition(&partition(&[1, 1]), 3), partition(&[1, 1]));
        assert_eq!(ceil_partition(&partition(&[15, 8]), 3), partition(&[18, 12]));
        assert_eq!(ceil_partition(&partition(&[6, 6]), 3), partition(&[6, 6]));
        assert_eq!(ceil_partition(&partition(&[14, 14]), 3), partition(&[18, 18]));
    }

    #[test]
    fn three_part_clause_fires_only_when_all_floors_align() {
        assert_eq!(
            floor_partition(&partition(&[14, 14, 14]), 3),
            partition(&[13, 13, 14])
        );
        assert_eq!(
            floor_partition(&partition(&[50, 50, 50]), 3),
            partition(&[49, 49, 50])
        );
        // Two parts, or a fourth part, leave the plain part-wise floor.
        assert_eq!(floor_partition(&partition(&[14, 14]), 3), partition(&[14, 14]));
        assert_eq!(
            floor_partition(&partition(&[14, 14, 14, 14]), 3),
            partition(&[14, 14, 14, 14])
        );
        // A 3-part floor with one part off the residue is untouched.
        assert_eq!(
            floor_partition(&partition(&[8, 14, 14]), 3),
            partition(&[7, 14, 14])
        );
    }

    #[test]
    fn floor_and_ceiling_sandwich_the_identity() {
        for c in [2u64, 3, 5] {
            for n in 1..=30 * c {
                let f = floor_number(n, c);
                let g = ceil_number(n, c);
                assert!(f <= n && n <= g);
                assert!(is_innumber(f, c) && is_outnumber(g, c));
                // Idempotence of the part-wise maps.
                assert_eq!(floor_number(f, c), f);
                assert_eq!(ceil_number(g, c), g);
            }
        }
    }

    #[test]
    fn block_compression_row_matches_the_display() {
        let row: Vec<u64> = (1..=10).map(|r| r_prime(r, 5)).collect();
        assert_eq!(row, vec![1, 2, 3, 4, 3, 4, 3, 4, 5, 6]);
        let identity: Vec<u64> = (1..=6).map(|r| r_prime(r, 3)).collect();
        assert_eq!(identity, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn phi_known_values() {
        assert_eq!(phi(14, 1, 5).unwrap(), 10);
        assert_eq!(phi(1, 1, 4).unwrap(), 1);
        for c in 3..=6 {
            assert_eq!(phi(12 * c, 1, c).unwrap(), 36);
        }
        assert_eq!(phi(41, 2, 5).unwrap(), 25);
    }

    #[test]
    fn phi_is_the_identity_at_c_three() {
        for p in 1..=4 {
            for n in p..=72 {
                assert_eq!(phi(n, p, 3).unwrap(), n);
            }
        }
    }

    #[test]
    fn phi_rejects_bad_domain() {
        assert!(phi(10, 1, 2).is_err());
        assert!(phi(3, 4, 5).is_err());
        assert!(PhiMap::new(2, 1).is_err());
        let map = PhiMap::new(5, 2).unwrap();
        assert_eq!(map.apply(41).unwrap(), 25);
        assert!(map.apply(1).is_err());
    }
}
