//! Multi-pile position analysis: position values by XOR over piles, P/N
//! classification, and winning-move search.
//!
//! A position's value is the XOR of its single-pile values. Piles beyond
//! the engine table budget fall back to the closed form when the cut-set
//! is a recognized family; value queries therefore scale far past the
//! table cap. Move *search* cannot (it must enumerate a replacement), so
//! [`best_move`] is capped by pile size and reports a resource limit
//! beyond the cap.

use std::fmt;

use crate::closedform::{classify_cutset, family_grundy, ClosedFormFamily};
use crate::engine::{CutSet, GrundyTable, PilePartition};
use crate::{Error, Result};

/// Pile-size cap for [`best_move`] search.
pub const DEFAULT_MOVE_CAP: u64 = 10_000;

/// A multi-pile position under one cut-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    piles: Vec<u64>,
    cutset: CutSet,
}

impl Position {
    pub fn new(piles: Vec<u64>, cutset: CutSet) -> Result<Self> {
        if piles.is_empty() {
            return Err(Error::InvalidPosition("a position needs at least one pile".into()));
        }
        if piles.contains(&0) {
            return Err(Error::InvalidPosition("pile sizes start at 1".into()));
        }
        Ok(Position { piles, cutset })
    }

    pub fn piles(&self) -> &[u64] {
        &self.piles
    }

    pub fn cutset(&self) -> &CutSet {
        &self.cutset
    }
}

/// Replace pile `pile_index` by the parts of `replacement`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub pile_index: usize,
    pub replacement: PilePartition,
}

/// Who wins with optimal play: the previous player (value 0) or the next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositionClass {
    P,
    N,
}

impl fmt::Display for PositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositionClass::P => write!(f, "P-position"),
            PositionClass::N => write!(f, "N-position"),
        }
    }
}

fn check_table(pos: &Position, table: &GrundyTable) -> Result<()> {
    if table.cutset() != pos.cutset() {
        return Err(Error::Domain(format!(
            "table built for {} cannot answer a position under {}",
            table.cutset(),
            pos.cutset()
        )));
    }
    Ok(())
}

/// Single-pile value: engine when the pile fits the table budget, closed
/// form otherwise.
fn pile_value(
    n: u64,
    table: &mut GrundyTable,
    family: Option<ClosedFormFamily>,
) -> Result<u64> {
    if table.within_budget(n) {
        return table.grundy(n);
    }
    match family {
        Some(family) => family_grundy(n, family),
        None => Err(Error::ResourceLimit(format!(
            "pile {n} exceeds the table budget and {} has no known closed form",
            table.cutset()
        ))),
    }
}

/// XOR over piles of the single-pile value.
///
/// ```
/// use cut_core::engine::{CutSet, GrundyTable};
/// use cut_core::strategy::{position_value, Position};
///
/// let cuts = CutSet::new(vec![1, 6]).unwrap();
/// let mut table = GrundyTable::new(cuts.clone());
/// let pos = Position::new(vec![14, 19], cuts).unwrap();
/// assert_eq!(position_value(&pos, &mut table).unwrap(), 7);
/// ```
pub fn position_value(pos: &Position, table: &mut GrundyTable) -> Result<u64> {
    check_table(pos, table)?;
    let family = classify_cutset(pos.cutset());
    let mut value = 0;
    for &n in pos.piles() {
        value ^= pile_value(n, table, family)?;
    }
    Ok(value)
}

/// P exactly when the position value is 0.
pub fn classify_position(pos: &Position, table: &mut GrundyTable) -> Result<PositionClass> {
    Ok(if position_value(pos, table)? == 0 {
        PositionClass::P
    } else {
        PositionClass::N
    })
}

/// Lexicographically smallest partition of `n` into exactly `p` parts with
/// value `t`, or `None` when `t` is unreachable.
///
/// Greedy construction: each slot takes the smallest part for which some
/// completion of the remainder reaches the residual target. The first
/// feasible part equals the smallest minimum part over all value-`t`
/// partitions, so the assembled parts come out nondecreasing and lex-least.
fn lexmin_split(table: &mut GrundyTable, n: u64, p: u64, t: u64) -> Result<Option<PilePartition>> {
    table.nim_set(n, p)?;
    let mut parts = Vec::with_capacity(p as usize);
    let (mut rem, mut slots, mut want) = (n, p, t);
    while slots > 1 {
        let mut found = false;
        for h in 1..=rem - slots + 1 {
            let g = table.get(h).expect("prefix built");
            let completions = table.get_nim_set(rem - h, slots - 1).expect("prefix built");
            if completions.contains(want ^ g) {
                parts.push(h);
                rem -= h;
                want ^= g;
                slots -= 1;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    debug_assert_eq!(table.get(rem), Some(want));
    parts.push(rem);
    Ok(Some(PilePartition::new(parts)?))
}

/// A move to a value-0 position when one exists.
///
/// Returns `None` on P-positions (including terminal all-ones positions).
/// On N-positions a balancing move always exists and the smallest
/// `pile_index` with one wins the tie, then the lexicographically smallest
/// replacement across all its part counts.
///
/// Piles larger than `move_cap` cannot be searched; reaching one before a
/// move has been found is a resource-limit error, since the canonical
/// answer could lie on the unsearchable pile.
pub fn best_move(pos: &Position, table: &mut GrundyTable, move_cap: u64) -> Result<Option<Move>> {
    let value = position_value(pos, table)?;
    if value == 0 {
        return Ok(None);
    }
    let family = classify_cutset(pos.cutset());
    for (pile_index, &n) in pos.piles().iter().enumerate() {
        if n > move_cap {
            return Err(Error::ResourceLimit(format!(
                "winning move may sit on pile {pile_index} of size {n}, \
                 beyond the search cap {move_cap}"
            )));
        }
        let t = value ^ pile_value(n, table, family)?;
        let mut best: Option<PilePartition> = None;
        for &d in pos.cutset().cuts() {
            let p = d + 1;
            if p > n || !table.nim_set(n, p)?.contains(t) {
                continue;
            }
            let candidate = lexmin_split(table, n, p, t)?
                .expect("membership in the nim-set guarantees a construction");
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        if let Some(replacement) = best {
            return Ok(Some(Move { pile_index, replacement }));
        }
    }
    unreachable!("a nonzero position value always leaves a balancing replacement");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(cuts: &[u64], piles: &[u64]) -> (Position, GrundyTable) {
        let cutset = CutSet::new(cuts.to_vec()).unwrap();
        let table = GrundyTable::new(cutset.clone());
        (Position::new(piles.to_vec(), cutset).unwrap(), table)
    }

    /// Value of `pos` with pile `index` replaced by `parts`.
    fn value_after(pos: &Position, table: &mut GrundyTable, mv: &Move) -> u64 {
        let mut piles: Vec<u64> = pos.piles().to_vec();
        let replaced = piles.remove(mv.pile_index);
        assert_eq!(replaced, mv.replacement.total());
        piles.extend_from_slice(mv.replacement.parts());
        let next = Position::new(piles, pos.cutset().clone()).unwrap();
        position_value(&next, table).unwrap()
    }

    #[test]
    fn position_values_xor_over_piles() {
        let (pos, mut table) = setup(&[1, 6], &[1, 1, 1]);
        assert_eq!(position_value(&pos, &mut table).unwrap(), 0);
        let (pos, mut table) = setup(&[1, 6], &[14, 19]);
        assert_eq!(position_value(&pos, &mut table).unwrap(), 7);
        let (pos, mut table) = setup(&[1, 6], &[13, 3, 3, 2, 2, 2, 2]);
        assert_eq!(position_value(&pos, &mut table).unwrap(), 1);
    }

    #[test]
    fn classification_follows_the_value() {
        let (pos, mut table) = setup(&[1, 6], &[1, 1]);
        assert_eq!(classify_position(&pos, &mut table).unwrap(), PositionClass::P);
        let (pos, mut table) = setup(&[1, 6], &[2]);
        assert_eq!(classify_position(&pos, &mut table).unwrap(), PositionClass::N);
        let (pos, mut table) = setup(&[1, 6], &[2, 2]);
        assert_eq!(classify_position(&pos, &mut table).unwrap(), PositionClass::P);
    }

    #[test]
    fn best_move_reaches_zero_and_prefers_low_indices() {
        let (pos, mut table) = setup(&[1, 6], &[2]);
        let mv = best_move(&pos, &mut table, DEFAULT_MOVE_CAP).unwrap().unwrap();
        assert_eq!(mv.pile_index, 0);
        assert_eq!(mv.replacement.parts(), &[1, 1]);

        let (pos, mut table) = setup(&[1, 6], &[1, 1]);
        assert_eq!(best_move(&pos, &mut table, DEFAULT_MOVE_CAP).unwrap(), None);

        let (pos, mut table) = setup(&[1, 6], &[8]);
        let mv = best_move(&pos, &mut table, DEFAULT_MOVE_CAP).unwrap().unwrap();
        assert_eq!(mv.replacement.parts(), &[2, 6]);
        assert_eq!(value_after(&pos, &mut table, &mv), 0);

        // Pile 0 has a balancing 7-part split; pile 1's simpler (1,1) split
        // must not preempt it.
        let (pos, mut table) = setup(&[1, 6], &[8, 2]);
        let mv = best_move(&pos, &mut table, DEFAULT_MOVE_CAP).unwrap().unwrap();
        assert_eq!(mv.pile_index, 0);
        assert_eq!(mv.replacement.parts(), &[1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(value_after(&pos, &mut table, &mv), 0);
    }

    #[test]
    fn best_move_is_exhaustively_sound_on_a_small_window() {
        let cutset = CutSet::new(vec![1, 4]).unwrap();
        let mut table = GrundyTable::new(cutset.clone());
        for a in 1..=12 {
            for b in a..=12 {
                let pos = Position::new(vec![a, b], cutset.clone()).unwrap();
                let value = position_value(&pos, &mut table).unwrap();
                let mv = best_move(&pos, &mut table, DEFAULT_MOVE_CAP).unwrap();
                match mv {
                    None => assert_eq!(value, 0, "piles ({a},{b})"),
                    Some(mv) => {
                        assert_ne!(value, 0, "piles ({a},{b})");
                        assert_eq!(value_after(&pos, &mut table, &mv), 0, "piles ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn oversized_piles_use_the_closed_form_for_values_only() {
        let cutset = CutSet::new(vec![1, 6]).unwrap();
        let mut table = GrundyTable::with_limit(cutset.clone(), 200);
        let pos = Position::new(vec![5_000, 5_000, 3], cutset.clone()).unwrap();
        // Equal huge piles cancel; the value comes from the closed form.
        assert_eq!(position_value(&pos, &mut table).unwrap(), 0);

        let pos = Position::new(vec![5_000], cutset).unwrap();
        let value = position_value(&pos, &mut table).unwrap();
        assert_eq!(value, crate::closedform::theorem1_grundy(5_000, 3).unwrap());
        // Move search on the huge pile is an honest resource limit.
        if value != 0 {
            assert!(matches!(
                best_move(&pos, &mut table, DEFAULT_MOVE_CAP),
                Err(Error::ResourceLimit(_))
            ));
        }
    }

    #[test]
    fn unrecognized_cutsets_cannot_scale_past_the_budget() {
        let cutset = CutSet::new(vec![1, 2]).unwrap();
        let mut table = GrundyTable::with_limit(cutset.clone(), 50);
        let pos = Position::new(vec![1_000], cutset).unwrap();
        assert!(matches!(
            position_value(&pos, &mut table),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn mismatched_table_is_rejected() {
        let (pos, _) = setup(&[1, 6], &[3]);
        let mut other = GrundyTable::new(CutSet::new(vec![1, 4]).unwrap());
        assert!(position_value(&pos, &mut other).is_err());
    }

    #[test]
    fn invalid_positions_are_rejected() {
        let cuts = CutSet::new(vec![1, 6]).unwrap();
        assert!(Position::new(vec![], cuts.clone()).is_err());
        assert!(Position::new(vec![3, 0], cuts).is_err());
    }
}
