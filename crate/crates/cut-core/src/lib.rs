//! Analysis toolkit for CUT, an impartial game played on piles of tokens.
//!
//! A position is a collection of piles. A move picks one pile and cuts it
//! with `d` cuts into exactly `d + 1` nonempty piles, where `d` is drawn
//! from a fixed set of allowed cut numbers, the *cut-set* 𝒞. Under normal
//! play the player who cannot move loses; single-token piles are dead, so
//! play ends when every pile holds one token.
//!
//! The crate computes Sprague-Grundy values of piles, nim-sets (the sets of
//! values reachable by cutting a pile into a prescribed number of parts),
//! closed forms for the cut-set families with known solutions, and winning
//! moves for arbitrary positions.
//!
//! Module guide:
//!
//! * [`engine`]: exact Grundy values and nim-sets by dynamic programming.
//! * [`closedform`]: recognized cut-set families and their formulas.
//! * [`periodicity`]: arithmetic-period detection in value sequences.
//! * [`correspondence`]: the structure map relating `{1,2c}` games to `{1,6}`.
//! * [`strategy`]: position evaluation and winning-move search.
//! * [`report`]: verdict documents produced by the verification sweeps.

pub mod closedform;
pub mod correspondence;
pub mod engine;
pub mod periodicity;
pub mod report;
pub mod strategy;

mod error;

pub use error::{Error, Result};
