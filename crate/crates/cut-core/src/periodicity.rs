//! Detection and verification of arithmetic-periodic structure in
//! nim-sequences: a preperiod, a period `P`, and a saltus `s` such that
//! `seq(n + P) = seq(n) + s` for every position past the preperiod.
//!
//! A saltus of 0 is plain periodicity; every result is confirmed only on
//! the examined window and never claimed beyond it.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a detection run over a finite sequence prefix.
///
/// `verified_up_to` is the window actually examined (the prefix length).
/// When confirmed, `seq(n + period) = seq(n) + saltus` held for every
/// `preperiod < n <= verified_up_to - period` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PeriodReport {
    ConfirmedOnWindow {
        preperiod: u64,
        period: u64,
        saltus: u64,
        verified_up_to: u64,
    },
    NotFound {
        verified_up_to: u64,
    },
}

impl PeriodReport {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, PeriodReport::ConfirmedOnWindow { .. })
    }

    /// `(preperiod, period, saltus)` when confirmed.
    pub fn shape(&self) -> Option<(u64, u64, u64)> {
        match *self {
            PeriodReport::ConfirmedOnWindow { preperiod, period, saltus, .. } => {
                Some((preperiod, period, saltus))
            }
            PeriodReport::NotFound { .. } => None,
        }
    }
}

impl fmt::Display for PeriodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodReport::ConfirmedOnWindow { preperiod, period, saltus, verified_up_to } => {
                write!(
                    f,
                    "preperiod={preperiod} period={period} saltus={saltus} \
                     (confirmed on window n <= {verified_up_to})"
                )
            }
            PeriodReport::NotFound { verified_up_to } => {
                write!(f, "no arithmetic period found (window n <= {verified_up_to})")
            }
        }
    }
}

/// Searches `seq` (1-based positions 1..=len) for the lexicographically
/// smallest `(preperiod, period)` such that the arithmetic-period relation
/// holds over the whole remaining window with a constant nonnegative
/// saltus, and the window holds at least `min_confirm_periods` full
/// periods past the preperiod.
///
/// The saltus is pinned by the first offset pair,
/// `seq(preperiod + period + 1) - seq(preperiod + 1)`; candidates where
/// that difference is negative are rejected. Preperiods are searched up
/// to a third of the window; a structure that starts later than that is
/// not distinguishable from noise at this window size.
///
/// # Panics
///
/// Panics if `seq` is empty or `min_confirm_periods < 2`.
pub fn detect(seq: &[u64], min_confirm_periods: u64) -> PeriodReport {
    assert!(!seq.is_empty(), "cannot detect a period in an empty sequence");
    assert!(min_confirm_periods >= 2, "need at least 2 confirming periods");

    let len = seq.len() as u64;
    for preperiod in 0..=len / 3 {
        'candidate: for period in 1..=(len - preperiod) / min_confirm_periods {
            let base = seq[preperiod as usize];
            let step = seq[(preperiod + period) as usize];
            if step < base {
                continue;
            }
            let saltus = step - base;
            for i in preperiod..len - period {
                if seq[(i + period) as usize] != seq[i as usize] + saltus {
                    continue 'candidate;
                }
            }
            return PeriodReport::ConfirmedOnWindow {
                preperiod,
                period,
                saltus,
                verified_up_to: len,
            };
        }
    }
    PeriodReport::NotFound { verified_up_to: len }
}

/// True iff `seq(n + period) = seq(n) + saltus` for every 1-based position
/// `n` with `preperiod < n <= len - period`. An empty range is vacuously
/// true.
///
/// # Panics
///
/// Panics if `period == 0`.
pub fn verify(seq: &[u64], preperiod: u64, period: u64, saltus: i64) -> bool {
    assert!(period >= 1, "period must be positive");
    let len = seq.len() as u64;
    (preperiod..len.saturating_sub(period)).all(|i| {
        seq[(i + period) as usize] as i128 == seq[i as usize] as i128 + saltus as i128
    })
}
