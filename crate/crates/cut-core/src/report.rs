//! Verdict documents produced by the bounded checkers.
//!
//! Every checker in this crate is an empirical sweep over a finite window.
//! It either confirms the claimed identity on the whole window or reports
//! the first counterexample it finds; it never claims anything beyond the
//! window it actually examined. A [`Verdict`] records which check ran, the
//! parameters and window it ran over, how many cases were examined, and the
//! outcome.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a bounded check.
///
/// Counterexamples are reported as preformatted strings because each check
/// has its own natural coordinates (a pile size, a partition, a tuple of
/// heights). The string always names the offending cell and the two values
/// that disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum VerdictStatus {
    /// The identity held at every examined case.
    Confirmed,
    /// The identity failed; `counterexample` describes the first failing
    /// case in the check's sweep order.
    Refuted { counterexample: String },
}

/// Result of running one checker over one window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Name of the check that ran.
    pub check: String,
    /// Numeric parameters of the sweep, keyed by name. A `BTreeMap` keeps
    /// serialization order stable across runs.
    pub parameters: BTreeMap<String, u64>,
    /// Human-readable description of the examined window.
    pub window: String,
    /// Number of cases examined. On refutation this counts the cases up to
    /// and including the failing one.
    pub cases: u64,
    #[serde(flatten)]
    pub status: VerdictStatus,
}

impl Verdict {
    pub fn confirmed(
        check: &str,
        parameters: BTreeMap<String, u64>,
        window: String,
        cases: u64,
    ) -> Self {
        Verdict {
            check: check.to_owned(),
            parameters,
            window,
            cases,
            status: VerdictStatus::Confirmed,
        }
    }

    pub fn refuted(
        check: &str,
        parameters: BTreeMap<String, u64>,
        window: String,
        cases: u64,
        counterexample: String,
    ) -> Self {
        Verdict {
            check: check.to_owned(),
            parameters,
            window,
            cases,
            status: VerdictStatus::Refuted { counterexample },
        }
    }

    pub fn is_confirmed(&self) -> bool {
        matches!(self.status, VerdictStatus::Confirmed)
    }

    /// The first failing case, present exactly when the check refuted.
    pub fn counterexample(&self) -> Option<&str> {
        match &self.status {
            VerdictStatus::Confirmed => None,
            VerdictStatus::Refuted { counterexample } => Some(counterexample),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        for (key, value) in &self.parameters {
            write!(f, " {key}={value}")?;
        }
        write!(f, " [{}]: ", self.window)?;
        match &self.status {
            VerdictStatus::Confirmed => write!(f, "confirmed ({} cases)", self.cases),
            VerdictStatus::Refuted { counterexample } => {
                write!(f, "refuted: {counterexample}")
            }
        }
    }
}

/// Convenience for building the `parameters` map without repeating
/// `String::from` at every call site.
pub fn params<const N: usize>(pairs: [(&str, u64); N]) -> BTreeMap<String, u64> {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_owned(), *v))
        .collect()
}
