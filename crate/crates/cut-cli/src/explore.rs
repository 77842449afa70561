//! Exploration of the four cut-set families whose nim-sequences are still
//! open. Everything here is window-bounded: sequences are computed by the
//! engine, compared against the conjectured target where one exists, and
//! labeled by what held on the window, never beyond it.

use cut_core::engine::{CutSet, GrundyTable};
use cut_core::periodicity::detect;
use cut_core::{Error, Result};

use crate::output::{ComparisonDoc, DivergenceDoc, ExploreDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        }
    }

    pub fn default_window(self) -> u64 {
        match self {
            Family::A | Family::B => 80,
            Family::C => 120,
            Family::D => 36,
        }
    }
}

fn evens_and_odds(rest: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let evens = rest.iter().copied().filter(|d| d % 2 == 0).collect();
    let odds = rest.iter().copied().filter(|d| d % 2 == 1).collect();
    (evens, odds)
}

/// Checks the family's membership predicate, returning the cut counts
/// other than the family's fixed prefix.
fn membership(family: Family, cuts: &CutSet) -> Result<()> {
    let reject = |why: &str| -> Result<()> {
        Err(Error::Domain(format!("{} is not in family {}: {why}", cuts, family.tag())))
    };
    let has = |d: u64| cuts.contains(d);
    match family {
        Family::A => {
            // {1,3} plus a nonempty set of evens >= 4, plus optional odds >= 5.
            if !has(1) || !has(3) {
                return reject("it must contain 1 and 3");
            }
            let rest: Vec<u64> = cuts.cuts().iter().copied().filter(|&d| d != 1 && d != 3).collect();
            let (evens, odds) = evens_and_odds(&rest);
            if evens.is_empty() || evens.iter().any(|&d| d < 4) {
                return reject("it needs at least one even cut count, all of them >= 4");
            }
            if odds.iter().any(|&d| d < 5) {
                return reject("its odd cut counts beyond 3 must be >= 5");
            }
        }
        Family::B => {
            // {1} plus nonempty evens >= 4 and nonempty odds >= 5.
            if !has(1) || has(3) {
                return reject("it must contain 1 and not 3");
            }
            let rest: Vec<u64> = cuts.cuts().iter().copied().filter(|&d| d != 1).collect();
            let (evens, odds) = evens_and_odds(&rest);
            if evens.is_empty() || evens.iter().any(|&d| d < 4) {
                return reject("it needs at least one even cut count, all of them >= 4");
            }
            if odds.is_empty() || odds.iter().any(|&d| d < 5) {
                return reject("it needs at least one odd cut count >= 5");
            }
        }
        Family::C => {
            if !has(1) || !has(2) || has(3) || cuts.cuts() == [1, 2] {
                return reject("it must contain 1 and 2, avoid 3, and exceed {1,2}");
            }
        }
        Family::D => {
            if cuts.cuts() != [1, 2] {
                return reject("the family is exactly {1,2}");
            }
        }
    }
    Ok(())
}

fn engine_sequence(cuts: &CutSet, n_max: u64) -> Result<Vec<u64>> {
    let mut table = GrundyTable::new(cuts.clone());
    (1..=n_max).map(|n| table.grundy(n)).collect()
}

fn compare(sequence: &[u64], target_values: &[u64]) -> (u64, Option<DivergenceDoc>) {
    for (i, (&engine, &target)) in sequence.iter().zip(target_values).enumerate() {
        if engine != target {
            return (i as u64, Some(DivergenceDoc { n: i as u64 + 1, engine, target }));
        }
    }
    (sequence.len() as u64, None)
}

/// Computes the family's window-bounded report.
pub fn run_family(family: Family, cuts: &CutSet, n_max: u64) -> Result<ExploreDoc> {
    membership(family, cuts)?;
    let sequence = engine_sequence(cuts, n_max)?;
    let detector = detect(&sequence, 3);

    let comparison = match family {
        Family::A => {
            // Conjectured form (0,1)^c(+2), where 2c is the least even cut
            // count in the set.
            let x = cuts.cuts().iter().copied().find(|d| d % 2 == 0).expect("member of A");
            let target_values: Vec<u64> =
                (1..=n_max).map(|n| 2 * ((n - 1) / x) + (n - 1) % 2).collect();
            let (agreement_up_to, divergence) = compare(&sequence, &target_values);
            Some(ComparisonDoc {
                target: format!("(0,1)^{}(+2)", x / 2),
                hypothesis: None,
                agreement_up_to,
                divergence,
            })
        }
        Family::B => {
            let x = cuts.cuts().iter().copied().find(|d| d % 2 == 0).expect("member of B");
            let y = cuts
                .cuts()
                .iter()
                .copied()
                .find(|d| d % 2 == 1 && *d != 1)
                .expect("member of B");
            let reduced = CutSet::new(vec![1, x]).expect("valid pair");
            let target_values = engine_sequence(&reduced, n_max)?;
            let (agreement_up_to, divergence) = compare(&sequence, &target_values);
            Some(ComparisonDoc {
                target: format!("nim-sequence for {reduced}"),
                hypothesis: Some(format!(
                    "3x < y with x={x}, y={y}: {}",
                    if 3 * x < y { "satisfied" } else { "not satisfied" }
                )),
                agreement_up_to,
                divergence,
            })
        }
        Family::C | Family::D => None,
    };

    let label = match &comparison {
        Some(cmp) if cmp.divergence.is_none() => "confirmed-on-window",
        Some(_) => "diverged",
        None if detector.is_confirmed() => "confirmed-on-window",
        None => "no-pattern-found",
    };

    Ok(ExploreDoc {
        family: family.tag().to_string(),
        label: label.to_string(),
        sequence,
        detector,
        comparison,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cutset(cuts: &[u64]) -> CutSet {
        CutSet::new(cuts.to_vec()).unwrap()
    }

    #[test]
    fn membership_predicates_match_the_family_definitions() {
        assert!(membership(Family::A, &cutset(&[1, 3, 4, 8])).is_ok());
        assert!(membership(Family::A, &cutset(&[1, 3, 4, 9])).is_ok());
        assert!(membership(Family::A, &cutset(&[1, 3, 5])).is_err());
        assert!(membership(Family::B, &cutset(&[1, 4, 15])).is_ok());
        assert!(membership(Family::B, &cutset(&[1, 4])).is_err());
        assert!(membership(Family::B, &cutset(&[1, 3, 4, 15])).is_err());
        assert!(membership(Family::C, &cutset(&[1, 2, 4])).is_ok());
        assert!(membership(Family::C, &cutset(&[1, 2])).is_err());
        assert!(membership(Family::C, &cutset(&[1, 2, 3, 4])).is_err());
        assert!(membership(Family::D, &cutset(&[1, 2])).is_ok());
        assert!(membership(Family::D, &cutset(&[1, 2, 4])).is_err());
    }

    #[test]
    fn family_a_agrees_on_the_window() {
        let doc = run_family(Family::A, &cutset(&[1, 3, 4, 8]), 80).unwrap();
        assert_eq!(doc.label, "confirmed-on-window");
        let cmp = doc.comparison.unwrap();
        assert_eq!(cmp.agreement_up_to, 80);
        assert!(cmp.divergence.is_none());
        assert_eq!(cmp.target, "(0,1)^2(+2)");
    }

    #[test]
    fn family_b_reduces_to_the_pair_when_the_gap_is_wide() {
        let doc = run_family(Family::B, &cutset(&[1, 4, 15]), 80).unwrap();
        assert_eq!(doc.label, "confirmed-on-window");
        let cmp = doc.comparison.unwrap();
        assert!(cmp.hypothesis.unwrap().contains("satisfied"));
        assert!(cmp.divergence.is_none());
    }

    #[test]
    fn family_d_finds_no_pattern_in_the_opening_terms() {
        let doc = run_family(Family::D, &cutset(&[1, 2]), 36).unwrap();
        assert_eq!(doc.label, "no-pattern-found");
        assert!(!doc.detector.is_confirmed());
        assert_eq!(
            &doc.sequence[..12],
            &[0, 1, 2, 3, 1, 4, 3, 2, 4, 5, 6, 7],
            "opening values changed"
        );
    }
}
