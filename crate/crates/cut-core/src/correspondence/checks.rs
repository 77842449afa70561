//! Bounded sweeps checking the correspondence claims against the engine.
//!
//! Each function builds the Grundy tables it needs, then scans its window
//! with read-only queries, reporting the first counterexample in
//! (n, p, lexicographic partition) order. Confirmation means the claim
//! held on the examined window, nothing more.

use std::ops::RangeInclusive;

use itertools::Itertools;

use super::{floor_partition, is_entering, is_exiting, is_innumber, is_outnumber, phi};
use crate::correspondence::ceil_partition;
use crate::engine::{enumerate_partitions, nim_sum, CutSet, GrundyTable, PilePartition};
use crate::report::{params, Verdict};
use crate::{Error, Result};

/// XOR of single-pile values over the parts; the table must already cover
/// every part.
fn partition_value(table: &GrundyTable, o: &PilePartition) -> u64 {
    nim_sum(o.parts().iter().map(|&h| {
        table.get(h).expect("table was built past every part")
    }))
}

fn one_even_table(c: u64, n: u64, p: u64) -> Result<GrundyTable> {
    let mut table = GrundyTable::new(CutSet::new(vec![1, 2 * c])?);
    table.nim_set(n, p)?;
    Ok(table)
}

fn require_c(c: u64, least: u64) -> Result<()> {
    if c < least {
        return Err(Error::Domain(format!("requires c >= {least}, got {c}")));
    }
    Ok(())
}

fn require_p_range(p_range: &RangeInclusive<u64>) -> Result<(u64, u64)> {
    let (lo, hi) = (*p_range.start(), *p_range.end());
    if lo < 4 {
        return Err(Error::Domain(format!(
            "the claim is about p >= 4; the range starts at {lo}"
        )));
    }
    if lo > hi {
        return Err(Error::Domain(format!("empty pile-count range {lo}..={hi}")));
    }
    Ok((lo, hi))
}

/// Every non-entering partition of n+1 has a same-count partition of n one
/// XOR-step below it, and every non-exiting partition of n has one of n+1:
/// for each non-entering O of m with 2..=p_max parts, v(O)⊕1 ∈ 𝒩(m−1, p),
/// and for each non-exiting O of m, v(O)⊕1 ∈ 𝒩(m+1, p).
pub fn verify_rem1(c: u64, n_max: u64, p_max: u64) -> Result<Verdict> {
    require_c(c, 2)?;
    if p_max < 2 {
        return Err(Error::Domain("needs p_max >= 2".into()));
    }
    let table = one_even_table(c, n_max, p_max)?;
    let parameters = params([("c", c), ("n_max", n_max), ("p_max", p_max)]);
    let window = format!("C={{1,{}}}, n <= {n_max}, p <= {p_max}", 2 * c);
    let mut cases = 0u64;

    for m in 1..=n_max {
        for p in 2..=p_max {
            for o in enumerate_partitions(m, p) {
                let v = partition_value(&table, &o);
                if m >= 2 && !is_entering(&o, c) {
                    cases += 1;
                    let below = table.get_nim_set(m - 1, p).expect("built");
                    if !below.contains(v ^ 1) {
                        return Ok(Verdict::refuted(
                            "rem1",
                            parameters,
                            window,
                            cases,
                            format!(
                                "non-entering {o} of {m} has value {v}, but {} is not in N({},{p})",
                                v ^ 1,
                                m - 1
                            ),
                        ));
                    }
                }
                if m < n_max && !is_exiting(&o, c) {
                    cases += 1;
                    let above = table.get_nim_set(m + 1, p).expect("built");
                    if !above.contains(v ^ 1) {
                        return Ok(Verdict::refuted(
                            "rem1",
                            parameters,
                            window,
                            cases,
                            format!(
                                "non-exiting {o} of {m} has value {v}, but {} is not in N({},{p})",
                                v ^ 1,
                                m + 1
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(Verdict::confirmed("rem1", parameters, window, cases))
}

/// 𝒩(n+1, p+1) = 𝒩(n, p) exactly, for p ≥ 4: appending a pile of size 1
/// is value-neutral and every (p+1)-part partition of n+1 arises that way.
pub fn verify_corollary_two(
    c: u64,
    n_max: u64,
    p_range: RangeInclusive<u64>,
) -> Result<Verdict> {
    require_c(c, 2)?;
    let (p_lo, p_hi) = require_p_range(&p_range)?;
    let table = one_even_table(c, n_max + 1, p_hi + 1)?;
    let parameters = params([("c", c), ("n_max", n_max), ("p_min", p_lo), ("p_max", p_hi)]);
    let window = format!("C={{1,{}}}, n <= {n_max}, p in {p_lo}..={p_hi}", 2 * c);
    let mut cases = 0u64;

    for n in 1..=n_max {
        for p in p_lo..=p_hi {
            cases += 1;
            let grown = table.get_nim_set(n + 1, p + 1).expect("built");
            let base = table.get_nim_set(n, p).expect("built");
            if grown != base {
                return Ok(Verdict::refuted(
                    "cor2",
                    parameters,
                    window,
                    cases,
                    format!(
                        "n={n} p={p}: N({},{}) = {grown:?} but N({n},{p}) = {base:?}",
                        n + 1,
                        p + 1
                    ),
                ));
            }
        }
    }
    Ok(Verdict::confirmed("cor2", parameters, window, cases))
}

/// Growing n by one flips every achievable value's last bit: v ∈ 𝒩(n, p)
/// implies v⊕1 ∈ 𝒩(n+1, p), for p ≥ 4.
pub fn verify_stick(c: u64, n_max: u64, p_range: RangeInclusive<u64>) -> Result<Verdict> {
    require_c(c, 2)?;
    let (p_lo, p_hi) = require_p_range(&p_range)?;
    let table = one_even_table(c, n_max + 1, p_hi)?;
    let parameters = params([("c", c), ("n_max", n_max), ("p_min", p_lo), ("p_max", p_hi)]);
    let window = format!("C={{1,{}}}, n <= {n_max}, p in {p_lo}..={p_hi}", 2 * c);
    let mut cases = 0u64;

    for n in 1..=n_max {
        for p in p_lo..=p_hi {
            let here = table.get_nim_set(n, p).expect("built");
            let next = table.get_nim_set(n + 1, p).expect("built");
            for v in here.iter() {
                cases += 1;
                if !next.contains(v ^ 1) {
                    return Ok(Verdict::refuted(
                        "stick",
                        parameters,
                        window,
                        cases,
                        format!(
                            "n={n} p={p}: {v} in N({n},{p}) but {} not in N({},{p})",
                            v ^ 1,
                            n + 1
                        ),
                    ));
                }
            }
        }
    }
    Ok(Verdict::confirmed("stick", parameters, window, cases))
}

/// Two extra piles never reach new values: 𝒩(n, p+2) ⊆ 𝒩(n, p) for p ≥ 4.
pub fn verify_lemma_seven(
    c: u64,
    n_max: u64,
    p_range: RangeInclusive<u64>,
) -> Result<Verdict> {
    require_c(c, 2)?;
    let (p_lo, p_hi) = require_p_range(&p_range)?;
    let table = one_even_table(c, n_max, p_hi + 2)?;
    let parameters = params([("c", c), ("n_max", n_max), ("p_min", p_lo), ("p_max", p_hi)]);
    let window = format!("C={{1,{}}}, n <= {n_max}, p in {p_lo}..={p_hi}", 2 * c);
    let mut cases = 0u64;

    for n in 1..=n_max {
        for p in p_lo..=p_hi {
            cases += 1;
            let wide = table.get_nim_set(n, p + 2).expect("built");
            let base = table.get_nim_set(n, p).expect("built");
            if !wide.is_subset(base) {
                return Ok(Verdict::refuted(
                    "lemma7",
                    parameters,
                    window,
                    cases,
                    format!(
                        "n={n} p={p}: N({n},{}) = {wide:?} not within N({n},{p}) = {base:?}",
                        p + 2
                    ),
                ));
            }
        }
    }
    Ok(Verdict::confirmed("lemma7", parameters, window, cases))
}

/// The correspondence carries nim-sets across cut-sets exactly:
/// 𝒩(k+p−1, p, {1,2c}) = 𝒩(φ_p(k+p−1), p, {1,6}) for k ≤ k_max,
/// 2 ≤ p ≤ p_max.
pub fn verify_lemma_three(c: u64, k_max: u64, p_max: u64) -> Result<Verdict> {
    require_c(c, 3)?;
    if p_max < 2 || k_max < 1 {
        return Err(Error::Domain("needs p_max >= 2 and k_max >= 1".into()));
    }
    let src_max = k_max + p_max - 1;
    let mut src = GrundyTable::new(CutSet::new(vec![1, 2 * c])?);
    src.nim_set(src_max, p_max)?;

    let mut tgt_max = 1;
    for p in 2..=p_max {
        for k in 1..=k_max {
            tgt_max = tgt_max.max(phi(k + p - 1, p, c)?);
        }
    }
    let mut tgt = GrundyTable::new(CutSet::new(vec![1, 6])?);
    tgt.nim_set(tgt_max, p_max)?;

    let parameters = params([("c", c), ("k_max", k_max), ("p_max", p_max)]);
    let window = format!("C={{1,{}}} -> C={{1,6}}, k <= {k_max}, p in 2..={p_max}", 2 * c);
    let mut cases = 0u64;

    for n in 1..=src_max {
        for p in 2..=p_max.min(n) {
            if n - p + 1 > k_max {
                continue;
            }
            cases += 1;
            let image = phi(n, p, c)?;
            let lhs = src.get_nim_set(n, p).expect("built");
            let rhs = tgt.get_nim_set(image, p).expect("built");
            if lhs != rhs {
                return Ok(Verdict::refuted(
                    "lemma3",
                    parameters,
                    window,
                    cases,
                    format!(
                        "n={n} p={p}: N under {{1,{}}} = {lhs:?} but N({image},{p}) under {{1,6}} = {rhs:?}",
                        2 * c
                    ),
                ));
            }
        }
    }
    Ok(Verdict::confirmed("lemma3", parameters, window, cases))
}

/// Single-pile values correspond pointwise: G under {1,2c} at n equals
/// G under {1,6} at φ₁(n), for n ≤ n_max.
pub fn verify_theorem5(c: u64, n_max: u64) -> Result<Verdict> {
    require_c(c, 3)?;
    let mut src = GrundyTable::new(CutSet::new(vec![1, 2 * c])?);
    let src_values = src.values(n_max)?.to_vec();

    let mut tgt_max = 1;
    for n in 1..=n_max {
        tgt_max = tgt_max.max(phi(n, 1, c)?);
    }
    let mut tgt = GrundyTable::new(CutSet::new(vec![1, 6])?);
    tgt.values(tgt_max)?;

    let parameters = params([("c", c), ("n_max", n_max)]);
    let window = format!("C={{1,{}}}, n <= {n_max}", 2 * c);
    for n in 1..=n_max {
        let image = phi(n, 1, c)?;
        let lhs = src_values[(n - 1) as usize];
        let rhs = tgt.get(image).expect("built");
        if lhs != rhs {
            return Ok(Verdict::refuted(
                "theorem5",
                parameters,
                window,
                n,
                format!("n={n}: G under {{1,{}}} is {lhs}, G({image}) under {{1,6}} is {rhs}", 2 * c),
            ));
        }
    }
    Ok(Verdict::confirmed("theorem5", parameters, window, n_max))
}

/// The four structural properties of the correspondence, swept over
/// parts ≤ bound:
///
/// * (a) φ_p preserves parity, p ≤ 4.
/// * (b) φ₁ maps the innumbers ≤ bound strictly increasingly onto an
///   initial run of the {1,6}-innumbers; same for outnumbers.
/// * (c) φ₁ sums match φ_p of the sum over all-innumber and all-outnumber
///   tuples of size 2..=4, except the one genuine failure shape: four
///   parts all ≡ 2 (mod 2c).
/// * (d) φ_p is monotone between part-wise floors and ceilings, p ≤ 3.
pub fn verify_map_lemma(c: u64, bound: u64) -> Result<Verdict> {
    require_c(c, 3)?;
    if bound < 12 * c {
        return Err(Error::Domain(format!(
            "bound {bound} below one period 12c = {}",
            12 * c
        )));
    }
    let parameters = params([("c", c), ("bound", bound)]);
    let window = format!("parts <= {bound}");
    let mut cases = 0u64;

    let refuted = |cases: u64, detail: String| -> Result<Verdict> {
        Ok(Verdict::refuted(
            "maplemma",
            params([("c", c), ("bound", bound)]),
            format!("parts <= {bound}"),
            cases,
            detail,
        ))
    };

    for p in 1..=4 {
        for n in p..=bound {
            cases += 1;
            if phi(n, p, c)? % 2 != n % 2 {
                return refuted(cases, format!("part (a) n={n} p={p}: parity flipped"));
            }
        }
    }

    let innumbers: Vec<u64> = (1..=bound).filter(|&n| is_innumber(n, c)).collect();
    let outnumbers: Vec<u64> = (1..=bound).filter(|&n| is_outnumber(n, c)).collect();
    let sides = [
        ("innumbers", &innumbers, is_innumber as fn(u64, u64) -> bool),
        ("outnumbers", &outnumbers, is_outnumber as fn(u64, u64) -> bool),
    ];
    for (label, list, target) in sides {
        let mut image = Vec::with_capacity(list.len());
        for &n in list {
            cases += 1;
            let m = phi(n, 1, c)?;
            if image.last().is_some_and(|&prev| prev >= m) {
                return refuted(cases, format!("part (b) {label}: image not increasing at n={n}"));
            }
            if !target(m, 3) {
                return refuted(cases, format!("part (b) {label}: phi({n}) = {m} off-class"));
            }
            image.push(m);
        }
        let top = match image.last() {
            Some(&top) => top,
            None => continue,
        };
        for m in 1..=top {
            if target(m, 3) {
                cases += 1;
                if image.binary_search(&m).is_err() {
                    return refuted(cases, format!("part (b) {label}: {m} missed by the image"));
                }
            }
        }
    }

    for p in 2..=4u64 {
        for list in [&innumbers, &outnumbers] {
            for tuple in list.iter().copied().combinations_with_replacement(p as usize) {
                // The one proven failure: four parts all on the block
                // boundary residue.
                if p == 4 && tuple.iter().all(|&h| h % (2 * c) == 2) {
                    continue;
                }
                cases += 1;
                let mut lhs = 0;
                for &h in &tuple {
                    lhs += phi(h, 1, c)?;
                }
                let rhs = phi(tuple.iter().sum(), p, c)?;
                if lhs != rhs {
                    return refuted(
                        cases,
                        format!("part (c) tuple {tuple:?}: phi-sum {lhs}, phi of sum {rhs}"),
                    );
                }
            }
        }
    }

    for p in 1..=3 {
        for total in p..=bound {
            for o in enumerate_partitions(total, p) {
                cases += 1;
                let lo = phi(floor_partition(&o, c).total(), p, c)?;
                let mid = phi(total, p, c)?;
                let hi = phi(ceil_partition(&o, c).total(), p, c)?;
                if !(lo <= mid && mid <= hi) {
                    return refuted(
                        cases,
                        format!("part (d) {o}: phi sandwich {lo} <= {mid} <= {hi} broken"),
                    );
                }
            }
        }
    }

    Ok(Verdict::confirmed("maplemma", parameters, window, cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rem1_confirms_on_a_small_window() {
        let verdict = verify_rem1(2, 30, 3).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        assert!(verdict.cases > 0);
        assert!(verify_rem1(1, 10, 3).is_err());
    }

    #[test]
    fn cor2_confirms_and_rejects_low_ranges() {
        let verdict = verify_corollary_two(2, 24, 4..=5).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        assert!(verify_corollary_two(2, 24, 2..=5).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let inverted = 6..=5;
        assert!(verify_corollary_two(2, 24, inverted).is_err());
    }

    #[test]
    fn stick_confirms_on_a_small_window() {
        let verdict = verify_stick(4, 24, 4..=5).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
    }

    #[test]
    fn lemma_seven_confirms_on_a_small_window() {
        let verdict = verify_lemma_seven(2, 24, 4..=5).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
    }

    #[test]
    fn lemma_three_is_the_identity_check_at_c_three() {
        let verdict = verify_lemma_three(3, 20, 4).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        let verdict = verify_lemma_three(4, 20, 3).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        assert!(verify_lemma_three(2, 20, 3).is_err());
    }

    #[test]
    fn theorem5_confirms_on_a_small_window() {
        let verdict = verify_theorem5(4, 48).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        assert_eq!(verdict.cases, 48);
        assert!(verify_theorem5(2, 10).is_err());
    }

    #[test]
    fn map_lemma_confirms_at_one_period() {
        let verdict = verify_map_lemma(4, 48).unwrap();
        assert!(verdict.is_confirmed(), "{verdict}");
        assert!(verify_map_lemma(4, 10).is_err());
    }
}
