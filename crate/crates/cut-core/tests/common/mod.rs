//! Brute-force oracle shared by the integration suites.
//!
//! Values here are recomputed from the game rules by direct enumeration
//! with a self-contained partition walker. Nothing in this module touches
//! the layered set recurrence under test.

// Each test binary compiles its own copy; not every binary uses every item.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Calls `f` once per nondecreasing partition of `n` into exactly `p`
/// positive parts.
pub fn for_each_partition(n: u64, p: u64, f: &mut impl FnMut(&[u64])) {
    fn walk(n: u64, p: u64, min: u64, parts: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if p == 1 {
            if n >= min {
                parts.push(n);
                f(parts);
                parts.pop();
            }
            return;
        }
        let mut h = min;
        while h * p <= n {
            parts.push(h);
            walk(n - h, p - 1, h, parts, f);
            parts.pop();
            h += 1;
        }
    }
    walk(n, p, 1, &mut Vec::new(), f);
}

fn mex_of(s: &BTreeSet<u64>) -> u64 {
    let mut m = 0;
    while s.contains(&m) {
        m += 1;
    }
    m
}

/// Grundy values computed pile by pile from the bare definition: mex over
/// the XOR of every option's parts, options enumerated exhaustively.
pub struct BruteForce {
    cuts: Vec<u64>,
    values: Vec<u64>,
}

impl BruteForce {
    pub fn new(cuts: &[u64]) -> Self {
        BruteForce { cuts: cuts.to_vec(), values: Vec::new() }
    }

    pub fn grundy(&mut self, n: u64) -> u64 {
        assert!(n >= 1);
        while (self.values.len() as u64) < n {
            let m = self.values.len() as u64 + 1;
            let mut options = BTreeSet::new();
            for &d in &self.cuts {
                let p = d + 1;
                if p > m {
                    continue;
                }
                let values = &self.values;
                for_each_partition(m, p, &mut |parts| {
                    let v = parts.iter().map(|&h| values[h as usize - 1]).fold(0, |a, b| a ^ b);
                    options.insert(v);
                });
            }
            self.values.push(mex_of(&options));
        }
        self.values[n as usize - 1]
    }

    /// Every XOR value over partitions of `n` into exactly `p` parts.
    pub fn nim_set(&mut self, n: u64, p: u64) -> BTreeSet<u64> {
        self.grundy(n.max(1));
        let values = &self.values;
        let mut out = BTreeSet::new();
        for_each_partition(n, p, &mut |parts| {
            let v = parts.iter().map(|&h| values[h as usize - 1]).fold(0, |a, b| a ^ b);
            out.insert(v);
        });
        out
    }

    pub fn sequence(&mut self, n_max: u64) -> Vec<u64> {
        (1..=n_max).map(|n| self.grundy(n)).collect()
    }
}
