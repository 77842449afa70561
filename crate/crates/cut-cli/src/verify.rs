//! Verification sweeps: each target expands to a list of independent
//! cells (one verifier call each) with window sizes defaulting to the
//! published results' scales, all overridable from the command line.

use std::str::FromStr;

use rayon::prelude::*;

use cut_core::closedform::{
    verify_observations, verify_prop1, verify_table1, verify_theorem1, verify_theorem8,
};
use cut_core::correspondence::{
    verify_corollary_two, verify_lemma_seven, verify_lemma_three, verify_map_lemma, verify_rem1,
    verify_stick, verify_theorem5,
};
use cut_core::engine::CutSet;
use cut_core::report::Verdict;
use cut_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Theorem1,
    Theorem5,
    Theorem8,
    Lemma3,
    Cor2,
    Stick,
    Lemma7,
    Rem1,
    Maplemma,
    Observations,
    Prop1,
    Table1,
}

/// Part-count argument: a single count or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartCounts {
    Single(u64),
    Range(u64, u64),
}

impl FromStr for PartCounts {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.parse::<u64>().map_err(|_| format!("bad part count '{t}'"));
        match s.split_once("..") {
            Some((a, b)) => Ok(PartCounts::Range(parse(a)?, parse(b)?)),
            None => Ok(PartCounts::Single(parse(s)?)),
        }
    }
}

impl std::fmt::Display for PartCounts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartCounts::Single(p) => write!(f, "{p}"),
            PartCounts::Range(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl PartCounts {
    fn as_range(self) -> std::ops::RangeInclusive<u64> {
        match self {
            PartCounts::Single(p) => p..=p,
            PartCounts::Range(a, b) => a..=b,
        }
    }

    fn as_single(self, target: &str) -> Result<u64> {
        match self {
            PartCounts::Single(p) => Ok(p),
            PartCounts::Range(..) => Err(Error::Domain(format!(
                "{target} takes a single --p, not a range"
            ))),
        }
    }
}

pub struct SweepArgs {
    pub c: Option<u64>,
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub p: Option<PartCounts>,
    pub periods: Option<u64>,
    pub bound: Option<u64>,
    pub cutset: Option<CutSet>,
}

type Cell = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;

fn c_list(args: &SweepArgs, default: &[u64]) -> Vec<u64> {
    match args.c {
        Some(c) => vec![c],
        None => default.to_vec(),
    }
}

fn cutsets(args: &SweepArgs, default: &[&[u64]]) -> Vec<CutSet> {
    match &args.cutset {
        Some(cuts) => vec![cuts.clone()],
        None => default
            .iter()
            .map(|cuts| CutSet::new(cuts.to_vec()).expect("default cut-sets are valid"))
            .collect(),
    }
}

/// Expands a target into its verifier cells.
pub fn build_cells(target: Target, args: &SweepArgs) -> Result<Vec<Cell>> {
    let mut cells: Vec<Cell> = Vec::new();
    match target {
        Target::Theorem1 => {
            for c in c_list(args, &[2, 3, 4, 5, 6]) {
                let n = args.n.unwrap_or(30 * c);
                cells.push(Box::new(move || verify_theorem1(c, n)));
            }
        }
        Target::Theorem5 => {
            for c in c_list(args, &[4, 5, 6]) {
                let n = args.n.unwrap_or(24 * c);
                cells.push(Box::new(move || verify_theorem5(c, n)));
            }
        }
        Target::Theorem8 => {
            let n = args.n.unwrap_or(80);
            for cuts in cutsets(args, &[&[1, 4, 6], &[1, 6, 8, 10]]) {
                cells.push(Box::new(move || verify_theorem8(&cuts, n)));
            }
        }
        Target::Lemma3 => {
            let k = args.k.unwrap_or(40);
            let p = match args.p {
                Some(p) => p.as_single("lemma3")?,
                None => 6,
            };
            for c in c_list(args, &[4, 5]) {
                cells.push(Box::new(move || verify_lemma_three(c, k, p)));
            }
        }
        Target::Cor2 | Target::Stick | Target::Lemma7 => {
            let n = args.n.unwrap_or(40);
            let range = args.p.unwrap_or(PartCounts::Range(4, 7)).as_range();
            for c in c_list(args, &[2, 3]) {
                let range = range.clone();
                cells.push(Box::new(move || match target {
                    Target::Cor2 => verify_corollary_two(c, n, range.clone()),
                    Target::Stick => verify_stick(c, n, range.clone()),
                    _ => verify_lemma_seven(c, n, range.clone()),
                }));
            }
        }
        Target::Rem1 => {
            let n = args.n.unwrap_or(40);
            let p = match args.p {
                Some(p) => p.as_single("rem1")?,
                None => 4,
            };
            for c in c_list(args, &[2, 3]) {
                cells.push(Box::new(move || verify_rem1(c, n, p)));
            }
        }
        Target::Maplemma => {
            for c in c_list(args, &[4, 5]) {
                let bound = args.bound.unwrap_or(24 * c);
                cells.push(Box::new(move || verify_map_lemma(c, bound)));
            }
        }
        Target::Observations => {
            let periods = args.periods.unwrap_or(3);
            for c in c_list(args, &[2, 3, 4, 5, 6, 7, 8]) {
                cells.push(Box::new(move || verify_observations(c, periods)));
            }
        }
        Target::Prop1 => {
            let periods = args.periods.unwrap_or(6);
            for c in c_list(args, &[2, 3]) {
                cells.push(Box::new(move || verify_prop1(c, periods)));
            }
        }
        Target::Table1 => {
            let n = args.n.unwrap_or(60);
            let defaults: [&[u64]; 8] = [
                &[2, 3],
                &[3, 5],
                &[1, 5],
                &[1, 3, 7],
                &[1, 2, 3],
                &[1, 2, 3, 6],
                &[1, 3, 4],
                &[1, 3, 8],
            ];
            for cuts in cutsets(args, &defaults) {
                cells.push(Box::new(move || verify_table1(&cuts, n)));
            }
        }
    }
    Ok(cells)
}

/// Runs the cells, in parallel when a worker pool is requested. Results
/// keep cell order; on multiple failures the earliest cell's error wins.
pub fn run_cells(cells: Vec<Cell>, threads: Option<usize>) -> Result<Vec<Verdict>> {
    let run_all = || -> Vec<Result<Verdict>> { cells.par_iter().map(|cell| cell()).collect() };
    let results = match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Domain(format!("cannot build a {k}-thread pool: {e}")))?
            .install(run_all),
        None => run_all(),
    };
    results.into_iter().collect()
}
