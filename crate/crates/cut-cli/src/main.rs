//! Command-line surface for the CUT analysis library.
//!
//! Exit codes: 0 success or all checks confirmed, 1 a check refuted with a
//! counterexample, 2 usage or domain error, 3 resource limit reached.

mod explore;
mod output;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use cut_core::closedform::{classify_cutset, family_grundy, ClosedFormFamily};
use cut_core::engine::{CutSet, GrundyTable};
use cut_core::periodicity::detect;
use cut_core::strategy::{best_move, classify_position, position_value, Position, DEFAULT_MOVE_CAP};
use cut_core::{Error, Result};

use explore::Family;
use output::{Format, MoveDoc, OutputDocument, Payload};
use verify::{PartCounts, SweepArgs, Target};

#[derive(Parser)]
#[command(
    name = "cut",
    version,
    about = "Analyze CUT pile-splitting games: nim-value sequences, nim-sets, \
             periodicity, verification sweeps, and winning moves"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap worker threads for verification sweeps (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the nim-value sequence G(1..n).
    Seq {
        /// Cut counts, comma-separated, e.g. 1,6.
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: CutSet,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Evaluate through the proven closed form instead of the engine;
        /// fails when the cut-set has none.
        #[arg(long)]
        closed_form: bool,
    },
    /// Print the nim-set N(n,p): values over splits of n into exactly p piles.
    Nimset {
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: CutSet,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
    },
    /// Detect arithmetic-periodic structure in G(1..n).
    Period {
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: CutSet,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Full periods required after the preperiod before reporting.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
        min_periods: u64,
    },
    /// Run a verification sweep; windows default to the published scales.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Family parameter; sweeps every published value when omitted.
        #[arg(long)]
        c: Option<u64>,
        /// Pile-size window.
        #[arg(long)]
        n: Option<u64>,
        /// Index window (lemma3).
        #[arg(long)]
        k: Option<u64>,
        /// Part counts: a single count or an inclusive range like 4..7.
        #[arg(long)]
        p: Option<PartCounts>,
        /// Periods to cover (observations, prop1).
        #[arg(long)]
        periods: Option<u64>,
        /// Part-size bound (maplemma).
        #[arg(long)]
        bound: Option<u64>,
        /// Restrict to one cut-set (theorem8, table1).
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: Option<CutSet>,
    },
    /// Find a winning move, if any.
    Move {
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: CutSet,
        /// Pile sizes, comma-separated, e.g. 14,19.
        #[arg(long, value_delimiter = ',', required = true)]
        piles: Vec<u64>,
        /// Largest pile the move search will enumerate.
        #[arg(long, default_value_t = DEFAULT_MOVE_CAP)]
        move_cap: u64,
    },
    /// Explore one of the open families A, B, C, D.
    Explore {
        #[arg(value_enum)]
        family: Family,
        /// Cut counts; must satisfy the family's membership predicate.
        /// Defaults to 1,2 for family D and is required otherwise.
        #[arg(long, value_parser = CutSet::from_str)]
        cutset: Option<CutSet>,
        /// Window length; defaults to the family's customary prefix.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
}

fn closed_form_rows(family: ClosedFormFamily) -> Option<Vec<Vec<u64>>> {
    match family {
        ClosedFormFamily::OneEven { c } => Some(cut_core::closedform::row_table(c)),
        ClosedFormFamily::OneManyEven { c_min } => Some(cut_core::closedform::row_table(c_min)),
        _ => None,
    }
}

fn cmd_seq(cuts: &CutSet, n_max: u64, closed_form: bool, format: Format) -> Result<OutputDocument> {
    let (values, rows) = if closed_form {
        let family = classify_cutset(cuts).ok_or_else(|| {
            Error::Domain(format!("no proven closed form applies to {cuts}"))
        })?;
        let values: Result<Vec<u64>> = (1..=n_max).map(|n| family_grundy(n, family)).collect();
        (values?, closed_form_rows(family))
    } else {
        let mut table = GrundyTable::new(cuts.clone());
        let values: Result<Vec<u64>> = (1..=n_max).map(|n| table.grundy(n)).collect();
        (values?, None)
    };
    Ok(OutputDocument {
        command: "seq".into(),
        parameters: output::params(&[
            ("cutset", cuts.to_string()),
            ("n", n_max.to_string()),
            ("closed-form", closed_form.to_string()),
        ]),
        format: format.tag().into(),
        payload: Payload::Sequence { start: 1, values, rows },
    })
}

fn cmd_nimset(cuts: &CutSet, n: u64, p: u64, format: Format) -> Result<OutputDocument> {
    let mut table = GrundyTable::new(cuts.clone());
    let values = table.nim_set(n, p)?.to_vec();
    Ok(OutputDocument {
        command: "nimset".into(),
        parameters: output::params(&[
            ("cutset", cuts.to_string()),
            ("n", n.to_string()),
            ("p", p.to_string()),
        ]),
        format: format.tag().into(),
        payload: Payload::Set { values },
    })
}

fn cmd_period(cuts: &CutSet, n_max: u64, min_periods: u64, format: Format) -> Result<OutputDocument> {
    let mut table = GrundyTable::new(cuts.clone());
    let seq: Result<Vec<u64>> = (1..=n_max).map(|n| table.grundy(n)).collect();
    let report = detect(&seq?, min_periods);
    Ok(OutputDocument {
        command: "period".into(),
        parameters: output::params(&[
            ("cutset", cuts.to_string()),
            ("n", n_max.to_string()),
            ("min-periods", min_periods.to_string()),
        ]),
        format: format.tag().into(),
        payload: Payload::Period { report },
    })
}

fn cmd_move(cuts: &CutSet, piles: &[u64], move_cap: u64, format: Format) -> Result<OutputDocument> {
    let pos = Position::new(piles.to_vec(), cuts.clone())?;
    let mut table = GrundyTable::new(cuts.clone());
    let value = position_value(&pos, &mut table)?;
    let class = classify_position(&pos, &mut table)?.to_string();
    let chosen = best_move(&pos, &mut table, move_cap)?.map(|mv| MoveDoc {
        pile_index: mv.pile_index,
        pile_size: piles[mv.pile_index],
        replacement: mv.replacement.parts().to_vec(),
    });
    Ok(OutputDocument {
        command: "move".into(),
        parameters: output::params(&[
            ("cutset", cuts.to_string()),
            (
                "piles",
                piles.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
            ),
            ("move-cap", move_cap.to_string()),
        ]),
        format: format.tag().into(),
        payload: Payload::Move { position_value: value, class, chosen },
    })
}

fn run(cli: Cli) -> Result<(OutputDocument, u8)> {
    let format = cli.format;
    match cli.command {
        Command::Seq { cutset, n, closed_form } => {
            Ok((cmd_seq(&cutset, n, closed_form, format)?, 0))
        }
        Command::Nimset { cutset, n, p } => Ok((cmd_nimset(&cutset, n, p, format)?, 0)),
        Command::Period { cutset, n, min_periods } => {
            Ok((cmd_period(&cutset, n, min_periods, format)?, 0))
        }
        Command::Move { cutset, piles, move_cap } => {
            Ok((cmd_move(&cutset, &piles, move_cap, format)?, 0))
        }
        Command::Verify { target, c, n, k, p, periods, bound, cutset } => {
            let args = SweepArgs { c, n, k, p, periods, bound, cutset };
            let cells = verify::build_cells(target, &args)?;
            let verdicts = verify::run_cells(cells, cli.threads)?;
            let all_confirmed = verdicts.iter().all(|v| v.is_confirmed());
            let mut parameters = output::params(&[(
                "target",
                format!("{target:?}").to_lowercase(),
            )]);
            for (key, value) in [
                ("c", args.c.map(|v| v.to_string())),
                ("n", args.n.map(|v| v.to_string())),
                ("k", args.k.map(|v| v.to_string())),
                ("periods", args.periods.map(|v| v.to_string())),
                ("bound", args.bound.map(|v| v.to_string())),
                ("cutset", args.cutset.as_ref().map(|cuts| cuts.to_string())),
                ("p", args.p.map(|p| p.to_string())),
            ] {
                if let Some(value) = value {
                    parameters.insert(key.into(), value);
                }
            }
            let doc = OutputDocument {
                command: "verify".into(),
                parameters,
                format: format.tag().into(),
                payload: Payload::Verdicts { verdicts, all_confirmed },
            };
            Ok((doc, if all_confirmed { 0 } else { 1 }))
        }
        Command::Explore { family, cutset, n } => {
            let cuts = match cutset {
                Some(cuts) => cuts,
                None if family == Family::D => CutSet::new(vec![1, 2]).expect("valid pair"),
                None => {
                    return Err(Error::Domain(format!(
                        "family {} needs an explicit --cutset",
                        family.tag()
                    )))
                }
            };
            let n_max = n.unwrap_or_else(|| family.default_window());
            let doc = explore::run_family(family, &cuts, n_max)?;
            let code = u8::from(doc.label == "diverged");
            let doc = OutputDocument {
                command: "explore".into(),
                parameters: output::params(&[
                    ("family", family.tag().to_string()),
                    ("cutset", cuts.to_string()),
                    ("n", n_max.to_string()),
                ]),
                format: format.tag().into(),
                payload: Payload::Explore(doc),
            };
            Ok((doc, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((doc, code)) => {
            println!("{}", doc.render());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => 3,
                _ => 2,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn seq_reproduces_the_opening_values() {
        let cuts = CutSet::new(vec![1, 6]).unwrap();
        let doc = cmd_seq(&cuts, 19, false, Format::Text).unwrap();
        match doc.payload {
            Payload::Sequence { values, .. } => assert_eq!(
                values,
                vec![0, 1, 0, 1, 0, 1, 2, 3, 2, 3, 2, 3, 1, 4, 5, 4, 5, 4, 3]
            ),
            _ => panic!("wrong payload"),
        }
    }

    #[test]
    fn closed_form_seq_rejects_open_cutsets() {
        let cuts = CutSet::new(vec![1, 2]).unwrap();
        assert!(cmd_seq(&cuts, 10, true, Format::Text).is_err());
    }

    #[test]
    fn closed_form_seq_carries_the_six_row_view() {
        let cuts = CutSet::new(vec![1, 6]).unwrap();
        let doc = cmd_seq(&cuts, 36, true, Format::Text).unwrap();
        match doc.payload {
            Payload::Sequence { rows: Some(rows), values, .. } => {
                assert_eq!(rows.len(), 6);
                assert_eq!(rows[0], vec![0, 1, 0, 1, 0, 1]);
                assert_eq!(rows[2], vec![1, 4, 5, 4, 5, 4]);
                let flattened: Vec<u64> = rows.into_iter().flatten().collect();
                assert_eq!(flattened, values);
            }
            _ => panic!("six-row view missing"),
        }
    }

    #[test]
    fn nimset_document_holds_the_published_set() {
        let cuts = CutSet::new(vec![1, 6]).unwrap();
        let doc = cmd_nimset(&cuts, 16, 2, Format::Text).unwrap();
        match doc.payload {
            Payload::Set { values } => assert_eq!(values, vec![0, 1, 2, 5]),
            _ => panic!("wrong payload"),
        }
    }
}
