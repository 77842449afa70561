//! Structured command output: one document shape, three renderings.
//!
//! Every command assembles an [`OutputDocument`] first and renders it
//! afterwards, so the JSON form always carries the full result and the
//! text and CSV forms are projections of the same data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use cut_core::periodicity::PeriodReport;
use cut_core::report::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn tag(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub format: String,
    pub payload: Payload,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Sequence {
        start: u64,
        values: Vec<u64>,
        /// First-period layout in six rows of 2c values, present only when
        /// a closed-form view was requested and available.
        #[serde(skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<Vec<u64>>>,
    },
    Set {
        values: Vec<u64>,
    },
    Verdicts {
        verdicts: Vec<Verdict>,
        all_confirmed: bool,
    },
    Period {
        report: PeriodReport,
    },
    Move {
        position_value: u64,
        class: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        chosen: Option<MoveDoc>,
    },
    Explore(ExploreDoc),
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveDoc {
    pub pile_index: usize,
    pub pile_size: u64,
    pub replacement: Vec<u64>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreDoc {
    pub family: String,
    /// Window-bounded outcome; exploration never claims anything beyond
    /// the computed prefix.
    pub label: String,
    pub sequence: Vec<u64>,
    pub detector: PeriodReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonDoc>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonDoc {
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    pub agreement_up_to: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence: Option<DivergenceDoc>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivergenceDoc {
    pub n: u64,
    pub engine: u64,
    pub target: u64,
}

pub fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn set_braces(values: &[u64]) -> String {
    format!("{{{}}}", join(values))
}

impl OutputDocument {
    pub fn render(&self) -> String {
        match self.format.as_str() {
            "json" => serde_json::to_string_pretty(self).expect("document serializes"),
            "csv" => self.render_csv().trim_end().to_string(),
            _ => self.render_text(),
        }
    }

    fn header(&self) -> String {
        let mut line = self.command.clone();
        for (k, v) in &self.parameters {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    fn render_text(&self) -> String {
        let mut out = vec![self.header()];
        match &self.payload {
            Payload::Sequence { values, rows, .. } => {
                out.push(join(values));
                if let Some(rows) = rows {
                    out.push("first period, six rows of 2c values:".to_string());
                    out.extend(rows.iter().map(|r| join(r)));
                }
            }
            Payload::Set { values } => out.push(set_braces(values)),
            Payload::Verdicts { verdicts, all_confirmed } => {
                out.extend(verdicts.iter().map(Verdict::to_string));
                out.push(if *all_confirmed {
                    format!("all confirmed ({} check(s))", verdicts.len())
                } else {
                    "REFUTED".to_string()
                });
            }
            Payload::Period { report } => out.push(report.to_string()),
            Payload::Move { position_value, class, chosen } => match chosen {
                Some(mv) => out.push(format!(
                    "value {position_value}, {class}: split pile {} ({}) into ({})",
                    mv.pile_index,
                    mv.pile_size,
                    join(&mv.replacement)
                )),
                None => out.push(format!("value {position_value}, {class}: no winning move")),
            },
            Payload::Explore(doc) => {
                out.push(format!("sequence: {}", join(&doc.sequence)));
                out.push(format!("detector: {}", doc.detector));
                if let Some(cmp) = &doc.comparison {
                    if let Some(h) = &cmp.hypothesis {
                        out.push(format!("hypothesis: {h}"));
                    }
                    match &cmp.divergence {
                        None => out.push(format!(
                            "target {}: agrees up to n={}",
                            cmp.target, cmp.agreement_up_to
                        )),
                        Some(d) => out.push(format!(
                            "target {}: diverges at n={} (engine {}, target {})",
                            cmp.target, d.n, d.engine, d.target
                        )),
                    }
                }
                out.push(format!("label: {}", doc.label));
            }
        }
        out.join("\n")
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.payload {
            Payload::Sequence { start, values, .. } => {
                w.write_record(["n", "value"]).unwrap();
                for (i, v) in values.iter().enumerate() {
                    w.write_record([(start + i as u64).to_string(), v.to_string()]).unwrap();
                }
            }
            Payload::Set { values } => {
                w.write_record(["value"]).unwrap();
                for v in values {
                    w.write_record([v.to_string()]).unwrap();
                }
            }
            Payload::Verdicts { verdicts, .. } => {
                w.write_record(["check", "parameters", "window", "cases", "status", "counterexample"])
                    .unwrap();
                for v in verdicts {
                    let parameters = v
                        .parameters
                        .iter()
                        .map(|(k, val)| format!("{k}={val}"))
                        .collect::<Vec<_>>()
                        .join(";");
                    let (status, witness) = match v.counterexample() {
                        None => ("confirmed", String::new()),
                        Some(w) => ("refuted", w.to_string()),
                    };
                    w.write_record([
                        v.check.clone(),
                        parameters,
                        v.window.clone(),
                        v.cases.to_string(),
                        status.to_string(),
                        witness,
                    ])
                    .unwrap();
                }
            }
            Payload::Period { report } => {
                w.write_record(["preperiod", "period", "saltus", "verified_up_to", "status"])
                    .unwrap();
                match report {
                    PeriodReport::ConfirmedOnWindow { preperiod, period, saltus, verified_up_to } => {
                        w.write_record([
                            preperiod.to_string(),
                            period.to_string(),
                            saltus.to_string(),
                            verified_up_to.to_string(),
                            "confirmed-on-window".to_string(),
                        ])
                        .unwrap();
                    }
                    PeriodReport::NotFound { verified_up_to } => {
                        w.write_record([
                            String::new(),
                            String::new(),
                            String::new(),
                            verified_up_to.to_string(),
                            "not-found".to_string(),
                        ])
                        .unwrap();
                    }
                }
            }
            Payload::Move { position_value, class, chosen } => {
                w.write_record(["position_value", "class", "pile_index", "pile_size", "replacement"])
                    .unwrap();
                match chosen {
                    Some(mv) => w
                        .write_record([
                            position_value.to_string(),
                            class.clone(),
                            mv.pile_index.to_string(),
                            mv.pile_size.to_string(),
                            mv.replacement
                                .iter()
                                .map(u64::to_string)
                                .collect::<Vec<_>>()
                                .join("+"),
                        ])
                        .unwrap(),
                    None => w
                        .write_record([
                            position_value.to_string(),
                            class.clone(),
                            String::new(),
                            String::new(),
                            String::new(),
                        ])
                        .unwrap(),
                }
            }
            Payload::Explore(doc) => {
                w.write_record(["n", "value"]).unwrap();
                for (i, v) in doc.sequence.iter().enumerate() {
                    w.write_record([(i as u64 + 1).to_string(), v.to_string()]).unwrap();
                }
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}
