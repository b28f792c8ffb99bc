//! Versioned result records shared by the command-line tool and its JSON
//! output.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::sweep::SweepReport;

pub const SCHEMA: &str = "idcode.report/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    /// Arguments as given, after parsing.
    pub input: Vec<String>,
    pub elapsed_us: u64,
    pub result: ReportBody,
}

impl Report {
    pub fn new(command: &str, input: Vec<String>, elapsed_us: u64, result: ReportBody) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input,
            elapsed_us,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedSet {
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovableReport {
    pub code: Vec<usize>,
    pub z: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaValue {
    pub value: usize,
    pub witness: Vec<usize>,
    /// Witness as `v` for base vertices and `v:u` for vertex `u` of copy `v`.
    pub witness_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremValue {
    pub case: String,
    pub gamma_id_g: usize,
    pub domination_h: usize,
    pub total_domination_h: Option<usize>,
    #[serde(flatten)]
    pub code: CoronaValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteValue {
    pub nodes_explored: u64,
    #[serde(flatten)]
    pub code: CoronaValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub formula: Option<usize>,
    pub theorem: Option<usize>,
    pub brute: Option<usize>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportBody {
    Solve {
        invariant: String,
        n: usize,
        #[serde(flatten)]
        solution: SolvedSet,
    },
    Classify {
        n: usize,
        gamma_id: usize,
        min_code: Vec<usize>,
        a_exists: bool,
        a_witness: Option<Vec<usize>>,
        b_exists: bool,
        b_witness: Option<RemovableReport>,
        c_exists: bool,
        c_witness: Option<RemovableReport>,
        caps_hit: bool,
    },
    Corona {
        h_order: usize,
        g_order: usize,
        product_order: usize,
        theorem: Option<TheoremValue>,
        brute: Option<BruteValue>,
        /// Present when both methods ran.
        agree: Option<bool>,
    },
    Verify(SweepReport),
    Table {
        family: String,
        rows: Vec<TableRow>,
    },
    Error {
        exit_code: i32,
        message: String,
    },
}

fn list(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            ReportBody::Solve {
                invariant,
                n,
                solution,
            } => {
                writeln!(f, "invariant: {invariant}")?;
                writeln!(f, "vertices: {n}")?;
                writeln!(f, "value: {}", solution.value)?;
                writeln!(f, "witness: {}", list(&solution.witness))?;
                writeln!(f, "nodes: {}", solution.nodes_explored)?;
            }
            ReportBody::Classify {
                gamma_id,
                min_code,
                a_exists,
                a_witness,
                b_exists,
                b_witness,
                c_exists,
                c_witness,
                caps_hit,
                ..
            } => {
                writeln!(f, "gamma_id: {gamma_id}")?;
                writeln!(f, "min code: {}", list(min_code))?;
                write!(f, "a: {a_exists}")?;
                if let Some(w) = a_witness {
                    write!(f, " {}", list(w))?;
                }
                write!(f, "\nb: {b_exists}")?;
                if let Some(w) = b_witness {
                    write!(f, " {} z={}", list(&w.code), w.z)?;
                }
                write!(f, "\nc: {c_exists}")?;
                if let Some(w) = c_witness {
                    write!(f, " {} z={}", list(&w.code), w.z)?;
                }
                writeln!(f)?;
                if *caps_hit {
                    writeln!(
                        f,
                        "warning: enumeration cap reached; a negative answer is unproven"
                    )?;
                }
            }
            ReportBody::Corona {
                h_order,
                g_order,
                product_order,
                theorem,
                brute,
                agree,
            } => {
                writeln!(
                    f,
                    "|H| = {h_order}, |G| = {g_order}, product has {product_order} vertices"
                )?;
                if let Some(t) = theorem {
                    writeln!(f, "theorem: {} (case {})", t.code.value, t.case)?;
                    writeln!(f, "  witness: {{{}}}", t.code.witness_labels.join(","))?;
                }
                if let Some(b) = brute {
                    writeln!(f, "brute: {} ({} nodes)", b.code.value, b.nodes_explored)?;
                    writeln!(f, "  witness: {{{}}}", b.code.witness_labels.join(","))?;
                }
                match agree {
                    Some(true) => writeln!(f, "match")?,
                    Some(false) => writeln!(f, "MISMATCH")?,
                    None => {}
                }
            }
            ReportBody::Verify(s) => {
                writeln!(
                    f,
                    "pairs: {} (max_h={}, max_g={})",
                    s.pairs, s.max_h, s.max_g
                )?;
                writeln!(f, "identifiable: {}", s.identifiable)?;
                writeln!(f, "unidentifiable: {}", s.unidentifiable)?;
                for (tag, count) in &s.histogram {
                    writeln!(f, "  {tag}: {count}")?;
                }
                writeln!(f, "mismatches: {}", s.mismatches)?;
                if let Some(m) = &s.first_mismatch {
                    writeln!(f, "first mismatch: {}", m.detail)?;
                    writeln!(f, "H:\n{}G:\n{}", m.h, m.g)?;
                }
            }
            ReportBody::Table { family, rows } => {
                writeln!(f, "{family}")?;
                writeln!(
                    f,
                    "{:>4} {:>8} {:>8} {:>8}",
                    "n", "formula", "theorem", "brute"
                )?;
                for r in rows {
                    writeln!(
                        f,
                        "{:>4} {:>8} {:>8} {:>8}{}",
                        r.n,
                        opt(r.formula),
                        opt(r.theorem),
                        opt(r.brute),
                        if r.agree { "" } else { "  MISMATCH" }
                    )?;
                }
            }
            ReportBody::Error { message, .. } => writeln!(f, "error: {message}")?,
        }
        writeln!(f, "time: {} us", self.elapsed_us)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(r: &Report) {
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(&back, r);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn bodies_round_trip() {
        round_trip(&Report::new(
            "solve",
            vec!["path:7".into(), "id".into()],
            12,
            ReportBody::Solve {
                invariant: "id".into(),
                n: 7,
                solution: SolvedSet {
                    value: 4,
                    witness: vec![1, 2, 3, 5],
                    nodes_explored: 9,
                },
            },
        ));
        let code = CoronaValue {
            value: 2,
            witness: vec![0, 2],
            witness_labels: vec!["0".into(), "0:1".into()],
        };
        round_trip(&Report::new(
            "corona",
            vec![],
            0,
            ReportBody::Corona {
                h_order: 1,
                g_order: 2,
                product_order: 3,
                theorem: Some(TheoremValue {
                    case: "T4.3-K1-a".into(),
                    gamma_id_g: 2,
                    domination_h: 1,
                    total_domination_h: None,
                    code: code.clone(),
                }),
                brute: Some(BruteValue {
                    nodes_explored: 3,
                    code,
                }),
                agree: Some(true),
            },
        ));
        round_trip(&Report::new(
            "table",
            vec!["paths".into()],
            5,
            ReportBody::Table {
                family: "paths".into(),
                rows: vec![TableRow {
                    n: 3,
                    formula: Some(2),
                    theorem: None,
                    brute: Some(2),
                    agree: true,
                }],
            },
        ));
    }

    #[test]
    fn schema_is_top_level() {
        let r = Report::new(
            "x",
            vec![],
            0,
            ReportBody::Error {
                exit_code: 1,
                message: "m".into(),
            },
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["result"]["kind"], "error");
    }
}
