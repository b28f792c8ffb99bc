//! Command-line surface. Parsing lives in [`Cli`]; [`run`] executes a command
//! and returns the report together with the process exit status.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::classify_with_cap;
use crate::corona::corona;
use crate::error::{Error, Result};
use crate::family::{cycle, fan, path, wheel, GraphSpec};
use crate::graph::Graph;
use crate::report::{
    BruteValue, CoronaValue, RemovableReport, Report, ReportBody, SolvedSet, TableRow, TheoremValue,
};
use crate::solver::{
    min_dominating_set, min_identifying_code, min_separating_set, min_total_dominating_set,
    SolveResult, DEFAULT_ENUM_CAP,
};
use crate::sweep::verify_sweep;
use crate::theorem::formulas::{cycle_value, fan_value, path_value, wheel_value};
use crate::theorem::gamma_id_corona_with_cap;
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_IDENTIFIABLE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const ENUM_CAP_VAR: &str = "IDCODE_ENUM_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "idcode",
    version,
    about = "Exact identifying codes and corona products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Compute an invariant of one graph exactly.
    Solve {
        spec: GraphSpec,
        #[arg(long, value_enum, default_value_t = Invariant::Id)]
        invariant: Invariant,
        #[arg(long)]
        json: bool,
    },
    /// Report conditions (a), (b) and (c) with witnesses.
    Classify {
        spec: GraphSpec,
        #[arg(long)]
        json: bool,
    },
    /// Identifying-code number of H ⊙ G.
    Corona {
        h: GraphSpec,
        g: GraphSpec,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Compare closed forms with direct solving over all small factor pairs.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_h: usize,
        #[arg(long, default_value_t = 4)]
        max_g: usize,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate a family against its closed form.
    Table {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    pub fn json(&self) -> bool {
        match *self {
            Command::Solve { json, .. }
            | Command::Classify { json, .. }
            | Command::Corona { json, .. }
            | Command::Verify { json, .. }
            | Command::Table { json, .. } => json,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Classify { .. } => "classify",
            Command::Corona { .. } => "corona",
            Command::Verify { .. } => "verify",
            Command::Table { .. } => "table",
        }
    }

    fn input(&self) -> Vec<String> {
        match self {
            Command::Solve {
                spec, invariant, ..
            } => vec![spec.to_string(), invariant.name().into()],
            Command::Classify { spec, .. } => vec![spec.to_string()],
            Command::Corona { h, g, method, .. } => {
                vec![h.to_string(), g.to_string(), method.name().into()]
            }
            Command::Verify { max_h, max_g, .. } => vec![max_h.to_string(), max_g.to_string()],
            Command::Table {
                family, from, to, ..
            } => {
                vec![family.name().into(), from.to_string(), to.to_string()]
            }
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Id,
    Dom,
    Tdom,
    Sep,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Id => "id",
            Invariant::Dom => "dom",
            Invariant::Tdom => "tdom",
            Invariant::Sep => "sep",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Theorem,
    Brute,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Theorem => "theorem",
            Method::Brute => "brute",
            Method::Both => "both",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Paths,
    Cycles,
    Fans,
    Wheels,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Paths => "paths",
            Family::Cycles => "cycles",
            Family::Fans => "fans",
            Family::Wheels => "wheels",
        }
    }
}

/// Enumeration cap from `IDCODE_ENUM_CAP`, falling back to the default.
pub fn enum_cap_from_env() -> Result<usize> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Error::BadSpec {
                spec: v.clone(),
                reason: format!("{ENUM_CAP_VAR} must be a positive integer"),
            }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

/// Exit status for a library error.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotIdentifiable(_) => EXIT_NOT_IDENTIFIABLE,
        _ => EXIT_USAGE,
    }
}

fn sorted(set: VertexSet) -> Vec<usize> {
    set.to_vec()
}

fn solved(r: SolveResult) -> SolvedSet {
    SolvedSet {
        value: r.optimum,
        witness: sorted(r.witness),
        nodes_explored: r.nodes_explored,
    }
}

fn solve(g: &Graph, invariant: Invariant) -> Result<SolveResult> {
    match invariant {
        Invariant::Id => min_identifying_code(g),
        Invariant::Dom => Ok(min_dominating_set(g)),
        Invariant::Tdom => min_total_dominating_set(g),
        Invariant::Sep => min_separating_set(g),
    }
}

fn corona_body(h: &Graph, g: &Graph, method: Method, cap: usize) -> Result<(ReportBody, i32)> {
    let (product, layout) = corona(h, g)?;
    let labelled = |value: usize, set: VertexSet| CoronaValue {
        value,
        witness: sorted(set),
        witness_labels: layout.labels(set),
    };
    let theorem = match method {
        Method::Brute => None,
        _ => {
            let r = gamma_id_corona_with_cap(h, g, cap)?;
            Some(TheoremValue {
                case: r.case.to_string(),
                gamma_id_g: r.ingredients.gamma_id_g,
                domination_h: r.ingredients.domination_h,
                total_domination_h: r.ingredients.total_domination_h,
                code: labelled(r.value, r.witness),
            })
        }
    };
    let brute = match method {
        Method::Theorem => None,
        _ => {
            let r = min_identifying_code(&product)?;
            Some(BruteValue {
                nodes_explored: r.nodes_explored,
                code: labelled(r.optimum, r.witness),
            })
        }
    };
    let agree = match (&theorem, &brute) {
        (Some(t), Some(b)) => Some(
            t.code.value == b.code.value
                && product.is_identifying_code(t.code.witness.iter().copied().collect()),
        ),
        _ => None,
    };
    let status = if agree == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let body = ReportBody::Corona {
        h_order: h.n(),
        g_order: g.n(),
        product_order: product.n(),
        theorem,
        brute,
        agree,
    };
    Ok((body, status))
}

fn nonidentifiable_as_none(r: Result<usize>) -> Result<Option<usize>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotIdentifiable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn table_row(family: Family, n: usize, cap: usize) -> Result<TableRow> {
    let (graph, formula, factors) = match family {
        Family::Paths => (path(n)?, path_value(n), None),
        Family::Cycles => (cycle(n)?, cycle_value(n), None),
        Family::Fans => (fan(n)?, fan_value(n), Some(path(n)?)),
        Family::Wheels => (wheel(n)?, wheel_value(n), Some(cycle(n)?)),
    };
    let brute = nonidentifiable_as_none(min_identifying_code(&graph).map(|r| r.optimum))?;
    let theorem = match &factors {
        Some(g) => {
            nonidentifiable_as_none(gamma_id_corona_with_cap(&path(1)?, g, cap).map(|r| r.value))?
        }
        None => None,
    };
    let agree = brute == formula && (factors.is_none() || theorem == brute);
    Ok(TableRow {
        n,
        formula,
        theorem,
        brute,
        agree,
    })
}

fn execute(command: &Command, cap: usize) -> Result<(ReportBody, i32)> {
    match command {
        Command::Solve {
            spec, invariant, ..
        } => {
            let g = spec.build()?;
            let solution = solved(solve(&g, *invariant)?);
            Ok((
                ReportBody::Solve {
                    invariant: invariant.name().into(),
                    n: g.n(),
                    solution,
                },
                EXIT_OK,
            ))
        }
        Command::Classify { spec, .. } => {
            let g = spec.build()?;
            let c = classify_with_cap(&g, cap)?;
            let removable = |r: crate::classify::Removable| RemovableReport {
                code: sorted(r.code),
                z: r.z,
            };
            let body = ReportBody::Classify {
                n: g.n(),
                gamma_id: c.gamma_id,
                min_code: sorted(c.min_code),
                a_exists: c.a_exists,
                a_witness: c.a_witness.map(sorted),
                b_exists: c.b_exists,
                b_witness: c.b_witness.map(removable),
                c_exists: c.c_exists,
                c_witness: c.c_witness.map(removable),
                caps_hit: c.caps_hit,
            };
            Ok((body, EXIT_OK))
        }
        Command::Corona { h, g, method, .. } => corona_body(&h.build()?, &g.build()?, *method, cap),
        Command::Verify { max_h, max_g, .. } => {
            let report = verify_sweep(*max_h, *max_g, cap)?;
            let status = if report.mismatches > 0 {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            };
            Ok((ReportBody::Verify(report), status))
        }
        Command::Table {
            family, from, to, ..
        } => {
            if from > to {
                return Err(Error::Precondition(format!("empty range {from}..{to}")));
            }
            let rows = (*from..=*to)
                .map(|n| table_row(*family, n, cap))
                .collect::<Result<Vec<_>>>()?;
            let status = if rows.iter().all(|r| r.agree) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok((
                ReportBody::Table {
                    family: family.name().into(),
                    rows,
                },
                status,
            ))
        }
    }
}

/// Run a parsed command. Failures become an error report with the matching
/// exit status.
pub fn run(command: &Command) -> (Report, i32) {
    let start = Instant::now();
    let outcome = enum_cap_from_env().and_then(|cap| execute(command, cap));
    let (body, status) = match outcome {
        Ok(pair) => pair,
        Err(e) => {
            let code = exit_code_for(&e);
            (
                ReportBody::Error {
                    exit_code: code,
                    message: e.to_string(),
                },
                code,
            )
        }
    };
    let elapsed_us = start.elapsed().as_micros().try_into().unwrap_or(u64::MAX);
    (
        Report::new(command.name(), command.input(), elapsed_us, body),
        status,
    )
}
