//! Exhaustive comparison of the closed forms against direct solving over all
//! small labelled factor pairs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corona::{corona, corona_identifiable};
use crate::edgelist::serialize_edge_list;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::min_identifying_code;
use crate::theorem::{gamma_id_corona_with_cap, CaseTag};
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub h: String,
    pub g: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_h: usize,
    pub max_g: usize,
    pub pairs: usize,
    pub identifiable: usize,
    pub unidentifiable: usize,
    pub histogram: BTreeMap<String, usize>,
    pub mismatches: usize,
    /// First disagreement in enumeration order.
    pub first_mismatch: Option<Mismatch>,
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > 24 {
        return Err(Error::Precondition(format!(
            "too many labelled graphs on {n} vertices"
        )));
    }
    (0..1u64 << pairs)
        .map(|code| Graph::from_edge_code(n, code))
        .collect()
}

/// Every connected labelled graph on `n` vertices.
pub fn connected_labelled_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(labelled_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

enum Outcome {
    Skipped,
    Agreed(CaseTag),
    Failed(String),
}

fn check_pair(h: &Graph, g: &Graph, cap: usize) -> Result<Outcome> {
    let (product, _) = corona(h, g)?;
    let direct = product.is_identifiable();
    if corona_identifiable(h, g) != direct {
        return Ok(Outcome::Failed(format!(
            "identifiability criterion says {}, direct check says {direct}",
            !direct
        )));
    }
    if !direct {
        return Ok(Outcome::Skipped);
    }
    let theorem = gamma_id_corona_with_cap(h, g, cap)?;
    if !product.is_identifying_code(theorem.witness) || theorem.witness.len() != theorem.value {
        return Ok(Outcome::Failed(format!(
            "witness {} for case {} is not an identifying code of size {}",
            theorem.witness, theorem.case, theorem.value
        )));
    }
    let brute = min_identifying_code(&product)?.optimum;
    if brute != theorem.value {
        return Ok(Outcome::Failed(format!(
            "case {} gives {}, direct solve gives {brute}",
            theorem.case, theorem.value
        )));
    }
    Ok(Outcome::Agreed(theorem.case))
}

/// Compare the case analysis with direct solving for every connected labelled
/// `H` with at most `max_h` vertices and every labelled `G` with at most
/// `max_g` vertices.
pub fn verify_sweep(max_h: usize, max_g: usize, cap: usize) -> Result<SweepReport> {
    if max_h == 0 || max_g == 0 {
        return Err(Error::Precondition("sweep bounds must be positive".into()));
    }
    let required = max_h * (1 + max_g);
    if required > MAX_VERTICES {
        return Err(Error::CapacityExceeded { required });
    }
    let mut hs = Vec::new();
    for n in 1..=max_h {
        hs.extend(connected_labelled_graphs(n)?);
    }
    let mut gs = Vec::new();
    for n in 1..=max_g {
        gs.extend(labelled_graphs(n)?);
    }
    let pairs: Vec<(&Graph, &Graph)> = hs
        .iter()
        .flat_map(|h| gs.iter().map(move |g| (h, g)))
        .collect();

    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(h, g)| check_pair(h, g, cap))
        .collect::<Result<_>>()?;

    let mut report = SweepReport {
        max_h,
        max_g,
        pairs: pairs.len(),
        identifiable: 0,
        unidentifiable: 0,
        histogram: BTreeMap::new(),
        mismatches: 0,
        first_mismatch: None,
    };
    for (&(h, g), outcome) in pairs.iter().zip(outcomes) {
        let tag = match outcome {
            Outcome::Skipped => {
                report.unidentifiable += 1;
                CaseTag::Unidentifiable
            }
            Outcome::Agreed(tag) => {
                report.identifiable += 1;
                tag
            }
            Outcome::Failed(detail) => {
                report.mismatches += 1;
                if report.first_mismatch.is_none() {
                    report.first_mismatch = Some(Mismatch {
                        h: serialize_edge_list(h),
                        g: serialize_edge_list(g),
                        detail,
                    });
                }
                continue;
            }
        };
        *report.histogram.entry(tag.to_string()).or_default() += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::DEFAULT_ENUM_CAP;

    #[test]
    fn graph_counts() {
        assert_eq!(labelled_graphs(4).unwrap().len(), 64);
        assert_eq!(connected_labelled_graphs(3).unwrap().len(), 4);
        assert_eq!(connected_labelled_graphs(4).unwrap().len(), 38);
    }

    #[test]
    fn small_sweep_agrees() {
        let r = verify_sweep(2, 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.mismatches, 0);
        assert_eq!(r.pairs, 2 * (1 + 2 + 8));
        assert_eq!(r.identifiable + r.unidentifiable, r.pairs);
    }

    #[test]
    fn rejects_oversized_sweeps() {
        assert!(matches!(
            verify_sweep(8, 8, DEFAULT_ENUM_CAP),
            Err(Error::CapacityExceeded { required: 72 })
        ));
        assert!(verify_sweep(0, 3, DEFAULT_ENUM_CAP).is_err());
    }
}
