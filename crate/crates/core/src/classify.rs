//! The three existence conditions on identifying codes of `G` that decide
//! which closed form gives the identifying-code number of `H ⊙ G`:
//!
//! * (a) a minimum code contained in no closed neighbourhood;
//! * (b) a minimum code `S` and `z ∈ S` such that `S \ {z}` still separates;
//! * (c) a code `S` of size `γ^ID + 1` and `z ∈ S` such that `S \ {z}`
//!   separates and is contained in no closed neighbourhood.
//!
//! (b) and (c) are decided on separating sets instead of codes: (b) holds iff
//! some separating set has size `γ^ID - 1`, and (c) holds iff some separating
//! set of size `γ^ID` lies in no closed neighbourhood (and `γ^ID + 1 <= n`).
//! Adding one vertex to a separating set always yields a code, which gives the
//! witnesses back.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{
    extend_separating, for_each_solution, identifying_code_system, min_hitting_set,
    min_identifying_code, separation_system, DEFAULT_ENUM_CAP,
};
use crate::vertex_set::VertexSet;

/// A code together with the vertex whose removal leaves a separating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removable {
    pub code: VertexSet,
    pub z: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub gamma_id: usize,
    /// Lexicographically least minimum identifying code.
    pub min_code: VertexSet,
    pub a_exists: bool,
    pub a_witness: Option<VertexSet>,
    pub b_exists: bool,
    pub b_witness: Option<Removable>,
    pub c_exists: bool,
    pub c_witness: Option<Removable>,
    /// Set when an enumeration hit its cap before finding a witness. A
    /// `false` for (a) or (c) is then unproven.
    pub caps_hit: bool,
}

/// `set` is contained in no closed neighbourhood of `g`.
pub fn escapes_every_neighborhood(g: &Graph, set: VertexSet) -> bool {
    (0..g.n()).all(|x| !set.is_subset(g.closed(x)))
}

fn require_identifiable(g: &Graph) -> Result<()> {
    match g.twin_pair() {
        Some((x, y)) => Err(Error::NotIdentifiable(format!(
            "vertices {x} and {y} have equal closed neighbourhoods"
        ))),
        None => Ok(()),
    }
}

/// Scan hitting sets of size `k` for the first one passing `accept`,
/// giving up after `cap` candidates.
fn first_accepted(
    cs: &crate::solver::ConstraintSystem,
    k: usize,
    cap: usize,
    mut accept: impl FnMut(VertexSet) -> bool,
) -> Result<Option<VertexSet>> {
    let mut seen = 0usize;
    let mut found = None;
    let mut overflow = false;
    for_each_solution(cs, k, |s| {
        if seen == cap {
            overflow = true;
            return false;
        }
        seen += 1;
        if accept(s) {
            found = Some(s);
            return false;
        }
        true
    });
    match (found, overflow) {
        (Some(s), _) => Ok(Some(s)),
        (None, true) => Err(Error::EnumerationOverflow { cap }),
        (None, false) => Ok(None),
    }
}

fn gamma_id(g: &Graph) -> Result<usize> {
    Ok(min_identifying_code(g)?.optimum)
}

pub fn check_condition_a(g: &Graph) -> Result<Option<VertexSet>> {
    check_condition_a_with(g, gamma_id(g)?, DEFAULT_ENUM_CAP)
}

fn check_condition_a_with(g: &Graph, gamma: usize, cap: usize) -> Result<Option<VertexSet>> {
    let cs = identifying_code_system(g)?;
    first_accepted(&cs, gamma, cap, |s| escapes_every_neighborhood(g, s))
}

pub fn check_condition_b(g: &Graph) -> Result<Option<Removable>> {
    check_condition_b_with(g, gamma_id(g)?)
}

fn check_condition_b_with(g: &Graph, gamma: usize) -> Result<Option<Removable>> {
    let sep = min_hitting_set(&separation_system(g)?);
    if sep.optimum + 1 != gamma {
        return Ok(None);
    }
    let t = sep.witness;
    // No separating set is smaller than γ^ID - 1, so |t| = γ^ID - 1 and t
    // cannot cover V(G); the added vertex is the one with an empty trace.
    let code = extend_separating(g, t)?;
    let z = code.difference(t).first().ok_or_else(|| {
        Error::Precondition(format!("separating set {t} is already an identifying code"))
    })?;
    Ok(Some(Removable { code, z }))
}

pub fn check_condition_c(g: &Graph) -> Result<Option<Removable>> {
    check_condition_c_with(g, gamma_id(g)?, DEFAULT_ENUM_CAP)
}

fn check_condition_c_with(g: &Graph, gamma: usize, cap: usize) -> Result<Option<Removable>> {
    let cs = separation_system(g)?;
    if gamma + 1 > g.n() {
        return Ok(None);
    }
    let found = first_accepted(&cs, gamma, cap, |t| escapes_every_neighborhood(g, t))?;
    Ok(found.map(|t| {
        let all = g.vertices();
        let z = if g.covers(t, all) {
            all.difference(t).first().expect("|T| < n")
        } else {
            (0..g.n())
                .find(|&x| !g.closed(x).intersects(t))
                .expect("uncovered vertex")
        };
        Removable { code: t.with(z), z }
    }))
}

fn soften<T>(r: Result<Option<T>>, caps_hit: &mut bool) -> Result<Option<T>> {
    match r {
        Err(Error::EnumerationOverflow { .. }) => {
            *caps_hit = true;
            Ok(None)
        }
        other => other,
    }
}

pub fn classify(g: &Graph) -> Result<Classification> {
    classify_with_cap(g, DEFAULT_ENUM_CAP)
}

pub fn classify_with_cap(g: &Graph, cap: usize) -> Result<Classification> {
    require_identifiable(g)?;
    let min = min_identifying_code(g)?;
    let gamma = min.optimum;
    let mut caps_hit = false;
    let a = soften(check_condition_a_with(g, gamma, cap), &mut caps_hit)?;
    let b = check_condition_b_with(g, gamma)?;
    let c = soften(check_condition_c_with(g, gamma, cap), &mut caps_hit)?;
    Ok(Classification {
        gamma_id: gamma,
        min_code: min.witness,
        a_exists: a.is_some(),
        a_witness: a,
        b_exists: b.is_some(),
        b_witness: b,
        c_exists: c.is_some(),
        c_witness: c,
        caps_hit,
    })
}
