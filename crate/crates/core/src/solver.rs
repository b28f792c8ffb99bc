//! Exact minimum hitting set over 64-bit masks, and the graph invariants
//! that reduce to it.
//!
//! Every invariant is a family of vertex sets that a solution must meet:
//!
//! | invariant              | constraints                                   |
//! |------------------------|-----------------------------------------------|
//! | identifying code       | `N[x]` for all `x`, `N[x] △ N[y]` for `x != y` |
//! | dominating set         | `N[x]`                                        |
//! | total dominating set   | `N(x)`                                        |
//! | separating set         | `N[x] △ N[y]`                                 |
//!
//! The search branches on the vertices of the smallest unhit constraint,
//! most frequent first, and prunes with a greedy packing of pairwise
//! disjoint unhit constraints. Witnesses are the lexicographically least
//! optimal solution, found by a second pass of bounded feasibility queries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Default bound on the number of solutions [`enumerate_solutions`] may return.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// A hitting-set instance: choose vertices meeting every constraint.
///
/// Constraints are stored canonically: sorted by size then mask, without
/// duplicates, and without any constraint that contains another one (hitting
/// the smaller one already hits it). The solution space is unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    universe: usize,
    constraints: Vec<VertexSet>,
}

impl ConstraintSystem {
    pub fn new(universe: usize, constraints: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::VertexCount(universe));
        }
        let all = VertexSet::full(universe);
        let mut cs: Vec<VertexSet> = Vec::new();
        for (i, c) in constraints.into_iter().enumerate() {
            if c.is_empty() {
                return Err(Error::Infeasible(i));
            }
            if !c.is_subset(all) {
                return Err(Error::Precondition(format!(
                    "constraint {i} = {c} leaves the universe 0..{universe}"
                )));
            }
            cs.push(c);
        }
        cs.sort_by_key(|c| (c.len(), c.mask()));
        cs.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(cs.len());
        for c in cs {
            if !kept.iter().any(|k| k.is_subset(c)) {
                kept.push(c);
            }
        }
        Ok(ConstraintSystem {
            universe,
            constraints: kept,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn constraints(&self) -> &[VertexSet] {
        &self.constraints
    }

    pub fn is_hit_by(&self, set: VertexSet) -> bool {
        self.constraints.iter().all(|c| c.intersects(set))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub optimum: usize,
    /// Lexicographically least optimal solution.
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

struct Search<'a> {
    constraints: &'a [u64],
    nodes: u64,
    /// Exclusive bound: only solutions smaller than this are of interest.
    bound: usize,
    best: Option<u64>,
    stop_at_first: bool,
}

impl Search<'_> {
    fn run(&mut self, chosen: u64, count: usize, allowed: u64) {
        self.nodes += 1;
        let unhit: Vec<u64> = self
            .constraints
            .iter()
            .copied()
            .filter(|c| c & chosen == 0)
            .collect();
        if unhit.is_empty() {
            if count < self.bound {
                self.bound = count;
                self.best = Some(chosen);
            }
            return;
        }
        if count + 1 >= self.bound {
            return;
        }
        let mut branch = 0u64;
        let mut branch_size = u32::MAX;
        for &c in &unhit {
            let avail = c & allowed;
            let size = avail.count_ones();
            if size == 0 {
                return;
            }
            if size < branch_size {
                branch_size = size;
                branch = avail;
            }
        }
        if count + packing_bound(&unhit, allowed) >= self.bound {
            return;
        }

        let mut order: Vec<(u32, u32)> = VertexSet::from_mask(branch)
            .iter()
            .map(|v| {
                let bit = 1u64 << v;
                let freq = unhit.iter().filter(|&&c| c & bit != 0).count() as u32;
                (freq, v as u32)
            })
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut allowed = allowed;
        for (_, v) in order {
            let bit = 1u64 << v;
            self.run(chosen | bit, count + 1, allowed);
            if self.stop_at_first && self.best.is_some() {
                return;
            }
            allowed &= !bit;
        }
    }
}

/// Size of a greedily built family of pairwise disjoint constraints, each
/// restricted to `allowed`. Any hitting set needs one vertex per member.
fn packing_bound(unhit: &[u64], allowed: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &c in unhit {
        let avail = c & allowed;
        if avail & used == 0 {
            used |= avail;
            count += 1;
        }
    }
    count
}

fn greedy_upper_bound(cs: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let unhit: Vec<u64> = cs.iter().copied().filter(|c| c & chosen == 0).collect();
        if unhit.is_empty() {
            return chosen;
        }
        let best = (0..64)
            .max_by_key(|&v| {
                let bit = 1u64 << v;
                (
                    unhit.iter().filter(|&&c| c & bit != 0).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty range");
        chosen |= 1u64 << best;
    }
}

fn masks(cs: &ConstraintSystem) -> Vec<u64> {
    cs.constraints.iter().map(|c| c.mask()).collect()
}

/// Is there a hitting set of size at most `budget` containing `forced` and
/// avoiding `forbidden`?
fn feasible(
    cs: &[u64],
    universe: u64,
    forced: u64,
    forbidden: u64,
    budget: usize,
    nodes: &mut u64,
) -> Option<u64> {
    let mut search = Search {
        constraints: cs,
        nodes: 0,
        bound: budget + 1,
        best: None,
        stop_at_first: true,
    };
    let count = forced.count_ones() as usize;
    if count <= budget {
        search.run(forced, count, universe & !forbidden & !forced);
    }
    *nodes += search.nodes;
    search.best
}

/// Minimum hitting set with a lexicographically least witness.
pub fn min_hitting_set(cs: &ConstraintSystem) -> SolveResult {
    let constraints = masks(cs);
    let universe = VertexSet::full(cs.universe).mask();
    let greedy = greedy_upper_bound(&constraints);
    let mut search = Search {
        constraints: &constraints,
        nodes: 0,
        bound: greedy.count_ones() as usize,
        best: Some(greedy),
        stop_at_first: false,
    };
    search.run(0, 0, universe);
    let optimum = search.bound;
    let mut nodes = search.nodes;

    // Fix vertices in index order, keeping each one iff an optimal solution
    // extending the current prefix still exists.
    let mut forced = 0u64;
    let mut forbidden = 0u64;
    for v in 0..cs.universe {
        if forced.count_ones() as usize == optimum {
            break;
        }
        let bit = 1u64 << v;
        if feasible(
            &constraints,
            universe,
            forced | bit,
            forbidden,
            optimum,
            &mut nodes,
        )
        .is_some()
        {
            forced |= bit;
        } else {
            forbidden |= bit;
        }
    }
    debug_assert!(cs.is_hit_by(VertexSet::from_mask(forced)));
    SolveResult {
        optimum,
        witness: VertexSet::from_mask(forced),
        nodes_explored: nodes,
    }
}

/// Does a hitting set of size at most `budget` exist? Returns one if so.
pub fn hitting_set_within(cs: &ConstraintSystem, budget: usize) -> Option<VertexSet> {
    let constraints = masks(cs);
    let mut nodes = 0;
    feasible(
        &constraints,
        VertexSet::full(cs.universe).mask(),
        0,
        0,
        budget,
        &mut nodes,
    )
    .map(VertexSet::from_mask)
}

/// All hitting sets of cardinality exactly `k`, in lexicographic order.
/// Fails if there are more than `cap` of them.
pub fn enumerate_solutions(cs: &ConstraintSystem, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    if cap == 0 {
        return Err(Error::Precondition(
            "enumeration cap must be positive".into(),
        ));
    }
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_solution(cs, k, |s| {
        if out.len() == cap {
            overflow = true;
            return false;
        }
        out.push(s);
        true
    });
    if overflow {
        return Err(Error::EnumerationOverflow { cap });
    }
    Ok(out)
}

/// Visit the hitting sets of cardinality exactly `k` in lexicographic order
/// until `visit` returns `false`.
pub fn for_each_solution(
    cs: &ConstraintSystem,
    k: usize,
    mut visit: impl FnMut(VertexSet) -> bool,
) {
    let mut e = Enumerator {
        constraints: masks(cs),
        universe: cs.universe,
        k,
        visit: &mut visit,
    };
    if k <= cs.universe {
        e.run(0, 0, 0);
    }
}

struct Enumerator<'a> {
    constraints: Vec<u64>,
    universe: usize,
    k: usize,
    visit: &'a mut dyn FnMut(VertexSet) -> bool,
}

impl Enumerator<'_> {
    /// Returns `false` once the visitor asks to stop.
    fn run(&mut self, idx: usize, chosen: u64, count: usize) -> bool {
        let needed = self.k - count;
        if needed == 0 {
            if self.constraints.iter().all(|c| c & chosen != 0) {
                return (self.visit)(VertexSet::from_mask(chosen));
            }
            return true;
        }
        if self.universe - idx < needed {
            return true;
        }
        let remaining = VertexSet::full(self.universe).mask() & !VertexSet::full(idx).mask();
        let unhit: Vec<u64> = self
            .constraints
            .iter()
            .copied()
            .filter(|c| c & chosen == 0)
            .collect();
        if unhit.iter().any(|c| c & remaining == 0) || packing_bound(&unhit, remaining) > needed {
            return true;
        }
        self.run(idx + 1, chosen | (1u64 << idx), count + 1) && self.run(idx + 1, chosen, count)
    }
}

pub fn identifying_code_system(g: &Graph) -> Result<ConstraintSystem> {
    if let Some((x, y)) = g.twin_pair() {
        return Err(Error::NotIdentifiable(format!(
            "vertices {x} and {y} have equal closed neighbourhoods"
        )));
    }
    let cover = (0..g.n()).map(|x| g.closed(x));
    ConstraintSystem::new(g.n(), cover.chain(separation_constraints(g)))
}

pub fn separation_system(g: &Graph) -> Result<ConstraintSystem> {
    if let Some((x, y)) = g.twin_pair() {
        return Err(Error::NotIdentifiable(format!(
            "vertices {x} and {y} have equal closed neighbourhoods"
        )));
    }
    ConstraintSystem::new(g.n(), separation_constraints(g))
}

fn separation_constraints(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    (0..g.n()).flat_map(move |x| {
        (x + 1..g.n()).map(move |y| g.closed(x).symmetric_difference(g.closed(y)))
    })
}

pub fn domination_system(g: &Graph) -> ConstraintSystem {
    ConstraintSystem::new(g.n(), (0..g.n()).map(|x| g.closed(x)))
        .expect("closed neighbourhoods are nonempty")
}

pub fn total_domination_system(g: &Graph) -> Result<ConstraintSystem> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    ConstraintSystem::new(g.n(), (0..g.n()).map(|x| g.neighbors(x)))
}

/// Minimum identifying code; its size is the identifying-code number.
pub fn min_identifying_code(g: &Graph) -> Result<SolveResult> {
    Ok(min_hitting_set(&identifying_code_system(g)?))
}

pub fn min_dominating_set(g: &Graph) -> SolveResult {
    min_hitting_set(&domination_system(g))
}

pub fn min_total_dominating_set(g: &Graph) -> Result<SolveResult> {
    Ok(min_hitting_set(&total_domination_system(g)?))
}

/// Minimum set whose traces are pairwise distinct (coverage not required).
pub fn min_separating_set(g: &Graph) -> Result<SolveResult> {
    Ok(min_hitting_set(&separation_system(g)?))
}

/// Turn a separating set into an identifying code by adding one vertex:
/// the unique vertex with an empty trace if there is one, otherwise the
/// smallest vertex of the graph.
pub fn extend_separating(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    let all = g.vertices();
    if !s.is_subset(all) {
        return Err(Error::Precondition(format!(
            "{s} is not a subset of 0..{}",
            g.n()
        )));
    }
    if !g.is_identifiable() {
        return Err(Error::Precondition("graph is not identifiable".into()));
    }
    if !g.separates(s, all) {
        return Err(Error::Precondition(format!("{s} does not separate V(G)")));
    }
    // Separation leaves at most one vertex with an empty trace.
    let z = (0..g.n())
        .find(|&x| !g.closed(x).intersects(s))
        .unwrap_or(0);
    let code = s.with(z);
    debug_assert!(g.is_identifying_code(code));
    Ok(code)
}
