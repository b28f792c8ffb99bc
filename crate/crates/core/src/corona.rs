//! Corona products `H ⊙ G`.
//!
//! The product contains `H` on indices `0..m` followed by one block of
//! `|V(G)|` indices per vertex of `H`; block `v` is the copy `G_v` and every
//! vertex of it is joined to `v`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Index bookkeeping for `H ⊙ G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLayout {
    pub h_order: usize,
    pub g_order: usize,
}

/// A vertex of a corona product in factor coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoronaVertex {
    /// Vertex `v` of `H`.
    Base(usize),
    /// Vertex `u` of the copy `G_v`.
    Copy { base: usize, inner: usize },
}

impl fmt::Display for CoronaVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoronaVertex::Base(v) => write!(f, "{v}"),
            CoronaVertex::Copy { base, inner } => write!(f, "{base}:{inner}"),
        }
    }
}

impl CoronaLayout {
    pub fn new(h_order: usize, g_order: usize) -> Result<Self> {
        let layout = CoronaLayout { h_order, g_order };
        let required = layout.total();
        if required > MAX_VERTICES {
            return Err(Error::CapacityExceeded { required });
        }
        Ok(layout)
    }

    pub fn total(&self) -> usize {
        self.h_order * (1 + self.g_order)
    }

    pub fn h_index(&self, v: usize) -> usize {
        debug_assert!(v < self.h_order);
        v
    }

    pub fn copy_index(&self, v: usize, u: usize) -> usize {
        debug_assert!(v < self.h_order && u < self.g_order);
        self.h_order + v * self.g_order + u
    }

    pub fn base_vertices(&self) -> VertexSet {
        VertexSet::full(self.h_order)
    }

    /// All indices of the copy `G_v`.
    pub fn block(&self, v: usize) -> VertexSet {
        VertexSet::full(self.g_order).shifted(self.copy_index(v, 0))
    }

    /// The copy of `set ⊆ V(G)` inside block `v`.
    pub fn lift(&self, v: usize, set: VertexSet) -> VertexSet {
        set.shifted(self.copy_index(v, 0))
    }

    /// The part of `set` inside block `v`, expressed in `G` coordinates.
    pub fn project(&self, v: usize, set: VertexSet) -> VertexSet {
        VertexSet::from_mask(set.intersection(self.block(v)).mask() >> self.copy_index(v, 0))
    }

    pub fn decode(&self, index: usize) -> CoronaVertex {
        if index < self.h_order {
            CoronaVertex::Base(index)
        } else {
            let rel = index - self.h_order;
            CoronaVertex::Copy {
                base: rel / self.g_order,
                inner: rel % self.g_order,
            }
        }
    }

    /// Labels of the elements of `set`: `v` for base vertices, `v:u` for copies.
    pub fn labels(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|i| self.decode(i).to_string()).collect()
    }
}

/// Build `H ⊙ G`.
pub fn corona(h: &Graph, g: &Graph) -> Result<(Graph, CoronaLayout)> {
    let layout = CoronaLayout::new(h.n(), g.n())?;
    let mut adj = vec![VertexSet::EMPTY; layout.total()];
    for v in 0..h.n() {
        let block = layout.block(v);
        adj[v] = h.neighbors(v).union(block);
        for u in 0..g.n() {
            adj[layout.copy_index(v, u)] = layout.lift(v, g.neighbors(u)).with(v);
        }
    }
    Ok((Graph::from_adjacency(adj)?, layout))
}

/// Why `H ⊙ G` has no identifying code, or `None` if it has one.
///
/// A trivial `H` needs an identifiable `G` with maximum degree at most
/// `|V(G)| - 2`; a nontrivial connected `H` only needs `G` identifiable. A
/// disconnected `H` is decided component by component.
pub fn unidentifiable_reason(h: &Graph, g: &Graph) -> Option<String> {
    if let Some((x, y)) = g.twin_pair() {
        return Some(format!(
            "G is not identifiable: vertices {x} and {y} have equal closed neighbourhoods"
        ));
    }
    let has_trivial_component = h.components().iter().any(|c| c.len() == 1);
    if has_trivial_component && g.max_degree() + 2 > g.n() {
        let hub = (0..g.n()).find(|&u| g.degree(u) + 1 == g.n()).unwrap_or(0);
        return Some(format!(
            "H has an isolated vertex and G has a universal vertex {hub} (maximum degree {} > |V(G)| - 2)",
            g.max_degree()
        ));
    }
    None
}

pub fn corona_identifiable(h: &Graph, g: &Graph) -> bool {
    unidentifiable_reason(h, g).is_none()
}
