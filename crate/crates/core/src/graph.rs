//! Immutable simple graphs on at most 64 vertices, with the neighbourhood
//! predicates that identifying codes are defined by.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`, `1 <= n <= 64`.
///
/// `adj[v]` is the open neighbourhood of `v`. The adjacency is symmetric and
/// irreflexive, and never mentions vertices outside `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Build a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidAdjacency(format!("self-loop at {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Build a graph from open-neighbourhood masks, validating the invariants.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(Error::InvalidAdjacency(format!(
                    "vertex {v} has neighbours outside 0..{n}"
                )));
            }
            if nb.contains(v) {
                return Err(Error::InvalidAdjacency(format!("self-loop at {v}")));
            }
            if let Some(u) = nb.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::InvalidAdjacency(format!(
                    "edge {v}-{u} is not symmetric"
                )));
            }
        }
        Ok(Graph { adj })
    }

    /// The graph on `n` vertices whose edges are the set bits of `code`,
    /// indexed by the pairs `(u, v)`, `u < v`, in lexicographic order.
    /// Used to enumerate all labelled graphs of a given order.
    pub fn from_edge_code(n: usize, code: u64) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bit < 64 && code & (1 << bit) != 0 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood `N(v)`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]` without range checking.
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(self.closed(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_trivial(&self) -> bool {
        self.n() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|a| a.len() == n - 1)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(|a| a.is_empty())
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let comp = self.reach(VertexSet::singleton(v));
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(VertexSet::singleton(0)) == self.vertices()
    }

    fn reach(&self, start: VertexSet) -> VertexSet {
        let mut frontier = start;
        loop {
            let next = self.expand(frontier);
            if next == frontier {
                return frontier;
            }
            frontier = next;
        }
    }

    /// Union of the closed neighbourhoods of every vertex in `set`.
    pub fn expand(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, v| acc.union(self.adj[v]))
    }

    /// Diameter by repeated neighbourhood expansion; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let all = self.vertices();
        let mut diam = 0;
        for v in 0..self.n() {
            let mut ball = VertexSet::singleton(v);
            let mut radius = 0;
            while ball != all {
                let next = self.expand(ball);
                if next == ball {
                    return None;
                }
                ball = next;
                radius += 1;
            }
            diam = diam.max(radius);
        }
        Some(diam)
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in ascending order.
    /// The second value maps new indices back to old ones.
    pub fn induced(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let map = set.to_vec();
        check_order(map.len())?;
        let adj = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[old].contains(w))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { required: n });
        }
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a.shifted(offset)));
        Ok(Graph { adj })
    }

    /// Trace of `v` on `code`: `N[v] ∩ code`.
    pub fn trace(&self, v: usize, code: VertexSet) -> VertexSet {
        self.closed(v).intersection(code)
    }

    /// `c` covers `s`: every `x` in `s` has a nonempty trace on `c`.
    pub fn covers(&self, c: VertexSet, s: VertexSet) -> bool {
        s.iter().all(|x| self.closed(x).intersects(c))
    }

    /// `c` separates `s`: the traces of the vertices in `s` are pairwise distinct.
    pub fn separates(&self, c: VertexSet, s: VertexSet) -> bool {
        let mut traces: Vec<u64> = s.iter().map(|x| self.trace(x, c).mask()).collect();
        traces.sort_unstable();
        traces.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_identifying_code(&self, c: VertexSet) -> bool {
        let all = self.vertices();
        c.is_subset(all) && self.covers(c, all) && self.separates(c, all)
    }

    /// A graph admits an identifying code iff its closed neighbourhoods are distinct.
    pub fn is_identifiable(&self) -> bool {
        self.separates(self.vertices(), self.vertices())
    }

    /// First pair of vertices with equal closed neighbourhoods.
    pub fn twin_pair(&self) -> Option<(usize, usize)> {
        (0..self.n()).find_map(|x| {
            (x + 1..self.n())
                .find(|&y| self.closed(x) == self.closed(y))
                .map(|y| (x, y))
        })
    }

    /// `d` dominates the graph: every closed neighbourhood meets `d`.
    pub fn dominates(&self, d: VertexSet) -> bool {
        self.covers(d, self.vertices())
    }

    /// `t` totally dominates the graph: every open neighbourhood meets `t`.
    pub fn totally_dominates(&self, t: VertexSet) -> bool {
        self.adj.iter().all(|a| a.intersects(t))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
