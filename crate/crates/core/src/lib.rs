//! Exact identifying codes, domination numbers and corona products on graphs
//! with at most 64 vertices.

pub mod classify;
pub mod cli;
pub mod corona;
pub mod edgelist;
pub mod error;
pub mod family;
pub mod graph;
pub mod report;
pub mod solver;
pub mod sweep;
pub mod theorem;
pub mod vertex_set;

pub use corona::{corona, corona_identifiable, CoronaLayout, CoronaVertex};
pub use error::{Error, Result};
pub use family::{make_family, GraphSpec};
pub use graph::Graph;
pub use vertex_set::VertexSet;
