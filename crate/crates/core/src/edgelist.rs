//! Plain-text edge lists.
//!
//! The first non-comment line is `n m`, followed by `m` lines `u v`. Anything
//! after `#` on a line is ignored. Serialization writes `u < v` with edges in
//! lexicographic order, so `serialize(parse(t))` is the canonical form of `t`.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Parse {
            line: header_line,
            message: format!("vertex count must be between 1 and {MAX_VERTICES}, got {n}"),
        });
    }

    let mut edges = BTreeSet::new();
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let [a, b] = parse_pair(line, content)?;
        for w in [a, b] {
            if w >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {w} out of range for n = {n}"),
                });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { line, vertex: a });
        }
        let (u, v) = (a.min(b), a.max(b));
        if !edges.insert((u, v)) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found `{content}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{field}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
