//! Named graph families and the spec language used to refer to them.
//!
//! ```text
//! path:k  cycle:k  complete:k  empty:k  star:k  fan:k  wheel:k  binomial:k
//! g3  k1  file:PATH  corona:(SPEC),(SPEC)
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::corona::corona;
use crate::edgelist;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    Fan(usize),
    Wheel(usize),
    Binomial(usize),
    G3,
    File(PathBuf),
    Corona(Box<GraphSpec>, Box<GraphSpec>),
}

impl GraphSpec {
    fn minimum(&self) -> usize {
        match self {
            GraphSpec::Cycle(_) | GraphSpec::Fan(_) | GraphSpec::Wheel(_) => 3,
            _ => 1,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if s.eq_ignore_ascii_case("g3") {
            return Ok(GraphSpec::G3);
        }
        if let Some(rest) = s.strip_prefix("file:") {
            if rest.is_empty() {
                return Err(bad("missing path"));
            }
            return Ok(GraphSpec::File(PathBuf::from(rest)));
        }
        if let Some(rest) = s.strip_prefix("corona:") {
            let (left, rest) = take_group(rest).ok_or_else(|| bad("expected `(SPEC)`"))?;
            let rest = rest
                .strip_prefix(',')
                .ok_or_else(|| bad("expected `,` between factors"))?;
            let (right, rest) = take_group(rest).ok_or_else(|| bad("expected `(SPEC)`"))?;
            if !rest.trim().is_empty() {
                return Err(bad("trailing input after corona factors"));
            }
            return Ok(GraphSpec::Corona(
                Box::new(left.parse()?),
                Box::new(right.parse()?),
            ));
        }
        if let Some(k) = s
            .strip_prefix(['k', 'K'])
            .and_then(|d| d.parse::<usize>().ok())
        {
            return check_param(GraphSpec::Complete(k), k, s);
        }
        let (name, param) = s.split_once(':').ok_or_else(|| bad("expected FAMILY:k"))?;
        let k: usize = param
            .trim()
            .parse()
            .map_err(|_| bad("parameter is not a number"))?;
        let spec = match name.trim() {
            "path" => GraphSpec::Path(k),
            "cycle" => GraphSpec::Cycle(k),
            "complete" => GraphSpec::Complete(k),
            "empty" => GraphSpec::Empty(k),
            "star" => GraphSpec::Star(k),
            "fan" => GraphSpec::Fan(k),
            "wheel" => GraphSpec::Wheel(k),
            "binomial" => GraphSpec::Binomial(k),
            _ => return Err(bad("unknown family")),
        };
        check_param(spec, k, s)
    }
}

fn check_param(spec: GraphSpec, k: usize, text: &str) -> Result<GraphSpec> {
    if k < spec.minimum() {
        return Err(Error::BadSpec {
            spec: text.to_string(),
            reason: format!("parameter must be at least {}", spec.minimum()),
        });
    }
    Ok(spec)
}

/// Split `(inner)rest` at the matching parenthesis.
fn take_group(s: &str) -> Option<(&str, &str)> {
    let s = s.trim_start();
    if !s.starts_with('(') {
        return None;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&s[1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(k) => write!(f, "path:{k}"),
            GraphSpec::Cycle(k) => write!(f, "cycle:{k}"),
            GraphSpec::Complete(k) => write!(f, "complete:{k}"),
            GraphSpec::Empty(k) => write!(f, "empty:{k}"),
            GraphSpec::Star(k) => write!(f, "star:{k}"),
            GraphSpec::Fan(k) => write!(f, "fan:{k}"),
            GraphSpec::Wheel(k) => write!(f, "wheel:{k}"),
            GraphSpec::Binomial(k) => write!(f, "binomial:{k}"),
            GraphSpec::G3 => write!(f, "g3"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
            GraphSpec::Corona(h, g) => write!(f, "corona:({h}),({g})"),
        }
    }
}

pub fn make_family(spec: &GraphSpec) -> Result<Graph> {
    match spec {
        GraphSpec::Path(k) => path(*k),
        GraphSpec::Cycle(k) => cycle(*k),
        GraphSpec::Complete(k) => complete(*k),
        GraphSpec::Empty(k) => empty(*k),
        GraphSpec::Star(k) => star(*k),
        GraphSpec::Fan(k) => fan(*k),
        GraphSpec::Wheel(k) => wheel(*k),
        GraphSpec::Binomial(k) => binomial_tree(*k),
        GraphSpec::G3 => Ok(g3()),
        GraphSpec::File(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            edgelist::parse_edge_list(&text)
        }
        GraphSpec::Corona(h, g) => Ok(corona(&make_family(h)?, &make_family(g)?)?.0),
    }
}

fn at_least(family: &str, k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::BadSpec {
            spec: format!("{family}:{k}"),
            reason: format!("parameter must be at least {min}"),
        });
    }
    Ok(())
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// The edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty", n, 1)?;
    Graph::from_edges(n, &[])
}

/// Star with centre 0 and `n` leaves, i.e. `K1 ⊙ empty(n)`.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Ok(corona(&complete(1)?, &empty(n)?)?.0)
}

/// Fan `K1 ⊙ P_n`: hub 0, path on `1..=n`.
pub fn fan(n: usize) -> Result<Graph> {
    at_least("fan", n, 3)?;
    Ok(corona(&complete(1)?, &path(n)?)?.0)
}

/// Wheel `K1 ⊙ C_n`: hub 0, rim on `1..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel", n, 3)?;
    Ok(corona(&complete(1)?, &cycle(n)?)?.0)
}

/// Binomial tree: `T_1 = K1 ⊙ K1`, `T_k = T_{k-1} ⊙ K1`. Has `2^k` vertices.
pub fn binomial_tree(k: usize) -> Result<Graph> {
    at_least("binomial", k, 1)?;
    if k > 6 {
        return Err(Error::CapacityExceeded {
            required: 1usize << k.min(20),
        });
    }
    let k1 = complete(1)?;
    let mut t = corona(&k1, &k1)?.0;
    for _ in 1..k {
        t = corona(&t, &k1)?.0;
    }
    Ok(t)
}

/// The 7-vertex graph `G3`: hub 0 joined to 2, 4, 6 of the rim cycle 1-2-3-4-5-6-1.
pub fn g3() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 2),
            (0, 4),
            (0, 6),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 1),
        ],
    )
    .expect("g3 edge list is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        for text in [
            "path:4",
            "cycle:5",
            "complete:3",
            "empty:2",
            "star:3",
            "fan:4",
            "wheel:6",
            "binomial:3",
            "g3",
            "file:/tmp/x.txt",
            "corona:(path:2),(complete:1)",
            "corona:(corona:(path:2),(complete:1)),(g3)",
        ] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("k1".parse::<GraphSpec>().unwrap(), GraphSpec::Complete(1));
        assert_eq!("G3".parse::<GraphSpec>().unwrap(), GraphSpec::G3);
    }

    #[test]
    fn rejects_malformed_specs() {
        for text in [
            "path",
            "path:x",
            "path:0",
            "cycle:2",
            "wheel:2",
            "fan:2",
            "banana:3",
            "corona:(path:2)",
            "corona:(path:2),(k1)x",
            "corona:path:2,k1",
            "file:",
        ] {
            assert!(
                matches!(text.parse::<GraphSpec>(), Err(Error::BadSpec { .. })),
                "{text} should not parse"
            );
        }
    }

    #[test]
    fn path4_edges() {
        let g = make_family(&"path:4".parse().unwrap()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn g3_matches_drawing() {
        let g = g3();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(0), 3);
        let degrees: Vec<_> = (0..7).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![3, 2, 3, 2, 3, 2, 3]);
    }

    #[test]
    fn binomial_trees() {
        let t3 = binomial_tree(3).unwrap();
        assert_eq!(t3.n(), 8);
        assert_eq!(t3.edge_count(), 7);
        assert!(t3.is_connected());
        assert_eq!(binomial_tree(1).unwrap(), complete(2).unwrap());
        assert_eq!(binomial_tree(6).unwrap().n(), 64);
        assert!(binomial_tree(7).is_err());
    }

    #[test]
    fn star_and_wheel_shapes() {
        let s = star(3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert_eq!(s.edge_count(), 3);
        let w = wheel(5).unwrap();
        assert_eq!(w.degree(0), 5);
        assert_eq!(w.edge_count(), 10);
    }

    #[test]
    fn corona_spec_builds_product() {
        let g = make_family(&"corona:(complete:2),(k1)".parse().unwrap()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.diameter(), Some(3));
    }
}
