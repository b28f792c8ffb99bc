//! Closed forms for special families.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

use super::construct::representatives;

/// `γ^ID(P_n)` for `n >= 3`.
pub fn path_value(n: usize) -> Option<usize> {
    (n >= 3).then(|| n / 2 + 1)
}

/// `γ^ID(C_n)` for `n >= 4`.
pub fn cycle_value(n: usize) -> Option<usize> {
    match n {
        4 | 5 => Some(3),
        n if n >= 6 && n % 2 == 0 => Some(n / 2),
        n if n >= 6 => Some((n + 3) / 2),
        _ => None,
    }
}

/// `γ^ID(F_n)` for the fan `K1 ⊙ P_n`; not identifiable for `n <= 3`.
pub fn fan_value(n: usize) -> Option<usize> {
    match n {
        0..=3 => None,
        4 => Some(4),
        n => Some(n / 2 + 1),
    }
}

/// `γ^ID(W_n)` for the wheel `K1 ⊙ C_n`; not identifiable for `n = 3`.
pub fn wheel_value(n: usize) -> Option<usize> {
    match n {
        0..=3 => None,
        4 => Some(4),
        n if n % 2 == 0 => Some(n / 2),
        n => Some((n + 3) / 2),
    }
}

/// `γ^ID` of the star with `n >= 3` leaves.
pub fn star_value(n: usize) -> Option<usize> {
    (n >= 3).then_some(n)
}

/// `γ^ID(T_k) = 2^(k-1)` for binomial trees of order `k >= 3`.
pub fn gamma_id_binomial_tree(k: usize) -> Result<usize> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "binomial tree formula needs order at least 3, got {k}"
        )));
    }
    if k > 63 {
        return Err(Error::Precondition(format!("order {k} overflows")));
    }
    Ok(1usize << (k - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantResult {
    pub value: usize,
    /// `H` on `0..m`, then the pendants of vertex 0, of vertex 1, and so on.
    pub graph: Graph,
    pub witness: VertexSet,
}

/// `H` with `counts[i] >= 1` pendant vertices attached to vertex `i`.
///
/// The identifying-code number is `Σ counts[i]` unless the result is
/// `K_m ⊙ K1` (complete `H`, every count 1), which is rejected.
pub fn gamma_id_pendant(h: &Graph, counts: &[usize]) -> Result<PendantResult> {
    let m = h.n();
    if counts.len() != m {
        return Err(Error::Precondition(format!(
            "expected {m} pendant counts, got {}",
            counts.len()
        )));
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(Error::Precondition(format!(
            "vertex {i} needs at least one pendant"
        )));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("H must be connected".into()));
    }
    if h.is_complete() && counts.iter().all(|&c| c == 1) {
        return Err(Error::ExcludedCase(format!(
            "this is K{m} ⊙ K1, whose value is {}",
            m + 1
        )));
    }
    let total: usize = counts.iter().sum();
    if m + total > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            required: m + total,
        });
    }

    let mut starts = Vec::with_capacity(m);
    let mut next = m;
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for (i, &c) in counts.iter().enumerate() {
        starts.push(next);
        edges.extend((next..next + c).map(|u| (i, u)));
        next += c;
    }
    let graph = Graph::from_edges(next, &edges)?;
    let pendants = |i: usize| VertexSet::full(counts[i]).shifted(starts[i]);
    let firsts: VertexSet = starts.iter().copied().collect();
    let all_pendants = VertexSet::full(next).difference(VertexSet::full(m));

    let witness = if m == 1 {
        pendants(0)
    } else if h.is_complete() {
        let j = counts
            .iter()
            .position(|&c| c >= 2)
            .expect("some count exceeds 1");
        let k = if j == 0 { 1 } else { 0 };
        all_pendants
            .difference(VertexSet::from([starts[j], starts[k]]))
            .union(VertexSet::from([j, k]))
    } else {
        // Minimum code of H ⊙ K1 on {v_i, first pendant of v_i}, plus the rest.
        let reps = representatives(h);
        let on_first: VertexSet = (0..m)
            .filter(|&v| !reps.contains(v))
            .map(|v| starts[v])
            .collect();
        reps.union(on_first).union(all_pendants.difference(firsts))
    };
    debug_assert!(graph.is_identifying_code(witness));
    Ok(PendantResult {
        value: total,
        graph,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, path};
    use crate::solver::min_identifying_code;

    #[test]
    fn family_values() {
        assert_eq!(path_value(7), Some(4));
        assert_eq!(cycle_value(7), Some(5));
        assert_eq!(cycle_value(6), Some(3));
        assert_eq!(cycle_value(3), None);
        assert_eq!(fan_value(3), None);
        assert_eq!(fan_value(4), Some(4));
        assert_eq!(fan_value(9), Some(5));
        assert_eq!(wheel_value(4), Some(4));
        assert_eq!(wheel_value(7), Some(5));
        assert_eq!(wheel_value(8), Some(4));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(gamma_id_binomial_tree(3).unwrap(), 4);
        assert_eq!(gamma_id_binomial_tree(4).unwrap(), 8);
        assert!(gamma_id_binomial_tree(2).is_err());
    }

    #[test]
    fn pendant_examples() {
        let r = gamma_id_pendant(&path(3).unwrap(), &[1, 2, 1]).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.graph.is_identifying_code(r.witness));
        assert_eq!(min_identifying_code(&r.graph).unwrap().optimum, 4);

        assert!(matches!(
            gamma_id_pendant(&complete(3).unwrap(), &[1, 1, 1]),
            Err(Error::ExcludedCase(_))
        ));

        let r = gamma_id_pendant(&complete(2).unwrap(), &[2, 1]).unwrap();
        assert_eq!(r.value, 3);
        // v_1, v_2 and the second pendant of v_1
        assert_eq!(r.witness, VertexSet::from([0, 1, 3]));
        assert!(r.graph.is_identifying_code(r.witness));
    }

    #[test]
    fn pendant_rejects_bad_counts() {
        let p3 = path(3).unwrap();
        assert!(gamma_id_pendant(&p3, &[1, 1]).is_err());
        assert!(gamma_id_pendant(&p3, &[1, 0, 1]).is_err());
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(gamma_id_pendant(&disconnected, &[1, 1, 1]).is_err());
    }

    #[test]
    fn single_vertex_base() {
        let r = gamma_id_pendant(&complete(1).unwrap(), &[3]).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.graph.is_identifying_code(r.witness));
        assert!(gamma_id_pendant(&complete(1).unwrap(), &[1]).is_err());
    }
}
