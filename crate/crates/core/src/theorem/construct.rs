//! Explicit identifying codes of corona products.
//!
//! A set `C` of `H ⊙ G` is an identifying code whenever, for every base
//! vertex `v`, the part of `C` in `G_v` is nonempty and separates `G_v`;
//! either some `H`-neighbour of `v` is in `C` or that part lies in no closed
//! neighbourhood of `G_v`; and either `v ∈ C` or the part covers `G_v`. Each
//! builder below checks its own preconditions, which imply these three.

use crate::classify::escapes_every_neighborhood;
use crate::corona::CoronaLayout;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn pre(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn require_subset(g: &Graph, set: VertexSet, what: &str) -> Result<()> {
    pre(set.is_subset(g.vertices()), || {
        format!("{what} {set} is not a subset of 0..{}", g.n())
    })
}

/// Copy of `s` in every block.
pub fn construct_cons1(h: &Graph, g: &Graph, s: VertexSet) -> Result<VertexSet> {
    require_subset(g, s, "code")?;
    pre(g.is_identifying_code(s), || {
        format!("{s} is not an identifying code of G")
    })?;
    pre(escapes_every_neighborhood(g, s), || {
        format!("{s} is contained in a closed neighbourhood of G")
    })?;
    let layout = CoronaLayout::new(h.n(), g.n())?;
    Ok((0..h.n()).fold(VertexSet::EMPTY, |acc, v| acc.union(layout.lift(v, s))))
}

/// Copy of the separating set `t` in every block, plus all of `V(H)`.
pub fn construct_cons2(h: &Graph, g: &Graph, t: VertexSet) -> Result<VertexSet> {
    pre(!h.is_trivial() && h.is_connected(), || {
        "H must be nontrivial and connected".into()
    })?;
    pre(!g.is_trivial() && g.is_identifiable(), || {
        "G must be nontrivial and identifiable".into()
    })?;
    require_subset(g, t, "separating set")?;
    pre(!t.is_empty(), || "separating set must be nonempty".into())?;
    pre(g.separates(t, g.vertices()), || {
        format!("{t} does not separate V(G)")
    })?;
    let layout = CoronaLayout::new(h.n(), g.n())?;
    let blocks = (0..h.n()).fold(VertexSet::EMPTY, |acc, v| acc.union(layout.lift(v, t)));
    Ok(blocks.union(layout.base_vertices()))
}

/// Dominating set `d` of `H`; blocks of `d` get the separating set `t_sep`,
/// the other blocks get the code `w_code`.
pub fn construct_cons3(
    h: &Graph,
    g: &Graph,
    d: VertexSet,
    t_sep: VertexSet,
    w_code: VertexSet,
) -> Result<VertexSet> {
    require_subset(h, d, "dominating set")?;
    pre(h.dominates(d), || format!("{d} does not dominate H"))?;
    require_subset(g, t_sep, "separating set")?;
    require_subset(g, w_code, "code")?;
    pre(g.is_identifying_code(w_code), || {
        format!("{w_code} is not an identifying code of G")
    })?;
    pre(g.separates(t_sep, g.vertices()), || {
        format!("{t_sep} does not separate V(G)")
    })?;
    pre(escapes_every_neighborhood(g, t_sep), || {
        format!("{t_sep} is contained in a closed neighbourhood of G")
    })?;
    let layout = CoronaLayout::new(h.n(), g.n())?;
    Ok((0..h.n()).fold(d, |acc, v| {
        acc.union(layout.lift(v, if d.contains(v) { t_sep } else { w_code }))
    }))
}

/// Total dominating set `t` of `H` plus the code `w_code` in every block.
pub fn construct_cons4(h: &Graph, g: &Graph, t: VertexSet, w_code: VertexSet) -> Result<VertexSet> {
    require_subset(h, t, "total dominating set")?;
    pre(h.totally_dominates(t), || {
        format!("{t} does not totally dominate H")
    })?;
    require_subset(g, w_code, "code")?;
    pre(g.is_identifying_code(w_code), || {
        format!("{w_code} is not an identifying code of G")
    })?;
    let layout = CoronaLayout::new(h.n(), g.n())?;
    Ok((0..h.n()).fold(t, |acc, v| acc.union(layout.lift(v, w_code))))
}

/// Code of `K1 ⊙ G` of size `|w| + 1` from a minimum code `w` contained in
/// some `N[x]`: add a vertex outside `N[x]` and copy the result.
pub fn trivial_base_code(g: &Graph, w: VertexSet) -> Result<VertexSet> {
    let x = (0..g.n())
        .find(|&x| w.is_subset(g.closed(x)))
        .ok_or_else(|| Error::Precondition(format!("{w} lies in no closed neighbourhood")))?;
    let y = g
        .vertices()
        .difference(g.closed(x))
        .first()
        .ok_or_else(|| {
            Error::Precondition(format!("vertex {x} of G is adjacent to every other vertex"))
        })?;
    construct_cons1(&Graph::from_edges(1, &[])?, g, w.with(y))
}

/// Code of `K_n ⊙ K1` of size `n + 1`: two base vertices and all pendants but
/// the first.
pub fn complete_pendant_code(n: usize) -> Result<VertexSet> {
    pre(n >= 2, || {
        "complete base needs at least two vertices".into()
    })?;
    let layout = CoronaLayout::new(n, 1)?;
    Ok((1..n).fold(VertexSet::from([0, 1]), |acc, i| {
        acc.with(layout.copy_index(i, 0))
    }))
}

/// Code of `H ⊙ K1` of size `|V(H)|` for connected, non-complete `H`.
///
/// Group base vertices by closed neighbourhood in `H`, keep the smallest
/// vertex of each group, and take the pendant of every other vertex.
pub fn pendant_code(h: &Graph) -> Result<VertexSet> {
    pre(h.is_connected() && !h.is_complete(), || {
        "H must be connected and not complete".into()
    })?;
    let layout = CoronaLayout::new(h.n(), 1)?;
    let reps = representatives(h);
    Ok((0..h.n()).fold(reps, |acc, v| {
        if reps.contains(v) {
            acc
        } else {
            acc.with(layout.copy_index(v, 0))
        }
    }))
}

/// Smallest vertex of each class of vertices with equal closed neighbourhoods.
///
/// Grouping by open neighbourhoods instead fails: in `P3 ⊙ K1` it keeps the
/// two ends' representative 0 and the middle vertex 1, which then share the
/// trace `{0, 1}`.
pub(crate) fn representatives(h: &Graph) -> VertexSet {
    (0..h.n())
        .filter(|&v| (0..v).all(|u| h.closed(u) != h.closed(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona;
    use crate::family::{complete, cycle, g3, path};
    use crate::solver::min_identifying_code;

    fn check(h: &Graph, g: &Graph, code: VertexSet) {
        let (p, _) = corona(h, g).unwrap();
        assert!(p.is_identifying_code(code), "{code} is not a code of {p:?}");
    }

    #[test]
    fn cons1_sizes() {
        let c6 = cycle(6).unwrap();
        let s = VertexSet::from([0, 2, 4]);
        let k1 = complete(1).unwrap();
        let code = construct_cons1(&k1, &c6, s).unwrap();
        assert_eq!(code.len(), 3);
        check(&k1, &c6, code);
        let k2 = complete(2).unwrap();
        let code = construct_cons1(&k2, &c6, s).unwrap();
        assert_eq!(code.len(), 6);
        check(&k2, &c6, code);
        // {2,4,6} is a code of G3 but lies in N[0]
        assert!(construct_cons1(&k2, &g3(), VertexSet::from([2, 4, 6])).is_err());
    }

    #[test]
    fn cons2_examples() {
        let k2 = complete(2).unwrap();
        let p3 = path(3).unwrap();
        let code = construct_cons2(&k2, &p3, VertexSet::from([0, 2])).unwrap();
        assert_eq!(code.len(), 6);
        check(&k2, &p3, code);
        assert!(construct_cons2(&complete(1).unwrap(), &p3, VertexSet::from([0, 2])).is_err());
        assert!(construct_cons2(&k2, &p3, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn cons3_example() {
        let h = path(3).unwrap();
        let g = g3();
        let w = min_identifying_code(&g).unwrap().witness;
        let code =
            construct_cons3(&h, &g, VertexSet::from([1]), VertexSet::from([1, 3, 5]), w).unwrap();
        assert_eq!(code.len(), 10);
        check(&h, &g, code);
        assert!(
            construct_cons3(&h, &g, VertexSet::from([0]), VertexSet::from([1, 3, 5]), w).is_err()
        );
    }

    #[test]
    fn cons4_example() {
        let k2 = complete(2).unwrap();
        let p3 = path(3).unwrap();
        let code =
            construct_cons4(&k2, &p3, VertexSet::from([0, 1]), VertexSet::from([0, 2])).unwrap();
        assert_eq!(code.len(), 6);
        check(&k2, &p3, code);
        // the centre of a star does not totally dominate itself
        let star = crate::family::star(3).unwrap();
        assert!(
            construct_cons4(&star, &p3, VertexSet::from([0]), VertexSet::from([0, 2])).is_err()
        );
    }

    #[test]
    fn k1_constructions() {
        let p4 = path(4).unwrap();
        let w = min_identifying_code(&p4).unwrap().witness;
        let code = trivial_base_code(&p4, w).unwrap();
        assert_eq!(code.len(), 4);
        check(&complete(1).unwrap(), &p4, code);

        for n in 2..6 {
            let code = complete_pendant_code(n).unwrap();
            assert_eq!(code.len(), n + 1);
            check(&complete(n).unwrap(), &complete(1).unwrap(), code);
        }
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        for h in [
            path(3).unwrap(),
            path(4).unwrap(),
            cycle(4).unwrap(),
            g3(),
            diamond,
        ] {
            let code = pendant_code(&h).unwrap();
            assert_eq!(code.len(), h.n());
            check(&h, &complete(1).unwrap(), code);
        }
    }
}
