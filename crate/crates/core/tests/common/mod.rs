//! Brute-force reference implementations. Everything here works on raw
//! adjacency masks and subset scans, sharing no code with the solver.
#![allow(dead_code)]

use idcode::Graph;

/// Closed neighbourhood masks.
pub fn closed(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let mut m = 1u64 << v;
            for u in 0..g.n() {
                if g.has_edge(u, v) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect()
}

fn open(g: &Graph) -> Vec<u64> {
    closed(g)
        .iter()
        .enumerate()
        .map(|(v, m)| m & !(1 << v))
        .collect()
}

pub fn separates(nb: &[u64], c: u64) -> bool {
    let traces: Vec<u64> = nb.iter().map(|m| m & c).collect();
    (0..traces.len()).all(|i| (0..i).all(|j| traces[i] != traces[j]))
}

pub fn is_code(nb: &[u64], c: u64) -> bool {
    nb.iter().all(|m| m & c != 0) && separates(nb, c)
}

pub fn escapes(nb: &[u64], c: u64) -> bool {
    nb.iter().all(|m| c & !m != 0)
}

/// All subsets of `0..n` with exactly `k` elements, in lexicographic order of
/// their sorted element lists.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut out: Vec<u64> = (0..1u64 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    out.sort_by_key(|&s| elements(s));
    out
}

pub fn elements(s: u64) -> Vec<usize> {
    (0..64).filter(|i| s >> i & 1 == 1).collect()
}

/// Smallest size of a set passing `ok`, with the lexicographically least such
/// set. Scans every subset of `0..n`.
pub fn brute_min(n: usize, ok: impl Fn(u64) -> bool) -> Option<(usize, u64)> {
    (0..=n).find_map(|k| {
        (0..1u64 << n)
            .filter(|s| s.count_ones() as usize == k && ok(*s))
            .min_by_key(|&s| elements(s))
            .map(|s| (k, s))
    })
}

pub fn gamma_id(g: &Graph) -> Option<usize> {
    let nb = closed(g);
    brute_min(g.n(), |c| is_code(&nb, c)).map(|(k, _)| k)
}

pub fn gamma_dom(g: &Graph) -> usize {
    let nb = closed(g);
    brute_min(g.n(), |c| nb.iter().all(|m| m & c != 0))
        .unwrap()
        .0
}

pub fn gamma_tdom(g: &Graph) -> Option<usize> {
    let nb = open(g);
    brute_min(g.n(), |c| nb.iter().all(|m| m & c != 0)).map(|(k, _)| k)
}

pub fn gamma_sep(g: &Graph) -> Option<usize> {
    let nb = closed(g);
    brute_min(g.n(), |c| separates(&nb, c)).map(|(k, _)| k)
}

/// Conditions (a), (b) and (c) evaluated from their definitions: (a) over
/// minimum codes, (b) over minimum codes and their elements, (c) over codes of
/// size one more than the minimum and their elements.
pub fn conditions(g: &Graph) -> Option<(bool, bool, bool)> {
    let nb = closed(g);
    let n = g.n();
    let gamma = gamma_id(g)?;
    let min_codes: Vec<u64> = subsets_of_size(n, gamma)
        .into_iter()
        .filter(|&c| is_code(&nb, c))
        .collect();
    let a = min_codes.iter().any(|&c| escapes(&nb, c));
    let b = min_codes.iter().any(|&c| {
        elements(c)
            .into_iter()
            .any(|z| separates(&nb, c & !(1 << z)))
    });
    let c = subsets_of_size(n, gamma + 1)
        .into_iter()
        .filter(|&s| is_code(&nb, s))
        .any(|s| {
            elements(s).into_iter().any(|z| {
                let t = s & !(1 << z);
                separates(&nb, t) && escapes(&nb, t)
            })
        });
    Some((a, b, c))
}

pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs)
        .map(|code| Graph::from_edge_code(n, code).unwrap())
        .collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}
