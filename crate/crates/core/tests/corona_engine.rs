mod common;

use common::{all_graphs, connected_graphs};
use idcode::classify::check_condition_a;
use idcode::solver::min_identifying_code;
use idcode::theorem::{corona_bounds, gamma_id_corona, gamma_id_pendant, CaseTag};
use idcode::{corona, corona_identifiable, Error, Graph};

fn graphs_up_to(n: usize, f: fn(usize) -> Vec<Graph>) -> Vec<Graph> {
    (1..=n).flat_map(f).collect()
}

#[test]
fn identifiability_criterion_matches_direct_check() {
    for h in graphs_up_to(3, all_graphs) {
        for g in graphs_up_to(4, all_graphs) {
            let (p, _) = corona(&h, &g).unwrap();
            assert_eq!(
                corona_identifiable(&h, &g),
                p.is_identifiable(),
                "{h:?} {g:?}"
            );
        }
    }
}

#[test]
fn engine_matches_direct_solve_including_disconnected_bases() {
    let mut component_sums = 0;
    for h in graphs_up_to(3, all_graphs) {
        for g in graphs_up_to(3, all_graphs) {
            let (p, _) = corona(&h, &g).unwrap();
            match gamma_id_corona(&h, &g) {
                Ok(r) => {
                    let brute = common::gamma_id(&p).unwrap();
                    assert_eq!(r.value, brute, "{h:?} {g:?} case {}", r.case);
                    assert!(p.is_identifying_code(r.witness));
                    assert_eq!(r.witness.len(), r.value);
                    component_sums += (r.case == CaseTag::ComponentSum) as usize;
                }
                Err(Error::NotIdentifiable(_)) => assert!(!p.is_identifiable()),
                Err(e) => panic!("{h:?} {g:?}: {e}"),
            }
        }
    }
    assert!(component_sums > 0);
}

#[test]
fn disjoint_base_splits_the_product() {
    let h1 = idcode::family::path(2).unwrap();
    let h2 = idcode::family::path(3).unwrap();
    let g = idcode::family::path(3).unwrap();
    let (whole, _) = corona(&h1.disjoint_union(&h2).unwrap(), &g).unwrap();
    let (a, _) = corona(&h1, &g).unwrap();
    let (b, _) = corona(&h2, &g).unwrap();
    let value = |x: &Graph| min_identifying_code(x).unwrap().optimum;
    assert_eq!(value(&whole), value(&a) + value(&b));
    assert_eq!(whole.edge_count(), a.edge_count() + b.edge_count());
    assert_eq!(whole.components().len(), 2);
}

#[test]
fn bounds_sandwich_and_trivial_base_dichotomy() {
    for h in graphs_up_to(3, connected_graphs) {
        for g in graphs_up_to(4, all_graphs) {
            let Ok(r) = gamma_id_corona(&h, &g) else {
                continue;
            };
            let b = corona_bounds(&h, &g).unwrap();
            assert!(b.lower <= r.value, "{h:?} {g:?}");
            if let Some(upper) = b.upper {
                assert!(r.value <= upper, "{h:?} {g:?}");
            }
            if h.is_trivial() {
                let gamma = min_identifying_code(&g).unwrap().optimum;
                let extra = r.value - gamma;
                assert!(extra <= 1);
                assert_eq!(
                    extra == 0,
                    check_condition_a(&g).unwrap().is_some(),
                    "{g:?}"
                );
            }
        }
    }
}

fn count_vectors(m: usize, max_total: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max_total.saturating_sub(m - 1) {
        for mut rest in count_vectors(m - 1, max_total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn pendant_formula_matches_direct_solve() {
    let mut checked = 0;
    for h in graphs_up_to(3, connected_graphs) {
        for counts in count_vectors(h.n(), 8) {
            match gamma_id_pendant(&h, &counts) {
                Ok(r) => {
                    assert_eq!(
                        common::gamma_id(&r.graph),
                        Some(r.value),
                        "{h:?} {counts:?}"
                    );
                    assert!(r.graph.is_identifying_code(r.witness));
                    assert_eq!(r.witness.len(), r.value);
                    checked += 1;
                }
                Err(Error::ExcludedCase(_)) => {
                    assert!(h.is_complete() && counts.iter().all(|&c| c == 1));
                }
                Err(e) => panic!("{h:?} {counts:?}: {e}"),
            }
        }
    }
    assert!(checked > 50);
}
