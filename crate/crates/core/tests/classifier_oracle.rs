mod common;

use common::{all_graphs, conditions};
use idcode::classify::{classify, escapes_every_neighborhood};

#[test]
fn conditions_match_definitions_up_to_five_vertices() {
    let mut seen = [0usize; 3];
    for n in 1..=5 {
        for g in all_graphs(n).into_iter().filter(|g| g.is_identifiable()) {
            let (a, b, c) = conditions(&g).unwrap();
            let cl = classify(&g).unwrap();
            assert!(!cl.caps_hit);
            assert_eq!((cl.a_exists, cl.b_exists, cl.c_exists), (a, b, c), "{g:?}");
            seen[0] += a as usize;
            seen[1] += b as usize;
            seen[2] += c as usize;
        }
    }
    assert!(seen.iter().all(|&k| k > 0), "{seen:?}");
}

#[test]
fn witnesses_satisfy_their_conditions() {
    for n in 1..=5 {
        for g in all_graphs(n).into_iter().filter(|g| g.is_identifiable()) {
            let cl = classify(&g).unwrap();
            if let Some(s) = cl.a_witness {
                assert_eq!(s.len(), cl.gamma_id);
                assert!(g.is_identifying_code(s) && escapes_every_neighborhood(&g, s));
            }
            if let Some(w) = cl.b_witness {
                assert_eq!(w.code.len(), cl.gamma_id);
                assert!(g.is_identifying_code(w.code) && w.code.contains(w.z));
                assert!(g.separates(w.code.without(w.z), g.vertices()));
            }
            if let Some(w) = cl.c_witness {
                let t = w.code.without(w.z);
                assert_eq!(w.code.len(), cl.gamma_id + 1);
                assert!(g.is_identifying_code(w.code) && w.code.contains(w.z));
                assert!(g.separates(t, g.vertices()) && escapes_every_neighborhood(&g, t));
            }
        }
    }
}

#[test]
fn shortcut_conditions_imply_a() {
    for n in 1..=6 {
        for g in all_graphs(n).into_iter().filter(|g| g.is_identifiable()) {
            let cl = classify(&g).unwrap();
            let far = g.diameter().is_some_and(|d| d >= 5);
            let sparse = g.max_degree() + 1 < cl.gamma_id;
            if !g.is_connected() || far || sparse {
                assert!(cl.a_exists, "{g:?}");
            }
        }
    }
}
