mod common;

use proptest::prelude::*;

use common::gnp;
use me2c::graph::{gen_complete, gen_cycle, gen_petersen, Graph};
use me2c::matching::{is_perfect, maximum_matching, Matching};
use me2c::oracle::exact_matching_bruteforce;

/// Searches alternating paths from every exposed vertex; true if one ends
/// at another exposed vertex.
fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    fn extend(g: &Graph, m: &Matching, v: usize, on_path: &mut Vec<bool>) -> bool {
        for (w, e) in g.incident(v).iter().copied() {
            if on_path[w] || m.contains(e) {
                continue;
            }
            match m.mate(w) {
                None => return true,
                Some(x) if !on_path[x] => {
                    on_path[w] = true;
                    on_path[x] = true;
                    if extend(g, m, x, on_path) {
                        return true;
                    }
                    on_path[w] = false;
                    on_path[x] = false;
                }
                Some(_) => {}
            }
        }
        false
    }
    (0..g.vertex_count()).filter(|&v| !m.is_matched(v)).any(|v| {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[v] = true;
        extend(g, m, v, &mut on_path)
    })
}

#[test]
fn no_augmenting_path_remains() {
    for seed in 0..150 {
        let n = 4 + seed as usize % 9;
        let g = gnp(n, [0.2, 0.3, 0.45][seed as usize % 3], 900 + seed);
        let m = maximum_matching(&g);
        assert!(m.is_valid_for(&g));
        assert!(!has_augmenting_path(&g, &m), "seed {seed}");
    }
}

#[test]
fn size_matches_exhaustive_search() {
    for seed in 0..120 {
        let g = gnp(2 + seed as usize % 9, 0.35, 4_000 + seed);
        assert_eq!(maximum_matching(&g).len(), exact_matching_bruteforce(&g).unwrap());
    }
}

#[test]
fn odd_cycles_and_named_graphs() {
    for n in [3, 5, 7, 9] {
        let c = gen_cycle(n).unwrap();
        let m = maximum_matching(&c);
        assert_eq!(m.len(), n / 2);
        assert!(!is_perfect(&m, &c));
    }
    let k4 = gen_complete(4).unwrap();
    assert!(is_perfect(&maximum_matching(&k4), &k4));
    let p = gen_petersen();
    assert_eq!(maximum_matching(&p).len(), 5);
    // Two triangles joined by a path: the blossom has to be contracted.
    let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)]);
    assert_eq!(maximum_matching(&g).len(), 4);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                g.add_edge(u, v);
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn matching_is_valid_and_stable(g in arb_graph()) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        for v in 0..g.vertex_count() {
            if let Some(w) = m.mate(v) {
                prop_assert_eq!(m.mate(w), Some(v));
                prop_assert!(m.contains(g.edge_between(v, w).unwrap()));
            }
        }
        prop_assert_eq!(maximum_matching(&g), m.clone());
        prop_assert_eq!(m.len(), exact_matching_bruteforce(&g).unwrap());
    }
}
