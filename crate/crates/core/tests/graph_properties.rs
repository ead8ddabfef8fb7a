mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::gnp;
use me2c::graph::{
    components, find_bridges, gen_cactus_chain, gen_clawfree_random, gen_pm_random,
    gen_subcubic_random, is_claw_free, is_subcubic, parse_graph, serialize_graph, Graph,
};
use me2c::matching::{is_perfect, maximum_matching};
use me2c::normalize::{find_simple_cactus, validate_cactus};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=3 * n).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                g.add_edge(u, v);
            }
            g
        })
    })
}

fn bridges_by_deletion(g: &Graph) -> BTreeSet<usize> {
    let base = components(g).len();
    (0..g.edge_count())
        .filter(|&skip| {
            let pairs: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(e, _)| e != skip)
                .map(|(_, e)| (e.u, e.v))
                .collect();
            components(&Graph::from_edges(g.vertex_count(), &pairs)).len() > base
        })
        .collect()
}

proptest! {
    #[test]
    fn round_trip_keeps_identities(g in arb_graph(14)) {
        let back = parse_graph(&serialize_graph(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn adjacency_matches_edge_list(g in arb_graph(14)) {
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for v in 0..g.vertex_count() {
            for &(w, e) in g.incident(v) {
                prop_assert!(g.edge(e).has(v) && g.edge(e).other(v) == w);
                prop_assert_ne!(v, w);
            }
        }
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(14)) {
        let view = components(&g);
        let mut seen = vec![false; g.vertex_count()];
        for (i, c) in view.components.iter().enumerate() {
            for &v in &c.vertices {
                prop_assert!(!seen[v]);
                seen[v] = true;
                prop_assert_eq!(view.component_of[v], i);
            }
            let leaves = c.vertices.iter().filter(|&&v| g.degree(v) == 1).count();
            prop_assert_eq!(c.leaves, leaves);
        }
        prop_assert!(seen.into_iter().all(|s| s));
        let edges: usize = view.components.iter().map(|c| c.edge_count).sum();
        prop_assert_eq!(edges, g.edge_count());
    }

    #[test]
    fn bridges_match_deletion_oracle(g in arb_graph(12).prop_filter("m <= 30", |g| g.edge_count() <= 30)) {
        prop_assert_eq!(find_bridges(&g), bridges_by_deletion(&g));
    }
}

#[test]
fn bridges_on_seeded_graphs() {
    for seed in 0..200 {
        let n = 4 + seed as usize % 12;
        let g = gnp(n, [0.15, 0.25, 0.4][seed as usize % 3], seed);
        if g.edge_count() <= 30 {
            assert_eq!(find_bridges(&g), bridges_by_deletion(&g), "seed {seed}");
        }
    }
}

#[test]
fn generators_round_trip() {
    for seed in 0..30 {
        for g in [
            gen_subcubic_random(12, seed).unwrap(),
            gen_clawfree_random(5, seed).unwrap(),
            gen_pm_random(10, 0.3, seed).unwrap(),
        ] {
            let text = serialize_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
            assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        }
    }
}

#[test]
fn clawfree_generator_is_claw_free() {
    for seed in 0..100 {
        let g = gen_clawfree_random(3 + seed as usize % 6, seed).unwrap();
        assert!(is_claw_free(&g), "seed {seed}");
    }
}

#[test]
fn subcubic_generator_is_subcubic() {
    for seed in 0..100 {
        assert!(is_subcubic(&gen_subcubic_random(4 + seed as usize % 30, seed).unwrap()));
    }
}

#[test]
fn pm_generator_plants_a_perfect_matching() {
    for seed in 0..100 {
        let n = 2 + 2 * (seed as usize % 10);
        let g = gen_pm_random(n, 0.3, seed).unwrap();
        for i in 0..n / 2 {
            assert_eq!(g.edge_between(2 * i, 2 * i + 1), Some(i));
        }
        assert!(is_perfect(&maximum_matching(&g), &g));
    }
}

#[test]
fn cactus_chain_is_a_simple_cactus() {
    for k in 1..=8 {
        let g = gen_cactus_chain(k).unwrap();
        let c = find_simple_cactus(&g).expect("chain is a cactus");
        validate_cactus(&g, &c).unwrap();
        assert_eq!(c.triangles.len(), k);
        for v in c.vertices() {
            let outside = g
                .incident(v)
                .iter()
                .filter(|(w, _)| !c.vertices().contains(w))
                .count();
            assert!(matches!(g.degree(v), 3 | 4) && outside <= 1, "k={k} v={v}");
        }
    }
}
