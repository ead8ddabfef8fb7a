//! Seeded instance corpora shared by the integration tests.

#![allow(dead_code)]

use me2c::graph::{
    gen_cactus_chain, gen_clawfree_random, gen_complete, gen_cycle, gen_pm_random,
    gen_subcubic_random, Graph, SplitMix64,
};

/// `G(n, p)`: each pair `(a, b)`, `a < b`, in lexicographic order with
/// probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.unit() < p {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// `g` with a pendant leaf attached to every vertex in `at`.
pub fn with_pendants(g: &Graph, at: &[usize]) -> Graph {
    let mut h = g.disjoint_union(&Graph::new(at.len()));
    for (i, &v) in at.iter().enumerate() {
        h.add_edge(v, g.vertex_count() + i);
    }
    h
}

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn push(out: &mut Vec<Named>, name: String, graph: Graph, max_edges: usize) {
    if graph.edge_count() > 0 && graph.edge_count() <= max_edges {
        out.push(Named { name, graph });
    }
}

/// At least `count` graphs with `1 ≤ m ≤ max_edges`, mixing random
/// families with hand-picked shapes.
pub fn small_corpus(count: usize, max_edges: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 3..=8 {
        push(&mut out, format!("cycle{n}"), gen_cycle(n).unwrap(), max_edges);
    }
    for n in 2..=5 {
        push(&mut out, format!("k{n}"), gen_complete(n).unwrap(), max_edges);
    }
    for k in 1..=2 {
        push(&mut out, format!("chain{k}"), gen_cactus_chain(k).unwrap(), max_edges);
    }
    let k4 = gen_complete(4).unwrap();
    push(&mut out, "k4+pendant".into(), with_pendants(&k4, &[0]), max_edges);
    push(&mut out, "k4+pendants".into(), with_pendants(&k4, &[0, 1]), max_edges);
    let mut seed = 0u64;
    while out.len() < count {
        seed += 1;
        let g = match seed % 5 {
            0 | 1 => gnp(4 + (seed as usize % 6), [0.3, 0.45, 0.6][seed as usize % 3], seed),
            2 => gen_subcubic_random(4 + (seed as usize % 7), seed).unwrap(),
            3 => gen_clawfree_random(4 + (seed as usize % 2), seed).unwrap(),
            _ => gen_pm_random(4 + 2 * (seed as usize % 3), 0.3, seed).unwrap(),
        };
        push(&mut out, format!("mix{seed}"), g, max_edges);
    }
    out
}

pub fn subcubic_corpus(count: usize, max_edges: usize) -> Vec<Named> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < count {
        seed += 1;
        let n = 4 + (seed as usize % 7);
        push(&mut out, format!("subcubic{n}-{seed}"), gen_subcubic_random(n, seed).unwrap(), max_edges);
    }
    out
}

pub fn clawfree_corpus(count: usize, max_edges: usize) -> Vec<Named> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < count {
        seed += 1;
        let n = 4 + (seed as usize % 3);
        push(&mut out, format!("clawfree{n}-{seed}"), gen_clawfree_random(n, seed).unwrap(), max_edges);
    }
    out
}

pub fn pm_corpus(count: usize, max_edges: usize) -> Vec<Named> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < count {
        seed += 1;
        let n = 4 + 2 * (seed as usize % 4);
        let p = [0.15, 0.25, 0.4][seed as usize % 3];
        push(&mut out, format!("pm{n}-{seed}"), gen_pm_random(n, p, seed).unwrap(), max_edges);
    }
    out
}
