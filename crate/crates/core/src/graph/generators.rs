//! Deterministic instance families.
//!
//! Random families draw from SplitMix64 (the reference 64-bit generator by
//! Steele, Lea and Flood). Two derived draws are used everywhere:
//!
//! * `below(k)` is `next_u64() % k`;
//! * `unit()` is `(next_u64() >> 11) * 2^-53`, uniform in `[0, 1)`.
//!
//! Candidate pairs `(a, b)` with `a < b` are always visited in
//! lexicographic order, so a port that reproduces the generator and these
//! two mappings reproduces every instance exactly.

use rand_core::{RngCore, SeedableRng};

use super::{Graph, GraphError, Vertex};

/// Seeded SplitMix64 stream with the two documented derived draws.
pub struct SplitMix64(rand_xoshiro::SplitMix64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(rand_xoshiro::SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next_u64() % k
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges))
}

pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// Outer 5-cycle `0..5`, spokes `i – i+5`, inner pentagram on `5..10`.
pub fn gen_petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    for i in 0..5 {
        g.add_edge(i, i + 5);
    }
    for i in 0..5 {
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// `4n` attempts, each drawing `u = below(n)` then `v = below(n)`; the
/// attempt is rejected on a loop, an existing edge or an endpoint of degree 3.
pub fn gen_subcubic_random(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("subcubic graph needs n >= 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n);
    for _ in 0..4 * n {
        let u = rng.below(n as u64) as Vertex;
        let v = rng.below(n as u64) as Vertex;
        if u != v && g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Line graph of a random graph on `n` base vertices where each pair is an
/// edge with probability 1/2. Vertices of the result are the base edges in
/// order; two are adjacent iff the base edges share an endpoint.
pub fn gen_clawfree_random(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("claw-free graph needs n >= 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut base = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.unit() < 0.5 {
                base.push((a, b));
            }
        }
    }
    let mut g = Graph::new(base.len());
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            let (a, b) = base[i];
            let (c, d) = base[j];
            if a == c || a == d || b == c || b == d {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Planted perfect matching `{(2i, 2i+1)}` (edges `0..n/2`), then every
/// other pair independently with probability `p`.
pub fn gen_pm_random(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(invalid(format!("planted matching needs even n >= 2, got {n}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("probability out of range: {p}")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n);
    for i in 0..n / 2 {
        g.add_edge(2 * i, 2 * i + 1);
    }
    for a in 0..n {
        for b in a + 1..n {
            if b == a + 1 && a % 2 == 0 {
                continue;
            }
            if rng.unit() < p {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Chain of `k` triangles `{s_i, s_{i+1}, t_i}` sharing the spine vertices
/// `s_1..s_{k-1}`; each unshared vertex carries one pendant needle.
///
/// Spine vertices are `0..=k`, apexes `k+1..2k+1`, needle leaves follow in
/// the order of the vertex they hang from.
pub fn gen_cactus_chain(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(invalid("cactus chain needs k >= 1"));
    }
    let spine = |i: usize| i;
    let apex = |i: usize| k + 1 + i;
    let mut bearers: Vec<Vertex> = vec![spine(0), spine(k)];
    bearers.extend((0..k).map(apex));
    bearers.sort_unstable();
    let n = 2 * k + 1 + bearers.len();
    let mut g = Graph::new(n);
    for i in 0..k {
        g.add_edge(spine(i), spine(i + 1));
        g.add_edge(spine(i + 1), apex(i));
        g.add_edge(apex(i), spine(i));
    }
    for (j, &b) in bearers.iter().enumerate() {
        g.add_edge(b, 2 * k + 1 + j);
    }
    Ok(g)
}
