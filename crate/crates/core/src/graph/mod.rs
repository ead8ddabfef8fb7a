//! Simple undirected graphs with dense vertex and edge identities.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, edges are
//! `0..m` in insertion order, and every adjacency list is ordered by edge
//! identity, so all scans in the crate visit candidates smallest identity
//! first.

mod generators;
mod io;
mod structure;

use std::collections::HashMap;

use thiserror::Error;

pub use generators::{
    gen_cactus_chain, gen_clawfree_random, gen_complete, gen_cycle, gen_petersen, gen_pm_random,
    gen_subcubic_random, SplitMix64,
};
pub use io::{parse_graph, serialize_graph};
pub use structure::{
    components, find_bridges, is_claw_free, is_subcubic, list_triangles, ComponentInfo,
    ComponentView,
};

/// Vertex identity.
pub type Vertex = usize;
/// Edge identity.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// An undirected edge. The stored orientation is the one it was created with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        Edge { u, v }
    }

    /// The endpoint opposite `x`.
    ///
    /// # Panics
    ///
    /// Panics if `x` is not an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} is not an endpoint of {self:?}");
            self.u
        }
    }

    pub fn has(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    fn key(&self) -> (Vertex, Vertex) {
        pair_key(self.u, self.v)
    }
}

fn pair_key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list, panicking on loops, duplicates or
    /// out-of-range endpoints. Intended for fixtures and generators.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)
                .unwrap_or_else(|| panic!("invalid edge {u} {v} for n = {n}"));
        }
        g
    }

    /// Adds the edge `uv` and returns its identity, or `None` if the edge
    /// would be a loop, a duplicate or out of range.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u == v || u >= self.n || v >= self.n || self.index.contains_key(&pair_key(u, v)) {
            return None;
        }
        let id = self.edges.len();
        self.edges.push(Edge::new(u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.index.insert(pair_key(u, v), id);
        Some(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `(neighbor, edge)` pairs of `v` in edge-identity order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&pair_key(u, v)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    /// Leaves adjacent to `v`, in edge-identity order.
    pub fn leaf_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.neighbors(v).filter(|&w| self.is_leaf(w)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.n).filter(|&v| self.is_leaf(v)).count()
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order. Returns the subgraph and the original identity of each of
    /// its edges.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = Graph::new(vertices.len());
        let mut origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                sub.add_edge(local[e.u], local[e.v]);
                origin.push(id);
            }
        }
        (sub, origin)
    }

    /// Graph obtained by relabelling vertex `v` as `perm[v]`; edge order is kept.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges.iter().map(|e| (perm[e.u], perm[e.v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Disjoint union with `other`; `other`'s vertices and edges are shifted
    /// after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.n += other.n;
        g.adj.extend((0..other.n).map(|_| Vec::new()));
        for e in &other.edges {
            g.add_edge(e.u + self.n, e.v + self.n);
        }
        g
    }

    pub(crate) fn edge_key(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e].key()
    }
}
