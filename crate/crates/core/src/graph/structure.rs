use std::collections::BTreeSet;

use super::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    /// Vertices in increasing order.
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
    /// Number of degree-1 vertices.
    pub leaves: usize,
}

impl ComponentInfo {
    /// An isolated vertex or a single edge.
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() <= 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentView {
    /// Component index of each vertex. Components are numbered by their
    /// smallest vertex.
    pub component_of: Vec<usize>,
    pub components: Vec<ComponentInfo>,
}

impl ComponentView {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn non_trivial(&self) -> impl Iterator<Item = &ComponentInfo> {
        self.components.iter().filter(|c| !c.is_trivial())
    }
}

pub fn components(g: &Graph) -> ComponentView {
    let n = g.vertex_count();
    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if component_of[root] != usize::MAX {
            continue;
        }
        let idx = components.len();
        component_of[root] = idx;
        stack.push(root);
        let mut vertices = Vec::new();
        while let Some(v) = stack.pop() {
            vertices.push(v);
            for w in g.neighbors(v) {
                if component_of[w] == usize::MAX {
                    component_of[w] = idx;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        let degree_sum: usize = vertices.iter().map(|&v| g.degree(v)).sum();
        let leaves = vertices.iter().filter(|&&v| g.is_leaf(v)).count();
        components.push(ComponentInfo {
            vertices,
            edge_count: degree_sum / 2,
            leaves,
        });
    }
    ComponentView {
        component_of,
        components,
    }
}

/// Edges whose removal disconnects their component, found with an iterative
/// lowlink traversal.
pub fn find_bridges(g: &Graph) -> BTreeSet<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = BTreeSet::new();
    let mut time = 0;
    // (vertex, edge used to enter it, next adjacency position)
    let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
            if let Some(&(w, e)) = g.incident(v).get(*pos) {
                *pos += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.insert(e);
                    }
                }
            }
        }
    }
    bridges
}

pub fn is_subcubic(g: &Graph) -> bool {
    g.max_degree() <= 3
}

/// Naive scan over neighbor triples of every vertex; `O(Σ deg³)`.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|c| {
        let nb: Vec<Vertex> = g.neighbors(c).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return false;
                    }
                }
            }
        }
        true
    })
}

/// All triangles as increasing vertex triples, in lexicographic order.
pub fn list_triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        let mut higher: Vec<Vertex> = g.neighbors(a).filter(|&b| b > a).collect();
        higher.sort_unstable();
        for (i, &b) in higher.iter().enumerate() {
            for &c in &higher[i + 1..] {
                if g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}
