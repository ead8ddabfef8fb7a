use super::{check_feasible, ColoringError, EdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::normalize::is_normalized;

/// One edge per color of a reference coloring. Feasibility caps every
/// vertex at degree 2, so components are paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterGraph {
    /// `edges[c]` is the chosen edge of color `c`.
    edges: Vec<EdgeId>,
    degree: Vec<usize>,
}

impl CharacterGraph {
    fn build(g: &Graph, edges: Vec<EdgeId>) -> Self {
        let mut degree = vec![0; g.vertex_count()];
        for &e in &edges {
            let edge = g.edge(e);
            degree[edge.u] += 1;
            degree[edge.v] += 1;
        }
        CharacterGraph { edges, degree }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of degree 0, 1 and 2 (free, end, inner).
    pub fn degree_classes(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for &d in &self.degree {
            out[d.min(2)] += 1;
        }
        out
    }

    fn as_graph(&self, g: &Graph) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|&e| (g.edge(e).u, g.edge(e).v)).collect();
        Graph::from_edges(g.vertex_count(), &pairs)
    }

    /// Number of connected components of `(V(G), H)`, free vertices included.
    pub fn component_count(&self, g: &Graph) -> usize {
        crate::graph::components(&self.as_graph(g)).len()
    }

    pub fn is_acyclic(&self, g: &Graph) -> bool {
        self.component_count(g) + self.edges.len() == g.vertex_count()
    }

    /// Vertex sets of the cycles, each sorted, ordered by smallest vertex.
    fn cycles(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let h = self.as_graph(g);
        crate::graph::components(&h)
            .components
            .into_iter()
            .filter(|c| c.vertex_count() >= 3 && c.edge_count == c.vertex_count())
            .map(|c| c.vertices)
            .collect()
    }
}

/// Picks the smallest-identity edge of every color.
pub fn extract_character_graph(
    g: &Graph,
    chi: &EdgeColoring,
) -> Result<CharacterGraph, ColoringError> {
    check_feasible(g, chi)?;
    let edges = chi.classes().into_iter().map(|class| class[0]).collect();
    Ok(CharacterGraph::build(g, edges))
}

/// Breaks every cycle of `h`: take the smallest cycle vertex `u` with a
/// neighbor `v` off the cycle (smallest such `v`), and swap the cycle edge
/// at `u` that has the color of `uv` for `uv` itself.
pub fn make_cycle_free(
    g: &Graph,
    chi: &EdgeColoring,
    h: &CharacterGraph,
) -> Result<CharacterGraph, ColoringError> {
    check_feasible(g, chi)?;
    if !is_normalized(g) {
        return Err(ColoringError::NotNormalized);
    }
    if h.edges.len() != chi.count()
        || h.edges.iter().enumerate().any(|(c, &e)| e >= g.edge_count() || chi.color(e) != c)
    {
        return Err(ColoringError::BadCharacterGraph(
            "expected exactly one edge of each color".into(),
        ));
    }
    let mut h = h.clone();
    while let Some(cycle) = h.cycles(g).into_iter().next() {
        let exit = cycle.iter().find_map(|&u| {
            let mut outside: Vec<(Vertex, EdgeId)> = g
                .incident(u)
                .iter()
                .copied()
                .filter(|(v, _)| cycle.binary_search(v).is_err())
                .collect();
            outside.sort_unstable();
            outside.first().map(|&(_, e)| (u, e))
        });
        let (u, out_edge) = exit.ok_or(ColoringError::ClosedCycle { vertex: cycle[0] })?;
        let c = chi.color(out_edge);
        let old = h.edges[c];
        debug_assert!(g.edge(old).has(u), "color of uv is on the cycle at u");
        h.edges[c] = out_edge;
        h = CharacterGraph::build(g, h.edges);
    }
    debug_assert!(h.max_degree() <= 2);
    Ok(h)
}
