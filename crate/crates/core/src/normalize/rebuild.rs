use crate::graph::{EdgeId, Graph, Vertex};

/// Identity translation for one rewrite: where every vertex and edge of the
/// rewritten graph came from in the graph before the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepMaps {
    /// For each new vertex, the old vertex it continues, or `None` if fresh.
    pub vertex_origin: Vec<Option<Vertex>>,
    /// For each new edge, the old edge whose color it carries, or `None` if fresh.
    pub edge_origin: Vec<Option<EdgeId>>,
}

impl StepMaps {
    /// Old vertex → new vertex.
    pub fn vertex_image(&self, old_n: usize) -> Vec<Option<Vertex>> {
        let mut image = vec![None; old_n];
        for (new, old) in self.vertex_origin.iter().enumerate() {
            if let Some(old) = *old {
                image[old] = Some(new);
            }
        }
        image
    }

    /// Old edge → new edge.
    pub fn edge_image(&self, old_m: usize) -> Vec<Option<EdgeId>> {
        let mut image = vec![None; old_m];
        for (new, old) in self.edge_origin.iter().enumerate() {
            if let Some(old) = *old {
                image[old] = Some(new);
            }
        }
        image
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Old(Vertex),
    Fresh(usize),
}

/// Description of a rewritten graph in terms of the old one.
pub(crate) struct Plan {
    removed: Vec<bool>,
    fresh: usize,
    edges: Vec<(End, End, Option<EdgeId>)>,
}

impl Plan {
    /// Starts from a copy of `g` with no fresh vertices.
    pub(crate) fn identity(g: &Graph) -> Self {
        Plan {
            removed: vec![false; g.vertex_count()],
            fresh: 0,
            edges: g
                .edges()
                .iter()
                .enumerate()
                .map(|(id, e)| (End::Old(e.u), End::Old(e.v), Some(id)))
                .collect(),
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: Vertex) {
        self.removed[v] = true;
    }

    pub(crate) fn fresh_vertex(&mut self) -> End {
        self.fresh += 1;
        End::Fresh(self.fresh - 1)
    }

    /// Drops every planned edge that originated from one of `ids`.
    pub(crate) fn drop_edges(&mut self, ids: &[EdgeId]) {
        self.edges
            .retain(|&(_, _, origin)| origin.is_none_or(|o| !ids.contains(&o)));
    }

    /// Replaces the endpoint `from` of the planned edge originating from `id`.
    pub(crate) fn redirect(&mut self, id: EdgeId, from: Vertex, to: End) {
        let slot = self
            .edges
            .iter_mut()
            .find(|(_, _, o)| *o == Some(id))
            .expect("edge is planned");
        if slot.0 == End::Old(from) {
            slot.0 = to;
        } else {
            assert_eq!(slot.1, End::Old(from), "edge {id} does not touch {from}");
            slot.1 = to;
        }
    }

    pub(crate) fn push_edge(&mut self, a: End, b: End, origin: Option<EdgeId>) {
        self.edges.push((a, b, origin));
    }

    pub(crate) fn build(self, g: &Graph) -> (Graph, StepMaps) {
        let mut new_id = vec![usize::MAX; g.vertex_count()];
        let mut vertex_origin = Vec::new();
        for v in 0..g.vertex_count() {
            if !self.removed[v] {
                new_id[v] = vertex_origin.len();
                vertex_origin.push(Some(v));
            }
        }
        let base = vertex_origin.len();
        vertex_origin.extend(std::iter::repeat_n(None, self.fresh));
        let resolve = |end: End| match end {
            End::Old(v) => {
                assert_ne!(new_id[v], usize::MAX, "edge touches removed vertex {v}");
                new_id[v]
            }
            End::Fresh(i) => base + i,
        };
        let mut out = Graph::new(vertex_origin.len());
        let mut edge_origin = Vec::with_capacity(self.edges.len());
        for (a, b, origin) in self.edges {
            let (a, b) = (resolve(a), resolve(b));
            out.add_edge(a, b)
                .unwrap_or_else(|| panic!("rewrite produced invalid edge {a} {b}"));
            edge_origin.push(origin);
        }
        (
            out,
            StepMaps {
                vertex_origin,
                edge_origin,
            },
        )
    }
}
