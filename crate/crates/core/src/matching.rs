//! Maximum cardinality matching in general graphs.
//!
//! Edmonds' blossom algorithm in the `O(n³)` BFS formulation: a greedy pass
//! over edges in identity order seeds the matching, then every exposed
//! vertex (in identity order) searches for an augmenting path, contracting
//! odd cycles to their base as they are found.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<EdgeId>,
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            edges: BTreeSet::new(),
            mate: vec![None; n],
        }
    }

    /// Builds a matching from edge identities, or `None` if two edges share
    /// an endpoint or an identity is out of range.
    pub fn from_edges(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Option<Self> {
        let mut m = Matching::empty(g.vertex_count());
        for e in edges {
            if e >= g.edge_count() || !m.insert(g, e) {
                return None;
            }
        }
        Some(m)
    }

    fn insert(&mut self, g: &Graph, e: EdgeId) -> bool {
        let edge = g.edge(e);
        if self.mate[edge.u].is_some() || self.mate[edge.v].is_some() {
            return false;
        }
        self.mate[edge.u] = Some(edge.v);
        self.mate[edge.v] = Some(edge.u);
        self.edges.insert(e);
        true
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_matched(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    /// Checks that the mate table and edge set agree and describe a matching of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.mate.len() != g.vertex_count() {
            return false;
        }
        let mut seen = vec![None; g.vertex_count()];
        for &e in &self.edges {
            if e >= g.edge_count() {
                return false;
            }
            let edge = g.edge(e);
            if seen[edge.u].is_some() || seen[edge.v].is_some() {
                return false;
            }
            seen[edge.u] = Some(edge.v);
            seen[edge.v] = Some(edge.u);
        }
        seen == self.mate
    }
}

pub fn is_perfect(m: &Matching, g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| m.is_matched(v))
}

pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    for e in g.edges() {
        if mate[e.u].is_none() && mate[e.v].is_none() {
            mate[e.u] = Some(e.v);
            mate[e.v] = Some(e.u);
        }
    }

    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root].is_none() {
            if let Some(end) = search.find_path(g, &mate, root) {
                search.augment(&mut mate, end);
            }
        }
    }

    let mut m = Matching::empty(n);
    for v in 0..n {
        if let Some(w) = mate[v] {
            if v < w {
                let e = g.edge_between(v, w).expect("mate pair is an edge");
                m.insert(g, e);
            }
        }
    }
    m
}

struct BlossomSearch {
    parent: Vec<Option<Vertex>>,
    base: Vec<Vertex>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[Option<Vertex>], mut a: Vertex, mut b: Vertex) -> Vertex {
        let mut on_path = vec![false; mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match mate[a] {
                Some(m) => a = self.parent[m].expect("outer vertex has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[mate[b].expect("inner walk stays matched")]
                .expect("outer vertex has a parent");
        }
    }

    fn mark_path(&mut self, mate: &[Option<Vertex>], mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            let m = mate[v].expect("blossom path vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("outer vertex has a parent");
        }
    }

    fn contract(&mut self, mate: &[Option<Vertex>], v: Vertex, w: Vertex) {
        let b = self.lca(mate, v, w);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(mate, v, b, w);
        self.mark_path(mate, w, b, v);
        for x in 0..mate.len() {
            if self.in_blossom[self.base[x]] {
                self.base[x] = b;
                if !self.used[x] {
                    self.used[x] = true;
                    self.queue.push_back(x);
                }
            }
        }
    }

    /// BFS over alternating paths from `root`; returns the exposed endpoint
    /// of an augmenting path if one exists.
    fn find_path(&mut self, g: &Graph, mate: &[Option<Vertex>], root: Vertex) -> Option<Vertex> {
        let n = mate.len();
        self.parent.iter_mut().for_each(|p| *p = None);
        self.used.iter_mut().for_each(|u| *u = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        debug_assert_eq!(self.base.len(), n);
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &(w, _) in g.incident(v) {
                if self.base[v] == self.base[w] || mate[v] == Some(w) {
                    continue;
                }
                let w_outer = w == root || mate[w].is_some_and(|m| self.parent[m].is_some());
                if w_outer {
                    self.contract(mate, v, w);
                } else if self.parent[w].is_none() {
                    self.parent[w] = Some(v);
                    match mate[w] {
                        None => return Some(w),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&self, mate: &mut [Option<Vertex>], mut v: Vertex) {
        loop {
            let pv = self.parent[v].expect("augmenting path is rooted");
            let next = mate[pv];
            mate[v] = Some(pv);
            mate[pv] = Some(v);
            match next {
                Some(x) => v = x,
                None => break,
            }
        }
    }
}
