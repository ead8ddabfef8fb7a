//! Exact solvers for small instances, used as ground truth.
//!
//! [`exact_opt`] is a branch and bound over canonical set partitions of the
//! edges: edge `i` takes a color already in use or exactly one fresh color,
//! which removes color-permutation symmetry. Edges are branched in order of
//! descending endpoint-degree sum (ties by identity). A node is cut when
//!
//! * the colors used plus the remaining edges cannot beat the incumbent, or
//! * the colors used plus half the remaining per-vertex slack cannot; every
//!   new color is first seen by two vertices, each of which can take at most
//!   `min(2 - seen, remaining incident edges)` more colors.
//!
//! Saturated endpoints are handled by the candidate set itself: an edge whose
//! endpoints both see two colors can only reuse a common one. Connected
//! components are solved independently and their optima added.

use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::graph::{components, Graph};

pub const DEFAULT_EDGE_BUDGET: usize = 14;
pub const MAX_EDGE_BUDGET: usize = 20;
pub const MAX_BRUTEFORCE_MATCHING_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {edges} edges, above the edge budget {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("edge budget {0} is above the hard limit of {MAX_EDGE_BUDGET}")]
    BudgetTooLarge(usize),
    #[error("graph has {0} vertices; brute-force matching is limited to {MAX_BRUTEFORCE_MATCHING_VERTICES}")]
    TooLarge(usize),
}

/// Maximum number of colors of any edge 2-coloring of `g`, with a witness.
pub fn exact_opt(g: &Graph, edge_budget: usize) -> Result<(EdgeColoring, usize), OracleError> {
    if edge_budget > MAX_EDGE_BUDGET {
        return Err(OracleError::BudgetTooLarge(edge_budget));
    }
    if g.edge_count() > edge_budget {
        return Err(OracleError::BudgetExceeded {
            edges: g.edge_count(),
            budget: edge_budget,
        });
    }
    let mut raw = vec![0usize; g.edge_count()];
    let mut offset = 0;
    for comp in components(g).components {
        if comp.edge_count == 0 {
            continue;
        }
        let (sub, origin) = g.induced(&comp.vertices);
        let (colors, best) = Search::new(&sub).run();
        for (local, &e) in origin.iter().enumerate() {
            raw[e] = offset + colors[local] as usize;
        }
        offset += best;
    }
    let coloring = EdgeColoring::from_raw(raw);
    debug_assert_eq!(coloring.count(), offset);
    Ok((coloring, offset))
}

const NONE: u8 = u8::MAX;

struct Search {
    /// Edges in branching order, as endpoint pairs.
    order: Vec<(usize, usize)>,
    /// Position in `order` of each edge of the component.
    position: Vec<usize>,
    seen: Vec<[u8; 2]>,
    remaining: Vec<usize>,
    assignment: Vec<u8>,
    best: usize,
    best_assignment: Vec<u8>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let mut ids: Vec<usize> = (0..g.edge_count()).collect();
        let weight = |e: usize| {
            let edge = g.edge(e);
            g.degree(edge.u) + g.degree(edge.v)
        };
        ids.sort_by_key(|&e| std::cmp::Reverse(weight(e)));
        let mut position = vec![0; g.edge_count()];
        for (pos, &e) in ids.iter().enumerate() {
            position[e] = pos;
        }
        Search {
            order: ids.iter().map(|&e| (g.edge(e).u, g.edge(e).v)).collect(),
            position,
            seen: vec![[NONE; 2]; g.vertex_count()],
            remaining: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            assignment: vec![NONE; g.edge_count()],
            best: 0,
            best_assignment: Vec::new(),
        }
    }

    /// Returns colors indexed by the component's edge identities and the optimum.
    fn run(mut self) -> (Vec<u8>, usize) {
        self.branch(0, 0);
        let colors = self.position.iter().map(|&p| self.best_assignment[p]).collect();
        (colors, self.best)
    }

    fn seen_count(&self, v: usize) -> usize {
        self.seen[v].iter().filter(|&&c| c != NONE).count()
    }

    fn sees(&self, v: usize, c: u8) -> bool {
        self.seen[v].contains(&c)
    }

    fn bound(&self, used: usize, next: usize) -> usize {
        let left = self.order.len() - next;
        let slack: usize = (0..self.seen.len())
            .map(|v| (2 - self.seen_count(v)).min(self.remaining[v]))
            .sum();
        used + left.min(slack / 2)
    }

    fn add_seen(&mut self, v: usize, c: u8) -> bool {
        if self.sees(v, c) {
            return false;
        }
        let slot = self.seen[v].iter().position(|&s| s == NONE).expect("vertex has room");
        self.seen[v][slot] = c;
        true
    }

    fn remove_seen(&mut self, v: usize, c: u8) {
        let slot = self.seen[v].iter().position(|&s| s == c).expect("color was seen");
        self.seen[v][slot] = NONE;
    }

    fn branch(&mut self, next: usize, used: usize) {
        if next == self.order.len() {
            if used > self.best || self.best_assignment.is_empty() {
                self.best = used;
                self.best_assignment = self.assignment.clone();
            }
            return;
        }
        if !self.best_assignment.is_empty() && self.bound(used, next) <= self.best {
            return;
        }
        let (a, b) = self.order[next];
        let room_a = self.seen_count(a) < 2;
        let room_b = self.seen_count(b) < 2;
        self.remaining[a] -= 1;
        self.remaining[b] -= 1;

        // Fresh color first, then existing colors in increasing order.
        let fresh = used as u8;
        let candidates = std::iter::once(fresh).chain(0..fresh);
        for c in candidates {
            let ok_a = self.sees(a, c) || room_a;
            let ok_b = self.sees(b, c) || room_b;
            if !(ok_a && ok_b) {
                continue;
            }
            let added_a = self.add_seen(a, c);
            let added_b = self.add_seen(b, c);
            self.assignment[next] = c;
            let used_next = if c == fresh { used + 1 } else { used };
            self.branch(next + 1, used_next);
            if added_a {
                self.remove_seen(a, c);
            }
            if added_b {
                self.remove_seen(b, c);
            }
        }
        self.assignment[next] = NONE;
        self.remaining[a] += 1;
        self.remaining[b] += 1;
    }
}

/// Maximum matching size by enumerating edge subsets with pruning; limited
/// to graphs with at most 12 vertices.
pub fn exact_matching_bruteforce(g: &Graph) -> Result<usize, OracleError> {
    if g.vertex_count() > MAX_BRUTEFORCE_MATCHING_VERTICES {
        return Err(OracleError::TooLarge(g.vertex_count()));
    }
    fn go(g: &Graph, next: usize, covered: u32, size: usize, best: &mut usize) {
        let cap = g.vertex_count() / 2;
        if size > *best {
            *best = size;
        }
        if next == g.edge_count() || *best == cap {
            return;
        }
        // Each further edge covers two fresh vertices.
        let free = g.vertex_count() - covered.count_ones() as usize;
        if size + (g.edge_count() - next).min(free / 2) <= *best {
            return;
        }
        let e = g.edge(next);
        let mask = (1u32 << e.u) | (1u32 << e.v);
        if covered & mask == 0 {
            go(g, next + 1, covered | mask, size + 1, best);
        }
        go(g, next + 1, covered, size, best);
    }
    let mut best = 0;
    go(g, 0, 0, 0, &mut best);
    Ok(best)
}
