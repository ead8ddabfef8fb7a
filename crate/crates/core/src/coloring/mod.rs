//! Edge 2-colorings: feasibility, the matching-based algorithm, lifting
//! through rewrite logs, character graphs and certified solving.

mod certify;
mod character;
mod lift;

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{components, EdgeId, Graph, Vertex};
use crate::matching::maximum_matching;
use crate::normalize::NormalizeError;

pub use certify::{
    solve, solve_detailed, upper_bound, BoundKind, BoundReport, Certificate, ComponentBound,
    PmBound, Solution,
};
pub use character::{extract_character_graph, make_cycle_free, CharacterGraph};
pub use lift::lift_coloring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {colored} edges but the graph has {edges}")]
    NotTotal { edges: usize, colored: usize },
    #[error("vertex {vertex} sees {} colors: {colors:?}", colors.len())]
    Infeasible { vertex: Vertex, colors: Vec<usize> },
    #[error("leaves share the neighbor {hub}")]
    SharedLeafNeighbor { hub: Vertex },
    #[error("graph is not normalized")]
    NotNormalized,
    #[error("character graph cycle through {vertex} has no edge leaving it")]
    ClosedCycle { vertex: Vertex },
    #[error("character graph does not match the coloring: {0}")]
    BadCharacterGraph(String),
    #[error("rewrite log does not match: {0}")]
    LogMismatch(String),
    #[error("certification failed: {achieved} colors achieved but the bound is {bound}")]
    CertificationFailure { achieved: usize, bound: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
}

/// Colors of all edges, canonical: colors are `0..k` numbered in order of
/// first use along edge identities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    count: usize,
}

impl EdgeColoring {
    /// Canonicalizes arbitrary color labels.
    pub fn from_raw(raw: Vec<usize>) -> Self {
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let colors: Vec<usize> = raw
            .into_iter()
            .map(|c| {
                let next = rename.len();
                *rename.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring {
            count: rename.len(),
            colors,
        }
    }

    /// Every edge of an `m`-edge graph in one color.
    pub fn monochromatic(m: usize) -> Self {
        EdgeColoring::from_raw(vec![0; m])
    }

    /// Number of distinct colors.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Edge identities of each color class.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.count];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    /// Distinct colors seen by `v`, increasing.
    pub fn seen_by(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        seen(g, &self.colors, v)
    }
}

fn seen(g: &Graph, colors: &[usize], v: Vertex) -> Vec<usize> {
    let mut out: Vec<usize> = g.incident(v).iter().map(|&(_, e)| colors[e]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn check_feasible(g: &Graph, chi: &EdgeColoring) -> Result<(), ColoringError> {
    if chi.len() != g.edge_count() {
        return Err(ColoringError::NotTotal {
            edges: g.edge_count(),
            colored: chi.len(),
        });
    }
    for v in 0..g.vertex_count() {
        let colors = chi.seen_by(g, v);
        if colors.len() > 2 {
            return Err(ColoringError::Infeasible { vertex: v, colors });
        }
    }
    Ok(())
}

/// A maximum matching with one color per matching edge, plus one color per
/// connected component of the remaining edges.
pub fn basic_algorithm(g: &Graph) -> EdgeColoring {
    let m = maximum_matching(g);
    let mut parent: Vec<Vertex> = (0..g.vertex_count()).collect();
    fn root(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (id, e) in g.edges().iter().enumerate() {
        if !m.contains(id) {
            let (a, b) = (root(&mut parent, e.u), root(&mut parent, e.v));
            parent[a] = b;
        }
    }
    let mut raw = vec![0; g.edge_count()];
    let mut label: HashMap<Vertex, usize> = HashMap::new();
    let matched = m.len();
    for (i, &e) in m.edges().iter().enumerate() {
        raw[e] = i;
    }
    for (id, e) in g.edges().iter().enumerate() {
        if !m.contains(id) {
            let r = root(&mut parent, e.u);
            let next = matched + label.len();
            raw[id] = *label.entry(r).or_insert(next);
        }
    }
    EdgeColoring::from_raw(raw)
}

/// Colors each connected component on its own and merges the results:
/// isolated edges get one color each, other components go through
/// [`basic_algorithm`].
pub fn color_components(g: &Graph) -> EdgeColoring {
    let mut raw = vec![0; g.edge_count()];
    let mut offset = 0;
    for comp in components(g).components {
        if comp.edge_count == 0 {
            continue;
        }
        let (sub, origin) = g.induced(&comp.vertices);
        let chi = if comp.is_trivial() {
            EdgeColoring::monochromatic(1)
        } else {
            basic_algorithm(&sub)
        };
        for (local, &e) in origin.iter().enumerate() {
            raw[e] = offset + chi.color(local);
        }
        offset += chi.count();
    }
    EdgeColoring::from_raw(raw)
}

/// Gives every pendant edge a color of its own without losing colors: if
/// the hub sees only the pendant's color the pendant gets a fresh one;
/// otherwise the hub's second color class is merged into the first and the
/// pendant takes over the freed color.
pub fn make_pendant_colors_unique(
    g: &Graph,
    chi: &EdgeColoring,
) -> Result<EdgeColoring, ColoringError> {
    check_feasible(g, chi)?;
    if let Some(hub) = (0..g.vertex_count()).find(|&u| g.leaf_neighbors(u).len() >= 2) {
        return Err(ColoringError::SharedLeafNeighbor { hub });
    }
    let mut colors = chi.colors().to_vec();
    let mut fresh = chi.count();
    for v in 0..g.vertex_count() {
        if !g.is_leaf(v) {
            continue;
        }
        let (u, e) = g.incident(v)[0];
        let c1 = colors[e];
        if colors.iter().filter(|&&c| c == c1).count() == 1 {
            continue;
        }
        match seen(g, &colors, u).into_iter().find(|&c| c != c1) {
            None => {
                colors[e] = fresh;
                fresh += 1;
            }
            Some(c2) => {
                for c in colors.iter_mut() {
                    if *c == c2 {
                        *c = c1;
                    }
                }
                colors[e] = c2;
            }
        }
    }
    Ok(EdgeColoring::from_raw(colors))
}

/// `colors k` followed by one `u v c` line per edge in identity order.
pub fn serialize_coloring(g: &Graph, chi: &EdgeColoring) -> String {
    let mut out = format!("colors {}\n", chi.count());
    for (id, e) in g.edges().iter().enumerate() {
        writeln!(out, "{} {} {}", e.u, e.v, chi.color(id)).unwrap();
    }
    out
}

/// Reads the format of [`serialize_coloring`]; edge endpoints must match
/// `g` in order (either orientation).
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring, ColoringError> {
    let err = |line: usize, reason: String| ColoringError::Parse { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let declared: usize = header
        .strip_prefix("colors ")
        .and_then(|k| k.trim().parse().ok())
        .ok_or_else(|| err(hl, format!("expected 'colors k', got '{header}'")))?;
    let mut raw = Vec::with_capacity(g.edge_count());
    for (line, l) in lines {
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(line, format!("not a number: '{t}'"))))
            .collect::<Result<_, _>>()?;
        let [u, v, c] = nums[..] else {
            return Err(err(line, "expected 'u v c'".into()));
        };
        let id = raw.len();
        if id >= g.edge_count() {
            return Err(err(line, "more colored edges than graph edges".into()));
        }
        if g.edge_key(id) != (u.min(v), u.max(v)) {
            return Err(err(line, format!("edge {id} is not {u} {v}")));
        }
        raw.push(c);
    }
    if raw.len() != g.edge_count() {
        return Err(ColoringError::NotTotal {
            edges: g.edge_count(),
            colored: raw.len(),
        });
    }
    let chi = EdgeColoring::from_raw(raw);
    if chi.count() != declared {
        return Err(err(hl, format!("header says {declared} colors, found {}", chi.count())));
    }
    Ok(chi)
}
