//! End-to-end solving and certification.
//!
//! The certified bound is computed on the normalized graph, component by
//! component: an isolated vertex admits 0 colors, an isolated edge 1, and a
//! normalized connected component with `n ≥ 3` vertices and `ℓ` leaves at
//! most `⌊(3n − ℓ)/4⌋`. Since normalization preserves the optimum, the sum
//! bounds the optimum of the input graph.
//!
//! For the perfect-matching strategy the split-event accounting
//! `⌊(3n + d2⁺ − d2⁻)/4⌋` and the matching lower bound `2 d2⁺ + d2⁻` are
//! reported alongside, for audit; they do not replace the certified bound.

use std::fmt::Write as _;

use num_rational::Ratio;

use super::{check_feasible, color_components, lift_coloring, ColoringError, EdgeColoring};
use crate::graph::{components, Graph};
use crate::normalize::{is_normalized, normalize, NormalizeStats, RewriteLog, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    IsolatedVertex,
    IsolatedEdge,
    MaxColors,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::IsolatedVertex => "isolated-vertex",
            BoundKind::IsolatedEdge => "isolated-edge",
            BoundKind::MaxColors => "maxcolors",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBound {
    pub vertices: usize,
    pub edges: usize,
    pub leaves: usize,
    pub kind: BoundKind,
    pub bound: usize,
}

/// Split-event accounting of the perfect-matching strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmBound {
    pub original_vertices: usize,
    pub d2_plus: usize,
    pub d2_minus: usize,
    /// `(3n + d2⁺ − d2⁻) / 4` with `n` the original vertex count.
    pub accounting: Ratio<i64>,
    /// `2 d2⁺ + d2⁻`.
    pub matching_lower_bound: usize,
    /// The normalized graph has more than one non-trivial component.
    pub multi_component: bool,
    /// Every split event was classified and every removal charged.
    pub complete: bool,
}

impl PmBound {
    pub fn accounting_floor(&self) -> i64 {
        self.accounting.floor().to_integer()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub components: Vec<ComponentBound>,
    pub total: usize,
    pub pm: Option<PmBound>,
}

impl BoundReport {
    pub fn kind(&self) -> &'static str {
        if self.components.iter().any(|c| c.kind == BoundKind::MaxColors) {
            "maxcolors"
        } else {
            "trivial"
        }
    }
}

/// Per-component bound of a normalized graph.
pub fn upper_bound(
    g_normalized: &Graph,
    stats: &NormalizeStats,
    strategy: Strategy,
) -> Result<BoundReport, ColoringError> {
    if !is_normalized(g_normalized) {
        return Err(ColoringError::NotNormalized);
    }
    let view = components(g_normalized);
    let parts: Vec<ComponentBound> = view
        .components
        .iter()
        .map(|c| {
            let (kind, bound) = match c.vertex_count() {
                1 => (BoundKind::IsolatedVertex, 0),
                2 => (BoundKind::IsolatedEdge, 1),
                n => (BoundKind::MaxColors, (3 * n - c.leaves) / 4),
            };
            ComponentBound {
                vertices: c.vertex_count(),
                edges: c.edge_count,
                leaves: c.leaves,
                kind,
                bound,
            }
        })
        .collect();
    let total = parts.iter().map(|c| c.bound).sum();
    let pm = (strategy == Strategy::PerfectMatching).then(|| {
        let audit = stats.pm.as_ref();
        let n = audit.map_or(0, |a| a.original_vertices);
        PmBound {
            original_vertices: n,
            d2_plus: stats.d2_plus,
            d2_minus: stats.d2_minus,
            accounting: Ratio::new(
                3 * n as i64 + stats.d2_plus as i64 - stats.d2_minus as i64,
                4,
            ),
            matching_lower_bound: 2 * stats.d2_plus + stats.d2_minus,
            multi_component: view.non_trivial().count() > 1,
            complete: audit.is_some_and(|a| a.is_complete()),
        }
    });
    Ok(BoundReport {
        components: parts,
        total,
        pm,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub strategy: Strategy,
    pub achieved: usize,
    /// Colors of the normalized graph's coloring before lifting.
    pub normalized_colors: usize,
    pub bound: BoundReport,
}

impl Certificate {
    /// `bound / achieved`; 1 when both are zero.
    pub fn ratio(&self) -> Ratio<u64> {
        if self.achieved == 0 {
            return Ratio::from_integer(1);
        }
        Ratio::new(self.bound.total as u64, self.achieved as u64)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let r = self.ratio();
        writeln!(out, "strategy {}", self.strategy.name()).unwrap();
        writeln!(out, "achieved {}", self.achieved).unwrap();
        writeln!(out, "bound {}", self.bound.total).unwrap();
        writeln!(out, "bound_kind {}", self.bound.kind()).unwrap();
        writeln!(out, "ratio {}/{}", r.numer(), r.denom()).unwrap();
        writeln!(out, "components {}", self.bound.components.len()).unwrap();
        if let Some(pm) = &self.bound.pm {
            let a = pm.accounting;
            writeln!(out, "d2_plus {}", pm.d2_plus).unwrap();
            writeln!(out, "d2_minus {}", pm.d2_minus).unwrap();
            writeln!(out, "pm_accounting {}/{}", a.numer(), a.denom()).unwrap();
            writeln!(out, "pm_matching_lower_bound {}", pm.matching_lower_bound).unwrap();
            writeln!(out, "pm_multi_component {}", pm.multi_component).unwrap();
            writeln!(out, "pm_complete {}", pm.complete).unwrap();
        }
        out
    }
}

/// Everything a solve run produces.
#[derive(Debug, Clone)]
pub struct Solution {
    pub coloring: EdgeColoring,
    pub certificate: Certificate,
    pub normalized: Graph,
    pub normalized_coloring: EdgeColoring,
    pub log: RewriteLog,
    pub stats: NormalizeStats,
}

pub fn solve_detailed(g: &Graph, strategy: Strategy) -> Result<Solution, ColoringError> {
    let (h, log, stats) = normalize(g, strategy)?;
    let chi_h = color_components(&h);
    check_feasible(&h, &chi_h)?;
    let chi = lift_coloring(&log, &chi_h)?;
    check_feasible(g, &chi)?;
    let bound = upper_bound(&h, &stats, strategy)?;
    if chi.count() > bound.total || chi.count() < chi_h.count() {
        return Err(ColoringError::CertificationFailure {
            achieved: chi.count(),
            bound: bound.total,
        });
    }
    let certificate = Certificate {
        strategy,
        achieved: chi.count(),
        normalized_colors: chi_h.count(),
        bound,
    };
    Ok(Solution {
        coloring: chi,
        certificate,
        normalized: h,
        normalized_coloring: chi_h,
        log,
        stats,
    })
}

/// Normalize, color each component, lift back and certify.
pub fn solve(g: &Graph, strategy: Strategy) -> Result<(EdgeColoring, Certificate), ColoringError> {
    let s = solve_detailed(g, strategy)?;
    Ok((s.coloring, s.certificate))
}
