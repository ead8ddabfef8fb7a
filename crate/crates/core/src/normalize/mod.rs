//! Color-count preserving rewrites and the normalization pipelines.
//!
//! A graph is *normalized* when none of the first three modifications
//! applies: no two leaves share a hub of degree ≥ 3, no vertex has degree 2,
//! and there is no simple triangular cactus. Every step is recorded in a
//! [`RewriteLog`] with identity maps, so a coloring of the result can be
//! lifted back (see [`crate::coloring::lift_coloring`]).
//!
//! Rewritten graphs are rebuilt from scratch: surviving vertices keep their
//! relative order and are renumbered densely, fresh vertices come after
//! them; surviving edges keep their order and new edges are appended.

mod cactus;
mod mods;
mod pm;
mod rebuild;
mod step;

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{is_subcubic, EdgeId, Graph};
use crate::matching::{is_perfect, maximum_matching, Matching};

pub use cactus::{find_simple_cactus, validate_cactus, Cactus};
pub use mods::rewrite as apply_step;
pub use pm::{PmAudit, SplitCase, SplitEvent};
pub use rebuild::StepMaps;
pub use step::{BridgeSide, MergedNeighbor, Replacement, RewriteStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    General,
    Subcubic,
    ClawFree,
    PerfectMatching,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::General,
        Strategy::Subcubic,
        Strategy::ClawFree,
        Strategy::PerfectMatching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::General => "general",
            Strategy::Subcubic => "subcubic",
            Strategy::ClawFree => "clawfree",
            Strategy::PerfectMatching => "pm",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown strategy '{s}' (general, subcubic, clawfree, pm)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("the subcubic strategy needs maximum degree at most 3, found {0}")]
    NotSubcubic(usize),
    #[error("the graph has no perfect matching (maximum matching covers {matched} of {n} vertices)")]
    NoPerfectMatching { matched: usize, n: usize },
    #[error("the given matching is not a perfect matching of the graph")]
    MatchingNotPerfect,
    #[error("bridge end {vertex} has degree {degree}; expected 1 or 3")]
    BridgeEndDegree { vertex: usize, degree: usize },
    #[error("invalid cactus: {0}")]
    InvalidCactus(String),
    #[error("invalid rewrite step: {0}")]
    InvalidStep(String),
    #[error("normalization exceeded {0} steps")]
    StepLimit(usize),
    #[error("log replay diverged at step {step}: {reason}")]
    ReplayMismatch { step: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEntry {
    pub step: RewriteStep,
    pub maps: StepMaps,
}

/// The pair (original, result) with every step in between.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteLog {
    pub original: Graph,
    pub entries: Vec<LogEntry>,
    pub result: Graph,
}

impl RewriteLog {
    /// A log with no steps.
    pub fn identity(g: &Graph) -> Self {
        RewriteLog {
            original: g.clone(),
            entries: Vec::new(),
            result: g.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn steps(&self) -> impl Iterator<Item = &RewriteStep> {
        self.entries.iter().map(|e| &e.step)
    }

    /// Appends a step applied to the current result.
    pub fn push(&mut self, step: RewriteStep) -> Result<&StepMaps, NormalizeError> {
        let (next, maps) = mods::rewrite(&self.result, &step)?;
        self.result = next;
        self.entries.push(LogEntry { step, maps });
        Ok(&self.entries.last().unwrap().maps)
    }

    /// Re-runs every step from the original graph. Returns all intermediate
    /// graphs, original first and result last, after checking that each
    /// step reproduces its recorded maps and the final graph matches.
    pub fn replay(&self) -> Result<Vec<Graph>, NormalizeError> {
        let mut graphs = vec![self.original.clone()];
        for (i, entry) in self.entries.iter().enumerate() {
            let (next, maps) = mods::rewrite(graphs.last().unwrap(), &entry.step).map_err(|e| {
                NormalizeError::ReplayMismatch {
                    step: i,
                    reason: e.to_string(),
                }
            })?;
            if maps != entry.maps {
                return Err(NormalizeError::ReplayMismatch {
                    step: i,
                    reason: "identity maps differ".into(),
                });
            }
            graphs.push(next);
        }
        if *graphs.last().unwrap() != self.result {
            return Err(NormalizeError::ReplayMismatch {
                step: self.entries.len(),
                reason: "final graph differs from the stored result".into(),
            });
        }
        Ok(graphs)
    }

    /// One line per step, framed by the sizes of the original and result.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        let size = |g: &Graph| format!("{} {}", g.vertex_count(), g.edge_count());
        writeln!(out, "original {}", size(&self.original)).unwrap();
        for entry in &self.entries {
            writeln!(out, "{}", entry.step).unwrap();
        }
        writeln!(out, "result {}", size(&self.result)).unwrap();
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    /// `counts[i]` is the number of applications of Modification `i + 1`.
    pub counts: [usize; 5],
    pub d2_plus: usize,
    pub d2_minus: usize,
    /// Event classification; only for the perfect-matching strategy.
    pub pm: Option<PmAudit>,
    /// `(mod2 step, mod5 step)` index pairs of the claw-free strategy.
    pub mod5_pairs: Vec<(usize, usize)>,
}

impl NormalizeStats {
    pub fn steps(&self) -> usize {
        self.counts.iter().sum()
    }
}

pub fn is_normalized(g: &Graph) -> bool {
    mods::find_mod2(g).is_none()
        && mods::find_mod1(g, None).is_none()
        && find_simple_cactus(g).is_none()
}

pub fn apply_mod1(g: &Graph) -> Option<(Graph, RewriteStep)> {
    let step = mods::find_mod1(g, None)?;
    let (h, _) = mods::rewrite(g, &step).expect("selected step applies");
    Some((h, step))
}

pub fn apply_mod2(g: &Graph) -> Option<(Graph, RewriteStep)> {
    let step = mods::find_mod2(g)?;
    let (h, _) = mods::rewrite(g, &step).expect("selected step applies");
    Some((h, step))
}

pub fn apply_mod3(g: &Graph, c: &Cactus) -> Result<(Graph, RewriteStep), NormalizeError> {
    validate_cactus(g, c).map_err(NormalizeError::InvalidCactus)?;
    let step = mods::mod3_step(g, c, None);
    let (h, _) = mods::rewrite(g, &step)?;
    Ok((h, step))
}

/// Modification 3 that keeps a perfect matching perfect: a triangle holding
/// a matching edge is replaced by that edge, any other triangle by a fresh
/// edge that joins the matching.
pub fn apply_mod3_pm(
    g: &Graph,
    c: &Cactus,
    m: &Matching,
) -> Result<(Graph, RewriteStep, Matching), NormalizeError> {
    if !m.is_valid_for(g) || !is_perfect(m, g) {
        return Err(NormalizeError::MatchingNotPerfect);
    }
    validate_cactus(g, c).map_err(NormalizeError::InvalidCactus)?;
    let step = mods::mod3_step(g, c, Some(m));
    let (h, maps) = mods::rewrite(g, &step)?;
    let next = pm::carry_matching(g, &h, &step, &maps, m.edges().iter().copied());
    let m2 = Matching::from_edges(&h, next).expect("carried edges form a matching");
    Ok((h, step, m2))
}

/// Bridge removal on a subcubic graph, meant for normalized inputs where
/// bridge ends have degree 1 or 3. `Ok(None)` when every bridge is an
/// isolated edge.
pub fn apply_mod4(g: &Graph) -> Result<Option<(Graph, RewriteStep)>, NormalizeError> {
    if !is_subcubic(g) {
        return Err(NormalizeError::NotSubcubic(g.max_degree()));
    }
    let Some(step) = mods::find_mod4(g)? else {
        return Ok(None);
    };
    let (h, _) = mods::rewrite(g, &step)?;
    Ok(Some((h, step)))
}

pub fn apply_mod5(g: &Graph) -> Option<(Graph, RewriteStep)> {
    let step = mods::find_mod5(g)?;
    let (h, _) = mods::rewrite(g, &step).expect("selected step applies");
    Some((h, step))
}

/// Generous cap on the number of steps; normalization is polynomial and the
/// cap exists to turn a bug into an error instead of a hang.
fn step_cap(g: &Graph) -> usize {
    let s = g.vertex_count() + g.edge_count() + 4;
    8 * s * s
}

/// Rewrites `g` until no modification of the strategy's set applies.
pub fn normalize(
    g: &Graph,
    strategy: Strategy,
) -> Result<(Graph, RewriteLog, NormalizeStats), NormalizeError> {
    let mut tracker = match strategy {
        Strategy::Subcubic if !is_subcubic(g) => {
            return Err(NormalizeError::NotSubcubic(g.max_degree()))
        }
        Strategy::PerfectMatching => {
            let m = maximum_matching(g);
            if !is_perfect(&m, g) {
                return Err(NormalizeError::NoPerfectMatching {
                    matched: 2 * m.len(),
                    n: g.vertex_count(),
                });
            }
            Some(pm::Tracker::new(g, &m))
        }
        _ => None,
    };
    let cap = step_cap(g);
    let mut log = RewriteLog::identity(g);
    let mut stats = NormalizeStats::default();

    let record = |log: &mut RewriteLog,
                      stats: &mut NormalizeStats,
                      tracker: &mut Option<pm::Tracker>,
                      step: RewriteStep|
     -> Result<(), NormalizeError> {
        if log.len() >= cap {
            return Err(NormalizeError::StepLimit(cap));
        }
        let before = log.result.clone();
        stats.counts[step.kind() - 1] += 1;
        let index = log.len();
        let maps = log.push(step.clone())?.clone();
        if let Some(t) = tracker.as_mut() {
            t.observe(index, &before, &log.result, &step, &maps);
        }
        Ok(())
    };

    loop {
        let g = &log.result;
        if let Some(step) = mods::find_mod2(g) {
            let RewriteStep::Mod2Split { neighbors, .. } = step else {
                unreachable!()
            };
            let n_before = g.vertex_count();
            record(&mut log, &mut stats, &mut tracker, step)?;
            if strategy == Strategy::ClawFree {
                let image = log.entries.last().unwrap().maps.vertex_image(n_before);
                let (u1, u2) = (image[neighbors[0]], image[neighbors[1]]);
                if let (Some(u1), Some(u2)) = (u1, u2) {
                    if let Some(step5) = mods::mod5_at(&log.result, u1, u2) {
                        let split = log.len() - 1;
                        record(&mut log, &mut stats, &mut tracker, step5)?;
                        stats.mod5_pairs.push((split, log.len() - 1));
                    }
                }
            }
            continue;
        }
        let matching = tracker.as_ref().map(|t| t.matching(g));
        if let Some(step) = mods::find_mod1(g, matching.as_ref()) {
            record(&mut log, &mut stats, &mut tracker, step)?;
            continue;
        }
        if let Some(c) = find_simple_cactus(g) {
            let step = mods::mod3_step(g, &c, matching.as_ref());
            record(&mut log, &mut stats, &mut tracker, step)?;
            continue;
        }
        if strategy == Strategy::Subcubic {
            if let Some(step) = mods::find_mod4(g)? {
                record(&mut log, &mut stats, &mut tracker, step)?;
                continue;
            }
        }
        break;
    }

    if let Some(t) = tracker {
        let audit = t.finish(&log.result);
        stats.d2_plus = audit.d2_plus();
        stats.d2_minus = audit.d2_minus();
        stats.pm = Some(audit);
    }
    let result = log.result.clone();
    Ok((result, log, stats))
}

/// Edge identities of `g` between the given vertex pairs, for tests.
pub fn edges_between(g: &Graph, pairs: &[(usize, usize)]) -> Option<Vec<EdgeId>> {
    pairs.iter().map(|&(a, b)| g.edge_between(a, b)).collect()
}
