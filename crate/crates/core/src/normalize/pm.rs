//! Matching tracking and split-event accounting for the perfect-matching
//! strategy.
//!
//! Each Modification 2 event introduces up to two pendant edges; the set of
//! introduced pendant edges is tracked through later steps. When a later
//! Modification 1 removes one of them at hub `u`, the removal is charged to
//! the oldest event still waiting at `u` (an event waits at `u` when it
//! left `u` with two or more leaves). An event's net contribution is then
//! 2 (Case 1), 1 (Case 2) or 0 (Case 3). Every Case 3 event is coupled with
//! an uncoupled Case 1 event, preferably the one that created a leaf it had
//! removed, and the pair counts twice towards `d2_minus`.
//!
//! With every removal charged and every Case 3 event coupled,
//! `d2_plus + d2_minus` is the number of events and `2 d2_plus + d2_minus`
//! is the number of surviving introduced pendant edges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::rebuild::StepMaps;
use super::step::{Replacement, RewriteStep};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitCase {
    /// Both introduced pendant edges survive.
    One,
    /// Exactly one survives.
    Two,
    /// None survive.
    Three,
    /// More removals were charged than edges introduced.
    Irregular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitEvent {
    /// Index of the Modification 2 step in the log.
    pub step: usize,
    /// Pendant edges newly introduced by the split.
    pub added: usize,
    /// Introduced pendant edges later removed and charged to this event.
    pub consumed: usize,
    pub case: SplitCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmAudit {
    pub original_vertices: usize,
    pub events: Vec<SplitEvent>,
    /// `(case 3 event, case 1 event)` pairs, as event indices.
    pub couplings: Vec<(usize, usize)>,
    /// Case 3 events without a partner.
    pub unpaired: usize,
    /// Removals of introduced pendant edges with no waiting event.
    pub unattributed: usize,
    /// Surviving introduced pendant edges, as identities in the result.
    pub introduced_pendants: Vec<EdgeId>,
    /// The tracked matching, as identities in the result.
    pub matching: Vec<EdgeId>,
}

impl PmAudit {
    fn count(&self, case: SplitCase) -> usize {
        self.events.iter().filter(|e| e.case == case).count()
    }

    pub fn d2_plus(&self) -> usize {
        self.count(SplitCase::One) - self.couplings.len()
    }

    pub fn d2_minus(&self) -> usize {
        self.count(SplitCase::Two) + 2 * self.couplings.len()
    }

    /// True when every removal was charged and every event classified.
    pub fn is_complete(&self) -> bool {
        self.unpaired == 0 && self.unattributed == 0 && self.count(SplitCase::Irregular) == 0
    }
}

/// Carries matching edges across a step; Modification 3 fresh edges join.
pub(crate) fn carry_matching(
    before: &Graph,
    after: &Graph,
    step: &RewriteStep,
    maps: &StepMaps,
    edges: impl IntoIterator<Item = EdgeId>,
) -> Vec<EdgeId> {
    let image = maps.edge_image(before.edge_count());
    let mut out: BTreeSet<EdgeId> = edges
        .into_iter()
        .filter_map(|e| image.get(e).copied().flatten())
        .collect();
    if let RewriteStep::Mod3Cactus { replacements, .. } = step {
        for r in replacements {
            if let Replacement::Fresh { x, y } = *r {
                out.insert(after.edge_between(x, y).expect("fresh edge exists"));
            }
        }
    }
    out.into_iter().collect()
}

struct RawEvent {
    step: usize,
    added: usize,
    /// Creator of each removed leaf charged to this event, if known.
    charges: Vec<Option<usize>>,
}

pub(crate) struct Tracker {
    original_vertices: usize,
    matching: Vec<EdgeId>,
    pendants: BTreeSet<EdgeId>,
    waiting: BTreeMap<Vertex, VecDeque<usize>>,
    creator: BTreeMap<Vertex, usize>,
    events: Vec<RawEvent>,
    unattributed: usize,
}

impl Tracker {
    pub(crate) fn new(g: &Graph, m: &Matching) -> Self {
        Tracker {
            original_vertices: g.vertex_count(),
            matching: m.edges().iter().copied().collect(),
            pendants: BTreeSet::new(),
            waiting: BTreeMap::new(),
            creator: BTreeMap::new(),
            events: Vec::new(),
            unattributed: 0,
        }
    }

    pub(crate) fn matching(&self, g: &Graph) -> Matching {
        Matching::from_edges(g, self.matching.iter().copied()).expect("tracked matching is valid")
    }

    pub(crate) fn observe(
        &mut self,
        index: usize,
        before: &Graph,
        after: &Graph,
        step: &RewriteStep,
        maps: &StepMaps,
    ) {
        if let RewriteStep::Mod1Leaf { hub, removed, .. } = *step {
            let e = before.edge_between(hub, removed).expect("leaf edge");
            debug_assert!(!self.matching.contains(&e), "matched leaf removed");
            if self.pendants.remove(&e) {
                let owner = self.waiting.get_mut(&hub).and_then(VecDeque::pop_front);
                match owner {
                    Some(ev) => {
                        let made_by = self.creator.get(&removed).copied();
                        self.events[ev].charges.push(made_by);
                    }
                    None => self.unattributed += 1,
                }
            }
        }

        let old_size = self.matching.len();
        self.matching = carry_matching(before, after, step, maps, self.matching.iter().copied());
        debug_assert!(self.matching.len() >= old_size, "matching shrank at step {index}");
        debug_assert!(Matching::from_edges(after, self.matching.iter().copied()).is_some());

        let edge_image = maps.edge_image(before.edge_count());
        self.pendants = self
            .pendants
            .iter()
            .map(|&e| edge_image[e].expect("introduced pendant edges survive"))
            .collect();
        let vertex_image = maps.vertex_image(before.vertex_count());
        let rekey = |v: Vertex| vertex_image[v];
        self.waiting = std::mem::take(&mut self.waiting)
            .into_iter()
            .filter_map(|(v, q)| rekey(v).map(|w| (w, q)))
            .filter(|(_, q)| !q.is_empty())
            .collect();
        self.creator = std::mem::take(&mut self.creator)
            .into_iter()
            .filter_map(|(v, ev)| rekey(v).map(|w| (w, ev)))
            .collect();

        if let RewriteStep::Mod2Split {
            vertex,
            neighbors,
            new_leaves,
        } = *step
        {
            let ev = self.events.len();
            let mut added = 0;
            for i in 0..2 {
                // Splitting keeps edge identities.
                let e = before.incident(vertex)[i].1;
                if self.pendants.insert(e) {
                    added += 1;
                }
                self.creator.insert(new_leaves[i], ev);
                let hub = vertex_image[neighbors[i]].expect("neighbors survive a split");
                if after.degree(hub) >= 3 && after.leaf_neighbors(hub).len() >= 2 {
                    self.waiting.entry(hub).or_default().push_back(ev);
                }
            }
            self.events.push(RawEvent {
                step: index,
                added,
                charges: Vec::new(),
            });
        }
    }

    pub(crate) fn finish(self, result: &Graph) -> PmAudit {
        let mut events: Vec<SplitEvent> = self
            .events
            .iter()
            .map(|raw| {
                let consumed = raw.charges.len();
                let case = match raw.added as isize - consumed as isize {
                    2 => SplitCase::One,
                    1 => SplitCase::Two,
                    0 => SplitCase::Three,
                    _ => SplitCase::Irregular,
                };
                SplitEvent {
                    step: raw.step,
                    added: raw.added,
                    consumed,
                    case,
                }
            })
            .collect();
        let mut coupled = vec![false; events.len()];
        let mut couplings = Vec::new();
        let mut unpaired = 0;
        for ev in 0..events.len() {
            if events[ev].case != SplitCase::Three {
                continue;
            }
            let free = |c: usize, coupled: &[bool]| {
                c != ev && events[c].case == SplitCase::One && !coupled[c]
            };
            let preferred = self.events[ev]
                .charges
                .iter()
                .flatten()
                .copied()
                .find(|&c| free(c, &coupled));
            let partner = preferred.or_else(|| (0..events.len()).find(|&c| free(c, &coupled)));
            match partner {
                Some(c) => {
                    coupled[c] = true;
                    couplings.push((ev, c));
                }
                None => unpaired += 1,
            }
        }
        events.shrink_to_fit();
        debug_assert!(Matching::from_edges(result, self.matching.iter().copied()).is_some());
        PmAudit {
            original_vertices: self.original_vertices,
            events,
            couplings,
            unpaired,
            unattributed: self.unattributed,
            introduced_pendants: self.pendants.into_iter().collect(),
            matching: self.matching,
        }
    }
}
