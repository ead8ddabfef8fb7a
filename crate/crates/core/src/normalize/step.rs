use std::fmt;

use crate::graph::{EdgeId, Vertex};

/// How a triangle of a cactus is represented after Modification 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Replacement {
    /// A fresh isolated edge; endpoints are identities after the step.
    Fresh { x: Vertex, y: Vertex },
    /// A triangle edge kept in place (identity before the step).
    Retained(EdgeId),
}

/// One degree-3 end of a removed bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeSide {
    pub center: Vertex,
    /// The two non-bridge edges at `center`, by increasing identity.
    pub removed: [EdgeId; 2],
    /// Far endpoints of `removed`, in the same order.
    pub joined: [Vertex; 2],
    /// `joined` was already an edge, so no copy is added.
    pub deduplicated: bool,
}

/// A neighbor of the contracted pair, with the edges that reached it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedNeighbor {
    pub vertex: Vertex,
    pub via_first: Option<EdgeId>,
    pub via_second: Option<EdgeId>,
}

impl MergedNeighbor {
    /// The edge that survives into the contracted graph.
    pub fn kept(&self) -> EdgeId {
        match (self.via_first, self.via_second) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!("merged neighbor without edges"),
        }
    }

    /// The second copy removed to keep the graph simple.
    pub fn dropped(&self) -> Option<EdgeId> {
        match (self.via_first, self.via_second) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        }
    }
}

/// A single rewrite. Vertex and edge identities refer to the graph before
/// the step unless a field says otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RewriteStep {
    Mod1Leaf {
        hub: Vertex,
        removed: Vertex,
        retained: Vertex,
    },
    Mod2Split {
        vertex: Vertex,
        /// `neighbors[i]` is reached through the smaller-identity edge first.
        neighbors: [Vertex; 2],
        /// Fresh leaves after the step; `new_leaves[i]` hangs from `neighbors[i]`.
        new_leaves: [Vertex; 2],
    },
    Mod3Cactus {
        triangles: Vec<[Vertex; 3]>,
        replacements: Vec<Replacement>,
        needles: Vec<EdgeId>,
        /// Cactus vertices left without edges, removed by the step.
        discarded: Vec<Vertex>,
    },
    Mod4Bridge {
        bridge: EdgeId,
        ends: [Vertex; 2],
        /// `sides[i]` is `None` when `ends[i]` is a leaf.
        sides: [Option<BridgeSide>; 2],
    },
    Mod5Contract {
        pair: [Vertex; 2],
        pendants: [Vertex; 2],
        /// Identities after the step.
        merged: Vertex,
        new_pendant: Vertex,
        isolated: [Vertex; 2],
        neighbors: Vec<MergedNeighbor>,
    },
}

impl RewriteStep {
    /// Modification number, 1 to 5.
    pub fn kind(&self) -> usize {
        match self {
            RewriteStep::Mod1Leaf { .. } => 1,
            RewriteStep::Mod2Split { .. } => 2,
            RewriteStep::Mod3Cactus { .. } => 3,
            RewriteStep::Mod4Bridge { .. } => 4,
            RewriteStep::Mod5Contract { .. } => 5,
        }
    }

    /// For a bridge step, the degree case: 2 when one end is a leaf, 3 when
    /// both ends have degree 3. (Case 1, an isolated edge, is never recorded.)
    pub fn bridge_case(&self) -> Option<usize> {
        match self {
            RewriteStep::Mod4Bridge { sides, .. } => {
                Some(1 + sides.iter().filter(|s| s.is_some()).count())
            }
            _ => None,
        }
    }
}

fn list<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(sep)
    }
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteStep::Mod1Leaf {
                hub,
                removed,
                retained,
            } => write!(f, "mod1 hub={hub} removed={removed} retained={retained}"),
            RewriteStep::Mod2Split {
                vertex,
                neighbors,
                new_leaves,
            } => write!(
                f,
                "mod2 vertex={vertex} neighbors={},{} leaves={},{}",
                neighbors[0], neighbors[1], new_leaves[0], new_leaves[1]
            ),
            RewriteStep::Mod3Cactus {
                triangles,
                replacements,
                needles,
                discarded,
            } => {
                let tris = list(triangles.iter().map(|t| format!("{}:{}:{}", t[0], t[1], t[2])), ";");
                let reps = list(
                    replacements.iter().map(|r| match r {
                        Replacement::Fresh { x, y } => format!("fresh:{x}:{y}"),
                        Replacement::Retained(e) => format!("kept:{e}"),
                    }),
                    ";",
                );
                write!(
                    f,
                    "mod3 triangles={tris} replacements={reps} needles={} discarded={}",
                    list(needles, ","),
                    list(discarded, ",")
                )
            }
            RewriteStep::Mod4Bridge {
                bridge,
                ends,
                sides,
            } => {
                let side = |s: &Option<BridgeSide>| match s {
                    None => "-".to_string(),
                    Some(s) => format!(
                        "{},{}:{},{}{}",
                        s.removed[0],
                        s.removed[1],
                        s.joined[0],
                        s.joined[1],
                        if s.deduplicated { ":dup" } else { "" }
                    ),
                };
                write!(
                    f,
                    "mod4 bridge={bridge} ends={},{} case={} sides={}|{}",
                    ends[0],
                    ends[1],
                    self.bridge_case().unwrap_or(0),
                    side(&sides[0]),
                    side(&sides[1])
                )
            }
            RewriteStep::Mod5Contract {
                pair,
                pendants,
                merged,
                new_pendant,
                isolated,
                neighbors,
            } => {
                let opt = |e: Option<EdgeId>| e.map_or("-".to_string(), |e| e.to_string());
                let nbrs = list(
                    neighbors
                        .iter()
                        .map(|m| format!("{}:{}:{}", m.vertex, opt(m.via_first), opt(m.via_second))),
                    ";",
                );
                write!(
                    f,
                    "mod5 pair={},{} pendants={},{} merged={merged} pendant={new_pendant} isolated={},{} neighbors={nbrs}",
                    pair[0], pair[1], pendants[0], pendants[1], isolated[0], isolated[1]
                )
            }
        }
    }
}
