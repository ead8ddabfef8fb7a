//! Forward rewrites. `find_*` selects the smallest-identity instance of a
//! modification and returns a fully specified step; [`rewrite`] validates a
//! step against a graph and performs it.

use std::collections::BTreeSet;

use super::cactus::{validate_cactus, Cactus};
use super::rebuild::{End, Plan, StepMaps};
use super::step::{BridgeSide, MergedNeighbor, Replacement, RewriteStep};
use super::NormalizeError;
use crate::graph::{find_bridges, EdgeId, Graph, Vertex};
use crate::matching::Matching;

fn invalid(reason: impl Into<String>) -> NormalizeError {
    NormalizeError::InvalidStep(reason.into())
}

/// Two leaves at a hub of degree at least 3. With a matching, a matched leaf
/// is always retained and only unmatched leaves are removed.
pub(crate) fn find_mod1(g: &Graph, matching: Option<&Matching>) -> Option<RewriteStep> {
    for hub in 0..g.vertex_count() {
        if g.degree(hub) < 3 {
            continue;
        }
        let mut leaves = g.leaf_neighbors(hub);
        if leaves.len() < 2 {
            continue;
        }
        leaves.sort_unstable();
        let matched = matching.and_then(|m| leaves.iter().copied().find(|&l| m.is_matched(l)));
        let retained = matched.unwrap_or(leaves[0]);
        let removed = *leaves.iter().find(|&&l| l != retained).expect("two leaves");
        return Some(RewriteStep::Mod1Leaf {
            hub,
            removed,
            retained,
        });
    }
    None
}

pub(crate) fn find_mod2(g: &Graph) -> Option<RewriteStep> {
    let n = g.vertex_count();
    (0..n).find(|&v| g.degree(v) == 2).map(|vertex| {
        let inc = g.incident(vertex);
        RewriteStep::Mod2Split {
            vertex,
            neighbors: [inc[0].0, inc[1].0],
            new_leaves: [n - 1, n],
        }
    })
}

/// Cactus vertices that keep no edge once the triangles are replaced.
fn discarded_vertices(g: &Graph, c: &Cactus, replacements: &[Replacement]) -> Vec<Vertex> {
    let mut keep: BTreeSet<Vertex> = BTreeSet::new();
    for &e in &c.needles {
        let edge = g.edge(e);
        keep.insert(edge.u);
        keep.insert(edge.v);
    }
    for r in replacements {
        if let Replacement::Retained(e) = *r {
            let edge = g.edge(e);
            keep.insert(edge.u);
            keep.insert(edge.v);
        }
    }
    c.vertices().into_iter().filter(|v| !keep.contains(v)).collect()
}

/// Chooses replacements: with a matching, a triangle holding a matching edge
/// keeps it; every other triangle gets a fresh edge.
pub(crate) fn mod3_step(g: &Graph, c: &Cactus, matching: Option<&Matching>) -> RewriteStep {
    let tri_edges = c.triangle_edges(g);
    let choice: Vec<Option<EdgeId>> = tri_edges
        .iter()
        .map(|es| matching.and_then(|m| es.iter().copied().find(|&e| m.contains(e))))
        .collect();
    let placeholder: Vec<Replacement> = choice
        .iter()
        .map(|c| match c {
            Some(e) => Replacement::Retained(*e),
            None => Replacement::Fresh { x: 0, y: 0 },
        })
        .collect();
    let discarded = discarded_vertices(g, c, &placeholder);
    let mut next = g.vertex_count() - discarded.len();
    let replacements = choice
        .iter()
        .map(|c| match c {
            Some(e) => Replacement::Retained(*e),
            None => {
                next += 2;
                Replacement::Fresh {
                    x: next - 2,
                    y: next - 1,
                }
            }
        })
        .collect();
    RewriteStep::Mod3Cactus {
        triangles: c.triangles.clone(),
        replacements,
        needles: c.needles.clone(),
        discarded,
    }
}

fn bridge_side(g: &Graph, center: Vertex, bridge: EdgeId) -> Option<BridgeSide> {
    if g.degree(center) == 1 {
        return None;
    }
    let others: Vec<(Vertex, EdgeId)> =
        g.incident(center).iter().copied().filter(|&(_, e)| e != bridge).collect();
    let joined = [others[0].0, others[1].0];
    Some(BridgeSide {
        center,
        removed: [others[0].1, others[1].1],
        joined,
        deduplicated: g.has_edge(joined[0], joined[1]),
    })
}

/// Smallest-identity bridge that is not an isolated edge. Errors if an end
/// has degree other than 1 or 3.
pub(crate) fn find_mod4(g: &Graph) -> Result<Option<RewriteStep>, NormalizeError> {
    for bridge in find_bridges(g) {
        let e = g.edge(bridge);
        let (du, dv) = (g.degree(e.u), g.degree(e.v));
        if du == 1 && dv == 1 {
            continue;
        }
        for (x, d) in [(e.u, du), (e.v, dv)] {
            if d != 1 && d != 3 {
                return Err(NormalizeError::BridgeEndDegree { vertex: x, degree: d });
            }
        }
        return Ok(Some(RewriteStep::Mod4Bridge {
            bridge,
            ends: [e.u, e.v],
            sides: [bridge_side(g, e.u, bridge), bridge_side(g, e.v, bridge)],
        }));
    }
    Ok(None)
}

/// Mod 5 at the ordered pair `(u1, u2)`, if eligible and not degenerate.
pub(crate) fn mod5_at(g: &Graph, u1: Vertex, u2: Vertex) -> Option<RewriteStep> {
    let n = g.vertex_count();
    if u1 == u2 || !g.has_edge(u1, u2) {
        return None;
    }
    let l1 = g.leaf_neighbors(u1);
    let l2 = g.leaf_neighbors(u2);
    if l1.len() != 1 || l2.len() != 1 {
        return None;
    }
    let (v1, v2) = (l1[0], l2[0]);
    if v1 == u2 || v2 == u1 {
        return None;
    }
    let skip = [u1, u2, v1, v2];
    let mut neighbors: Vec<MergedNeighbor> = Vec::new();
    for (side, u) in [u1, u2].into_iter().enumerate() {
        for &(x, e) in g.incident(u) {
            if skip.contains(&x) {
                continue;
            }
            let slot = match neighbors.iter().position(|m| m.vertex == x) {
                Some(i) => i,
                None => {
                    neighbors.push(MergedNeighbor {
                        vertex: x,
                        via_first: None,
                        via_second: None,
                    });
                    neighbors.len() - 1
                }
            };
            if side == 0 {
                neighbors[slot].via_first = Some(e);
            } else {
                neighbors[slot].via_second = Some(e);
            }
        }
    }
    if neighbors.is_empty() {
        return None;
    }
    neighbors.sort_by_key(|m| m.vertex);
    Some(RewriteStep::Mod5Contract {
        pair: [u1, u2],
        pendants: [v1, v2],
        merged: n - 4,
        new_pendant: n - 3,
        isolated: [n - 2, n - 1],
        neighbors,
    })
}

pub(crate) fn find_mod5(g: &Graph) -> Option<RewriteStep> {
    for u1 in 0..g.vertex_count() {
        let mut higher: Vec<Vertex> = g.neighbors(u1).filter(|&w| w > u1).collect();
        higher.sort_unstable();
        for u2 in higher {
            if let Some(step) = mod5_at(g, u1, u2) {
                return Some(step);
            }
        }
    }
    None
}

/// Validates `step` against `g` and performs it.
pub fn rewrite(g: &Graph, step: &RewriteStep) -> Result<(Graph, StepMaps), NormalizeError> {
    let n = g.vertex_count();
    let in_range = |v: Vertex| v < n;
    let mut plan = Plan::identity(g);
    match step {
        RewriteStep::Mod1Leaf {
            hub,
            removed,
            retained,
        } => {
            let (hub, removed, retained) = (*hub, *removed, *retained);
            if ![hub, removed, retained].into_iter().all(in_range) || removed == retained {
                return Err(invalid("mod1: bad vertices"));
            }
            if g.degree(hub) < 3
                || !g.is_leaf(removed)
                || !g.is_leaf(retained)
                || !g.has_edge(hub, removed)
                || !g.has_edge(hub, retained)
            {
                return Err(invalid(format!("mod1 does not apply at hub {hub}")));
            }
            plan.drop_edges(&[g.edge_between(hub, removed).unwrap()]);
            plan.remove_vertex(removed);
        }
        RewriteStep::Mod2Split {
            vertex,
            neighbors,
            new_leaves,
        } => {
            let v = *vertex;
            if !in_range(v) || g.degree(v) != 2 {
                return Err(invalid(format!("mod2: vertex {v} does not have degree 2")));
            }
            let inc = g.incident(v);
            if *neighbors != [inc[0].0, inc[1].0] || *new_leaves != [n - 1, n] {
                return Err(invalid(format!("mod2: record does not match vertex {v}")));
            }
            let a = plan.fresh_vertex();
            let b = plan.fresh_vertex();
            plan.redirect(inc[0].1, v, a);
            plan.redirect(inc[1].1, v, b);
            plan.remove_vertex(v);
        }
        RewriteStep::Mod3Cactus {
            triangles,
            replacements,
            needles,
            discarded,
        } => {
            if triangles.iter().flatten().any(|&v| !in_range(v)) {
                return Err(invalid("mod3: vertex out of range"));
            }
            let c = Cactus::from_triangles(g, triangles.clone());
            if c.triangles != *triangles {
                return Err(invalid("mod3: triangles not in canonical order"));
            }
            validate_cactus(g, &c).map_err(NormalizeError::InvalidCactus)?;
            if c.needles != *needles || replacements.len() != triangles.len() {
                return Err(invalid("mod3: needle or replacement list mismatch"));
            }
            let tri_edges = c.triangle_edges(g);
            let mut drop = Vec::new();
            for (es, r) in tri_edges.iter().zip(replacements) {
                match r {
                    Replacement::Retained(e) if es.contains(e) => {
                        drop.extend(es.iter().copied().filter(|x| x != e))
                    }
                    Replacement::Retained(e) => {
                        return Err(invalid(format!("mod3: edge {e} is not in its triangle")))
                    }
                    Replacement::Fresh { .. } => drop.extend(es.iter().copied()),
                }
            }
            if discarded_vertices(g, &c, replacements) != *discarded {
                return Err(invalid("mod3: discarded vertex list mismatch"));
            }
            plan.drop_edges(&drop);
            let mut next = n - discarded.len();
            for r in replacements {
                if let Replacement::Fresh { x, y } = *r {
                    if (x, y) != (next, next + 1) {
                        return Err(invalid("mod3: fresh identities mismatch"));
                    }
                    next += 2;
                    let a = plan.fresh_vertex();
                    let b = plan.fresh_vertex();
                    plan.push_edge(a, b, None);
                }
            }
            for &v in discarded {
                plan.remove_vertex(v);
            }
        }
        RewriteStep::Mod4Bridge {
            bridge,
            ends,
            sides,
        } => {
            let b = *bridge;
            if b >= g.edge_count() || !find_bridges(g).contains(&b) {
                return Err(invalid(format!("mod4: edge {b} is not a bridge")));
            }
            let e = g.edge(b);
            if *ends != [e.u, e.v] {
                return Err(invalid("mod4: ends mismatch"));
            }
            for x in *ends {
                let d = g.degree(x);
                if d != 1 && d != 3 {
                    return Err(NormalizeError::BridgeEndDegree { vertex: x, degree: d });
                }
            }
            let expected = [bridge_side(g, e.u, b), bridge_side(g, e.v, b)];
            if *sides != expected || sides.iter().all(Option::is_none) {
                return Err(invalid("mod4: side records mismatch"));
            }
            for s in sides.iter().flatten() {
                plan.drop_edges(&s.removed);
                if !s.deduplicated {
                    plan.push_edge(End::Old(s.joined[0]), End::Old(s.joined[1]), None);
                }
            }
        }
        RewriteStep::Mod5Contract { pair, .. } => {
            let [u1, u2] = *pair;
            if !in_range(u1) || !in_range(u2) || mod5_at(g, u1, u2).as_ref() != Some(step) {
                return Err(invalid(format!("mod5 does not apply at {u1},{u2}")));
            }
            let RewriteStep::Mod5Contract {
                pendants,
                neighbors,
                ..
            } = step
            else {
                unreachable!()
            };
            let [v1, v2] = *pendants;
            let mut drop = vec![
                g.edge_between(u1, u2).unwrap(),
                g.edge_between(u1, v1).unwrap(),
                g.edge_between(u2, v2).unwrap(),
            ];
            drop.extend(neighbors.iter().filter_map(MergedNeighbor::dropped));
            plan.drop_edges(&drop);
            let u12 = plan.fresh_vertex();
            let v12 = plan.fresh_vertex();
            let w1 = plan.fresh_vertex();
            let w2 = plan.fresh_vertex();
            for m in neighbors {
                let kept = m.kept();
                let from = g.edge(kept).other(m.vertex);
                plan.redirect(kept, from, u12);
            }
            plan.push_edge(u12, v12, None);
            plan.push_edge(w1, w2, None);
            for v in [u1, u2, v1, v2] {
                plan.remove_vertex(v);
            }
        }
    }
    Ok(plan.build(g))
}
