//! Lifting a coloring of a rewritten graph back through its log.
//!
//! Steps are undone last to first. Edges that survive a step keep their
//! color; the rest are restored per modification:
//!
//! * Mod 1: the removed pendant edge takes the smallest color its hub sees.
//! * Mod 2: nothing to restore, the split vertex sees the two leaf colors.
//! * Mod 3: each triangle takes the color of its replacement edge.
//! * Mod 4: the two removed edges at a bridge end take the color of the edge
//!   joining their far endpoints.
//! * Mod 5: first the new pendant edge is made the only edge of its color
//!   at the merged vertex (merging the merged vertex's second color into
//!   the first if needed). The old pendants then take the colors of the new
//!   pendant and of the isolated edge, the edges to merged neighbors take
//!   the color of their merged edge, and the contracted edge takes the
//!   merged vertex's non-pendant color.

use super::{check_feasible, seen, ColoringError, EdgeColoring};
use crate::graph::{EdgeId, Graph};
use crate::normalize::{Replacement, RewriteLog, RewriteStep, StepMaps};

const UNSET: usize = usize::MAX;

pub fn lift_coloring(log: &RewriteLog, chi: &EdgeColoring) -> Result<EdgeColoring, ColoringError> {
    let graphs = log
        .replay()
        .map_err(|e| ColoringError::LogMismatch(e.to_string()))?;
    check_feasible(&log.result, chi)?;
    let mut colors = chi.colors().to_vec();
    for (i, entry) in log.entries.iter().enumerate().rev() {
        let raw = lift_step(&graphs[i], &graphs[i + 1], &entry.step, &entry.maps, colors)?;
        colors = EdgeColoring::from_raw(raw).colors().to_vec();
    }
    Ok(EdgeColoring::from_raw(colors))
}

fn edge(g: &Graph, a: usize, b: usize) -> Result<EdgeId, ColoringError> {
    g.edge_between(a, b)
        .ok_or_else(|| ColoringError::LogMismatch(format!("missing edge {a} {b}")))
}

fn lift_step(
    pre: &Graph,
    post: &Graph,
    step: &RewriteStep,
    maps: &StepMaps,
    mut colors: Vec<usize>,
) -> Result<Vec<usize>, ColoringError> {
    let image = maps.vertex_image(pre.vertex_count());
    let at = |v: usize| {
        image[v].ok_or_else(|| ColoringError::LogMismatch(format!("vertex {v} has no image")))
    };

    if let RewriteStep::Mod5Contract {
        merged,
        new_pendant,
        ..
    } = *step
    {
        let p = edge(post, merged, new_pendant)?;
        let a = colors[p];
        if colors.iter().filter(|&&c| c == a).count() > 1 {
            match seen(post, &colors, merged).into_iter().find(|&c| c != a) {
                None => colors[p] = colors.iter().max().unwrap() + 1,
                Some(b) => {
                    for c in colors.iter_mut() {
                        if *c == b {
                            *c = a;
                        }
                    }
                    colors[p] = b;
                }
            }
        }
    }

    let mut out = vec![UNSET; pre.edge_count()];
    for (new, origin) in maps.edge_origin.iter().enumerate() {
        if let Some(old) = *origin {
            out[old] = colors[new];
        }
    }

    match step {
        RewriteStep::Mod1Leaf { hub, removed, .. } => {
            let smallest = seen(post, &colors, at(*hub)?)[0];
            out[edge(pre, *hub, *removed)?] = smallest;
        }
        RewriteStep::Mod2Split { .. } => {}
        RewriteStep::Mod3Cactus {
            triangles,
            replacements,
            ..
        } => {
            let edge_image = maps.edge_image(pre.edge_count());
            for (t, r) in triangles.iter().zip(replacements) {
                let c = match *r {
                    Replacement::Fresh { x, y } => colors[edge(post, x, y)?],
                    Replacement::Retained(e) => colors[edge_image[e].ok_or_else(|| {
                        ColoringError::LogMismatch(format!("retained edge {e} vanished"))
                    })?],
                };
                for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    out[edge(pre, a, b)?] = c;
                }
            }
        }
        RewriteStep::Mod4Bridge { sides, .. } => {
            for s in sides.iter().flatten() {
                let c = colors[edge(post, at(s.joined[0])?, at(s.joined[1])?)?];
                out[s.removed[0]] = c;
                out[s.removed[1]] = c;
            }
        }
        RewriteStep::Mod5Contract {
            pair,
            pendants,
            merged,
            new_pendant,
            isolated,
            neighbors,
        } => {
            let pc = colors[edge(post, *merged, *new_pendant)?];
            out[edge(pre, pair[0], pendants[0])?] = pc;
            out[edge(pre, pair[1], pendants[1])?] = colors[edge(post, isolated[0], isolated[1])?];
            for m in neighbors {
                let c = colors[edge(post, *merged, at(m.vertex)?)?];
                for e in [m.via_first, m.via_second].into_iter().flatten() {
                    out[e] = c;
                }
            }
            let other = seen(post, &colors, *merged).into_iter().find(|&c| c != pc);
            out[edge(pre, pair[0], pair[1])?] =
                other.unwrap_or_else(|| colors.iter().max().unwrap() + 1);
        }
    }

    if let Some(e) = out.iter().position(|&c| c == UNSET) {
        return Err(ColoringError::LogMismatch(format!("edge {e} left uncolored")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::color_components;
    use crate::graph::{gen_complete, gen_cycle};
    use crate::normalize::{normalize, Strategy};

    #[test]
    fn identity_log_keeps_coloring() {
        let g = gen_cycle(5).unwrap();
        let log = RewriteLog::identity(&g);
        let chi = EdgeColoring::from_raw(vec![0, 1, 2, 3, 3]);
        assert_eq!(lift_coloring(&log, &chi).unwrap(), chi);
    }

    #[test]
    fn k4_and_c3_pipelines() {
        for g in [gen_complete(4).unwrap(), gen_cycle(3).unwrap()] {
            let (h, log, _) = normalize(&g, Strategy::General).unwrap();
            let chi = color_components(&h);
            assert_eq!(chi.count(), 3);
            let lifted = lift_coloring(&log, &chi).unwrap();
            check_feasible(&g, &lifted).unwrap();
            assert_eq!(lifted.count(), 3);
        }
    }

    #[test]
    fn infeasible_or_mismatched_input_is_rejected() {
        let g = gen_complete(4).unwrap();
        let (_, log, _) = normalize(&g, Strategy::General).unwrap();
        assert!(matches!(
            lift_coloring(&log, &EdgeColoring::monochromatic(2)),
            Err(ColoringError::NotTotal { .. })
        ));
        let mut broken = log.clone();
        broken.result = gen_cycle(3).unwrap();
        assert!(matches!(
            lift_coloring(&broken, &EdgeColoring::monochromatic(3)),
            Err(ColoringError::LogMismatch(_))
        ));
    }
}
