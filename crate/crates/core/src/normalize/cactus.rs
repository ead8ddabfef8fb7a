//! Simple triangular cacti.
//!
//! Detection follows the polynomial procedure: keep the triangles whose
//! vertices all have degree 3 or 4, repeatedly discard any triangle with a
//! degree-4 vertex that has no compatible partner there, then grow each
//! surviving seed (in lexicographic order) by the triangles it forces. A
//! degree-4 cactus vertex lies in exactly two triangles, and the only
//! candidate partner of `{v, a, b}` at `v` is `{v, c, d}` where `c, d` are the
//! remaining neighbors of `v`.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{list_triangles, EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cactus {
    /// Triangles as increasing vertex triples.
    pub triangles: Vec<[Vertex; 3]>,
    /// Shared vertices as `(i, j, v)`: triangles `i < j` meet at `v`.
    pub joints: Vec<(usize, usize, Vertex)>,
    /// Host edges outside the cactus touching a cactus vertex, by identity.
    pub needles: Vec<EdgeId>,
}

impl Cactus {
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.triangles.iter().flatten().copied().collect()
    }

    /// Identities of the three edges of each triangle, in triangle order.
    pub fn triangle_edges(&self, g: &Graph) -> Vec<[EdgeId; 3]> {
        self.triangles
            .iter()
            .map(|&[a, b, c]| {
                let e = |x, y| g.edge_between(x, y).expect("triangle edge");
                [e(a, b), e(a, c), e(b, c)]
            })
            .collect()
    }

    /// Builds the joint list and needle list for a triangle set. No checks.
    pub fn from_triangles(g: &Graph, mut triangles: Vec<[Vertex; 3]>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        triangles.sort_unstable();
        let mut joints = Vec::new();
        for i in 0..triangles.len() {
            for j in i + 1..triangles.len() {
                for &v in &triangles[i] {
                    if triangles[j].contains(&v) {
                        joints.push((i, j, v));
                    }
                }
            }
        }
        let mut cactus = Cactus {
            triangles,
            joints,
            needles: Vec::new(),
        };
        let inside: BTreeSet<EdgeId> = cactus.triangle_edges(g).into_iter().flatten().collect();
        let needles: BTreeSet<EdgeId> = cactus
            .vertices()
            .into_iter()
            .flat_map(|v| g.incident(v).iter().map(|&(_, e)| e))
            .filter(|e| !inside.contains(e))
            .collect();
        cactus.needles = needles.into_iter().collect();
        cactus
    }
}

/// Checks every simple-cactus condition of `c` against `g`.
pub fn validate_cactus(g: &Graph, c: &Cactus) -> Result<(), String> {
    if c.triangles.is_empty() {
        return Err("cactus has no triangles".into());
    }
    let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
    for t in &c.triangles {
        if t[0] >= t[1] || t[1] >= t[2] || t[2] >= g.vertex_count() {
            return Err(format!("malformed triangle {t:?}"));
        }
        if !(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) {
            return Err(format!("{t:?} is not a triangle of the graph"));
        }
        for &v in t {
            *count.entry(v).or_default() += 1;
        }
    }
    if Cactus::from_triangles(g, c.triangles.clone()) != *c {
        return Err("joint or needle lists do not match the triangles".into());
    }
    // Triangles sharing two vertices share an edge, which also shows up as
    // two joints for the same pair.
    let mut pairs = BTreeSet::new();
    for &(i, j, _) in &c.joints {
        if !pairs.insert((i, j)) {
            return Err(format!("triangles {i} and {j} share an edge"));
        }
    }
    if let Some((&v, _)) = count.iter().find(|&(_, &k)| k > 2) {
        return Err(format!("vertex {v} lies in more than two triangles"));
    }
    if c.joints.len() + 1 != c.triangles.len() {
        return Err("triangles do not form a tree".into());
    }
    let mut parent: Vec<usize> = (0..c.triangles.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j, _) in &c.joints {
        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
        if ri == rj {
            return Err("triangles close a cycle".into());
        }
        parent[ri] = rj;
    }
    for (&v, &k) in &count {
        let d = g.degree(v);
        if d != 3 && d != 4 {
            return Err(format!("cactus vertex {v} has degree {d}"));
        }
        if d > 2 * k + 1 {
            return Err(format!("cactus vertex {v} has {} outside edges", d - 2 * k));
        }
    }
    Ok(())
}

pub fn find_simple_cactus(g: &Graph) -> Option<Cactus> {
    let good_degree = |v: Vertex| matches!(g.degree(v), 3 | 4);
    let candidates: Vec<[Vertex; 3]> = list_triangles(g)
        .into_iter()
        .filter(|t| t.iter().all(|&v| good_degree(v)))
        .collect();
    let mut alive: BTreeSet<[Vertex; 3]> = candidates.iter().copied().collect();

    // The unique triangle that could meet `t` at its degree-4 vertex `v`.
    let partner = |t: &[Vertex; 3], v: Vertex| -> Option<[Vertex; 3]> {
        let rest: Vec<Vertex> = g.neighbors(v).filter(|w| !t.contains(w)).collect();
        if rest.len() != 2 || !g.has_edge(rest[0], rest[1]) {
            return None;
        }
        let mut p = [v, rest[0], rest[1]];
        p.sort_unstable();
        Some(p)
    };

    loop {
        let doomed: Vec<[Vertex; 3]> = alive
            .iter()
            .filter(|t| {
                t.iter().any(|&v| {
                    g.degree(v) == 4 && partner(t, v).is_none_or(|p| !alive.contains(&p))
                })
            })
            .copied()
            .collect();
        if doomed.is_empty() {
            break;
        }
        for t in doomed {
            alive.remove(&t);
        }
    }

    let shared = |a: &[Vertex; 3], b: &[Vertex; 3]| a.iter().filter(|v| b.contains(v)).count();
    'seeds: for &seed in &alive {
        let mut set = vec![seed];
        let mut next = 0;
        while next < set.len() {
            let t = set[next];
            next += 1;
            for &v in &t {
                if g.degree(v) != 4 {
                    continue;
                }
                let p = partner(&t, v).expect("surviving triangles have partners");
                if set.contains(&p) {
                    continue;
                }
                // The forced triangle may only touch the cactus through `t`;
                // any other contact closes a cycle of triangles.
                if set.iter().any(|s| *s != t && shared(s, &p) > 0) {
                    continue 'seeds;
                }
                set.push(p);
            }
        }
        let cactus = Cactus::from_triangles(g, set);
        if validate_cactus(g, &cactus).is_ok() {
            return Some(cactus);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cactus_chain, gen_complete, gen_petersen};

    #[test]
    fn k4_has_a_single_triangle_cactus() {
        let g = gen_complete(4).unwrap();
        let c = find_simple_cactus(&g).unwrap();
        assert_eq!(c.triangles, vec![[0, 1, 2]]);
        assert_eq!(c.needles.len(), 3);
        assert!(c.needles.iter().all(|&e| g.edge(e).has(3)));
        assert!(c.joints.is_empty());
    }

    #[test]
    fn chain_is_found_whole() {
        for k in 1..=6 {
            let g = gen_cactus_chain(k).unwrap();
            let c = find_simple_cactus(&g).unwrap();
            assert_eq!(c.triangles.len(), k);
            assert_eq!(c.joints.len(), k - 1);
            assert_eq!(c.needles.len(), k + 2);
            validate_cactus(&g, &c).unwrap();
        }
    }

    #[test]
    fn triangle_free_and_dense_graphs() {
        assert!(find_simple_cactus(&gen_petersen()).is_none());
        // Degree 4 everywhere but every vertex lies in six triangles.
        assert!(find_simple_cactus(&gen_complete(5).unwrap()).is_none());
    }

    #[test]
    fn bare_triangle_is_not_simple() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(find_simple_cactus(&c3).is_none());
    }

    #[test]
    fn ring_of_triangles_is_rejected() {
        // Four triangles around a 4-cycle of shared vertices 0..4; apexes
        // 4..8 carry needles to 8..12.
        let mut edges = Vec::new();
        for i in 0..4 {
            let (a, b, t) = (i, (i + 1) % 4, 4 + i);
            edges.extend([(a, b), (a, t), (b, t), (t, t + 4)]);
        }
        let g = Graph::from_edges(12, &edges);
        assert!(find_simple_cactus(&g).is_none());
    }

    #[test]
    fn validation_flags_broken_inputs() {
        let g = gen_cactus_chain(2).unwrap();
        let mut c = find_simple_cactus(&g).unwrap();
        c.needles.pop();
        assert!(validate_cactus(&g, &c).is_err());
        let k4 = gen_complete(4).unwrap();
        let two = Cactus::from_triangles(&k4, vec![[0, 1, 2], [0, 1, 3]]);
        assert!(validate_cactus(&k4, &two).is_err());
    }
}
