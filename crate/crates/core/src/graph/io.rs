//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are skipped anywhere. Edge
//! identities follow input order.

use std::fmt::Write;

use super::{Graph, GraphError, Vertex};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        reason: "missing header \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    let mut g = Graph::new(n);

    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        if g.edge_count() == m {
            return Err(GraphError::Malformed {
                line,
                reason: format!("more than the declared {m} edges"),
            });
        }
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::OutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if g.add_edge(u, v).is_none() {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
    }
    if g.edge_count() != m {
        return Err(GraphError::Malformed {
            line: text.lines().count().max(1),
            reason: format!("expected {m} edges, found {}", g.edge_count()),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<[Vertex; 2], GraphError> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Malformed {
            line,
            reason: format!("expected two integers, got {:?}", l),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| GraphError::Malformed {
            line,
            reason: format!("not a non-negative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

/// Writes `g` in the format read by [`parse_graph`], edges in identity order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}
