//! The CGE text format for colored graphs, and DOT export.
//!
//! A CGE file is line oriented: lines starting with `#` are comments, the
//! first data line is `n m`, and each of the following `m` data lines is
//! `u v c` with `0 <= u < v < n` and `c` a non-negative color id or `-` for
//! an uncolored edge. The writer is canonical: no comments, edges in
//! lexicographic order, one space between fields, `\n` line ends. Identical
//! graphs serialize to identical bytes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{ColoredGraph, ColorId, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CgeError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: bad header, expected `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: expected `u v c`")]
    BadEdgeLine { line: usize },
    #[error("line {line}: edge {u} {v} is not normalized or out of range (n = {n})")]
    BadEdge { line: usize, u: usize, v: usize, n: usize },
    #[error("line {line}: bad color field {field:?}")]
    BadColor { line: usize, field: String },
    #[error("expected {expected} edges, found {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical serialization.
pub fn write_cge(g: &ColoredGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        match g.color_by_index(i) {
            Some(c) => {
                let _ = writeln!(out, "{} {} {}", e.u(), e.v(), c);
            }
            None => {
                let _ = writeln!(out, "{} {} -", e.u(), e.v());
            }
        }
    }
    out
}

pub fn parse_cge(text: &str) -> Result<ColoredGraph, CgeError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = data_lines.next().ok_or(CgeError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(CgeError::BadHeader { line: line_no })?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(CgeError::BadHeader { line: line_no })?;
    if parts.next().is_some() {
        return Err(CgeError::BadHeader { line: line_no });
    }

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::with_capacity(m);
    for (line, l) in data_lines {
        let mut fields = l.split_whitespace();
        let (u, v, c) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), Some(c), None) => (u, v, c),
            _ => return Err(CgeError::BadEdgeLine { line }),
        };
        let u: usize = u.parse().map_err(|_| CgeError::BadEdgeLine { line })?;
        let v: usize = v.parse().map_err(|_| CgeError::BadEdgeLine { line })?;
        if u >= v || v >= n {
            return Err(CgeError::BadEdge { line, u, v, n });
        }
        let color = if c == "-" {
            None
        } else {
            Some(c.parse::<ColorId>().map_err(|_| CgeError::BadColor {
                line,
                field: c.to_string(),
            })?)
        };
        trips.push((u, v, color));
    }
    if trips.len() != m {
        return Err(CgeError::EdgeCountMismatch {
            expected: m,
            got: trips.len(),
        });
    }
    Ok(ColoredGraph::from_colored_edges(n, &trips)?)
}

/// DOT export with the color id as edge label (`-` when uncolored).
pub fn write_dot(g: &ColoredGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "    {v};");
    }
    for (i, e) in g.edges().iter().enumerate() {
        let label = match g.color_by_index(i) {
            Some(c) => c.to_string(),
            None => "-".to_string(),
        };
        let _ = writeln!(out, "    {} -- {} [label=\"{}\"];", e.u(), e.v(), label);
    }
    out.push_str("}\n");
    out
}
