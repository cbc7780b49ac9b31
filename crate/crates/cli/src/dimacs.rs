//! DIMACS `.col` input and the coloring output format.

use std::fmt::Write;

use artemis_core::{Coloring, Graph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A parsed graph plus the warnings the format allows.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub declared_m: usize,
    pub duplicate_edges: usize,
}

impl ParsedGraph {
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.duplicate_edges > 0 {
            out.push(format!(
                "{} duplicate edge(s) ignored",
                self.duplicate_edges
            ));
        }
        if self.declared_m != self.graph.m() {
            out.push(format!(
                "header declares {} edges, found {}",
                self.declared_m,
                self.graph.m()
            ));
        }
        out
    }
}

/// Parses `c` comments, one `p edge N M` header and `e U V` lines with
/// 1-based endpoints.
pub fn parse_dimacs(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| ParseError { line, message };
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("second problem line".into()));
                }
                let format = fields.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(err(format!("unsupported problem format {format:?}")));
                }
                let n = number(fields.next(), line)?;
                let m = number(fields.next(), line)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) =
                    header.ok_or_else(|| err("edge line before the problem line".into()))?;
                let u = number(fields.next(), line)?;
                let v = number(fields.next(), line)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(format!("endpoint {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    let (n, declared_m) = header.ok_or(ParseError {
        line: text.lines().count().max(1),
        message: "missing problem line".into(),
    })?;
    let graph = Graph::new(n, &edges).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })?;
    Ok(ParsedGraph {
        duplicate_edges: edges.len() - graph.m(),
        declared_m,
        graph,
    })
}

fn number(field: Option<&str>, line: usize) -> Result<usize, ParseError> {
    let field = field.ok_or(ParseError {
        line,
        message: "missing number".into(),
    })?;
    field.parse().map_err(|_| ParseError {
        line,
        message: format!("not a number: {field:?}"),
    })
}

/// DIMACS text for a graph, edges in lexicographic order.
pub fn write_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.n(), graph.m());
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

/// `s K` followed by `v VERTEX COLOR` per vertex, both 1-based.
pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = format!("s {}\n", coloring.num_colors);
    for (v, c) in coloring.color.iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, c + 1).expect("writing to a String");
    }
    out
}
