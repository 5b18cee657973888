//! Graph and decomposition file formats.
//!
//! Graph documents are line oriented; `;` also ends a statement and `#`
//! starts a comment.
//!
//! ```text
//! n=4
//! 0 1
//! 1 2
//! w 0 1/3
//! ```
//!
//! The header fixes the vertex set `0..n`. Weight lines are optional, but
//! when present they must cover every vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::decompose::TreeDecomposition;
use crate::error::{input_err, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::weight::{format_rational, parse_rational, Rational, WeightFunction};

#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub weights: Option<WeightFunction>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn statements(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        line.split(';').map(move |s| (i + 1, s.trim())).filter(|(_, s)| !s.is_empty())
    })
}

fn parse_id(tok: &str, n: u32, line: usize) -> Result<Vertex> {
    let v: Vertex = tok.parse().map_err(|_| perr(line, format!("bad vertex id {tok:?}")))?;
    if v >= n {
        return Err(perr(line, format!("vertex {v} out of range for n={n}")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let mut n = None;
    let mut edges = BTreeSet::new();
    let mut weights = BTreeMap::new();
    for (line, stmt) in statements(text) {
        let toks: Vec<&str> = stmt.split_whitespace().collect();
        let Some(n) = n else {
            let count = stmt
                .strip_prefix("n=")
                .or_else(|| stmt.strip_prefix("n ="))
                .ok_or_else(|| perr(line, "expected header n=<count>"))?;
            n = Some(count.trim().parse::<u32>().map_err(|_| perr(line, format!("bad vertex count {count:?}")))?);
            continue;
        };
        match toks.as_slice() {
            ["w", v, p] => {
                let v = parse_id(v, n, line)?;
                let r = parse_rational(p).map_err(|e| perr(line, e.to_string()))?;
                if r < Rational::default() {
                    return Err(perr(line, format!("negative weight on vertex {v}")));
                }
                if weights.insert(v, r).is_some() {
                    return Err(perr(line, format!("second weight for vertex {v}")));
                }
            }
            [a, b] => {
                let (a, b) = (parse_id(a, n, line)?, parse_id(b, n, line)?);
                if a == b {
                    return Err(perr(line, format!("self-loop at {a}")));
                }
                if !edges.insert((a.min(b), a.max(b))) {
                    return Err(perr(line, format!("duplicate edge {a} {b}")));
                }
            }
            _ => return Err(perr(line, format!("cannot read {stmt:?}"))),
        }
    }
    let n = n.ok_or_else(|| perr(1, "missing header n=<count>"))?;
    let graph = Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())?;
    let weights = if weights.is_empty() {
        None
    } else {
        if let Some(v) = (0..n).find(|v| !weights.contains_key(v)) {
            return Err(input_err!("weights given but vertex {v} has none"));
        }
        Some(WeightFunction::new(weights)?)
    };
    Ok(GraphDocument { graph, weights })
}

/// Canonical text form. Vertex ids must be exactly `0..n`.
pub fn emit_graph(g: &Graph, weights: Option<&WeightFunction>) -> Result<String> {
    let n = g.len() as u32;
    if g.vertices().enumerate().any(|(i, v)| v != i as u32) {
        return Err(input_err!("vertex ids must be 0..{n} to be written"));
    }
    let mut out = format!("n={n}\n");
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(w) = weights {
        for v in g.vertices() {
            let _ = writeln!(out, "w {v} {}", format_rational(&w.get(v)));
        }
    }
    Ok(out)
}

/// DIMACS `p edge` documents with 1-based ids. Repeated edges are merged.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<(u32, Graph)> = None;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", _, n, _] => {
                if g.is_some() {
                    return Err(perr(line_no, "second problem line"));
                }
                let n: u32 = n.parse().map_err(|_| perr(line_no, format!("bad vertex count {n:?}")))?;
                g = Some((n, Graph::with_vertices(0..n)));
            }
            ["e", a, b] => {
                let (n, g) = g.as_mut().ok_or_else(|| perr(line_no, "edge before problem line"))?;
                let id = |t: &str| -> Result<Vertex> {
                    match t.parse::<u32>() {
                        Ok(v) if (1..=*n).contains(&v) => Ok(v - 1),
                        _ => Err(perr(line_no, format!("bad vertex {t:?}"))),
                    }
                };
                let (a, b) = (id(a)?, id(b)?);
                if a == b {
                    return Err(perr(line_no, format!("self-loop at {}", a + 1)));
                }
                g.add_edge(a, b)?;
            }
            _ => return Err(perr(line_no, format!("cannot read {line:?}"))),
        }
    }
    g.map(|(_, g)| g).ok_or_else(|| perr(1, "missing problem line"))
}

/// DIMACS when the first meaningful line is a `c` or `p` line, otherwise the
/// native format.
pub fn parse_any(text: &str) -> Result<GraphDocument> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => {
            Ok(GraphDocument { graph: parse_dimacs(text)?, weights: None })
        }
        _ => parse_graph(text),
    }
}

pub fn emit_td(td: &TreeDecomposition) -> String {
    serde_json::to_string(td).expect("plain data")
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    serde_json::from_str(text).map_err(|e| perr(e.line(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::rational;

    #[test]
    fn parse_examples() {
        let doc = parse_graph("n=3; 0 1; 1 2").unwrap();
        assert_eq!(doc.graph, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(doc.weights.is_none());
        assert!(matches!(parse_graph("n=3\n0 1\n1 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("n=3\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("n=3\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_graph("n=2\nw 0 1/2\n").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "n=4\n0 1\n0 3\n1 2\nw 0 1/2\nw 1 0\nw 2 3\nw 3 7/4\n";
        let doc = parse_graph(text).unwrap();
        assert_eq!(doc.weights.as_ref().unwrap().get(3), rational(7, 4));
        assert_eq!(emit_graph(&doc.graph, doc.weights.as_ref()).unwrap(), text);
        let messy = "# comment\nn = 4\n3 0 ; 1 0\n2 1  # trailing\nw 0 2/4;w 1 0;w 2 3;w 3 7/4";
        let doc2 = parse_graph(messy).unwrap();
        assert_eq!(emit_graph(&doc2.graph, doc2.weights.as_ref()).unwrap(), text);
    }

    #[test]
    fn dimacs() {
        let g = parse_any("c tiny\np edge 3 3\ne 1 2\ne 2 3\ne 2 1\n").unwrap().graph;
        assert_eq!(g, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
    }
}
