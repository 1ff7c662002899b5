//! Line-oriented graph files:
//!
//! ```text
//! # comment
//! p mwis <n> <m>
//! w <v> <decimal>
//! e <u> <v>
//! ```
//!
//! Vertices are 1-indexed in files. Missing weights default to 1.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, VertexSet, Weight, WeightParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("missing `p mwis <n> <m>` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate weight for vertex {0}")]
    DuplicateWeight(usize),
    #[error("negative weight `{0}`")]
    NegativeWeight(String),
    #[error("bad weight: {0}")]
    BadWeight(WeightParseError),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("input is not valid UTF-8")]
    Encoding,
}

struct Header {
    n: usize,
    m: usize,
}

pub fn parse_graph(bytes: &[u8]) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError { line: 0, kind: ParseErrorKind::Encoding })?;
    let mut header: Option<Header> = None;
    let mut adj: Vec<VertexSet> = Vec::new();
    let mut weights: Vec<Option<Weight>> = Vec::new();
    let mut edge_count = 0usize;
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                if fields.len() != 4 || fields[1] != "mwis" {
                    return Err(err(ParseErrorKind::MalformedHeader(content.to_string())));
                }
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(ParseErrorKind::MalformedHeader(content.to_string())))
                };
                let n = parse(fields[2])?;
                let m = parse(fields[3])?;
                adj = vec![VertexSet::new(n); n];
                weights = vec![None; n];
                header = Some(Header { n, m });
            }
            "e" | "w" => {
                let h = header.as_ref().ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                if fields.len() != 3 {
                    return Err(err(ParseErrorKind::Malformed(content.to_string())));
                }
                let index = |s: &str| -> Result<usize, ParseError> {
                    let idx: usize = s
                        .parse()
                        .map_err(|_| err(ParseErrorKind::Malformed(content.to_string())))?;
                    if idx == 0 || idx > h.n {
                        return Err(err(ParseErrorKind::IndexOutOfRange { index: idx, n: h.n }));
                    }
                    Ok(idx - 1)
                };
                if fields[0] == "e" {
                    let u = index(fields[1])?;
                    let v = index(fields[2])?;
                    if u == v {
                        return Err(err(ParseErrorKind::SelfLoop(u + 1)));
                    }
                    if !adj[u].insert(v) {
                        return Err(err(ParseErrorKind::DuplicateEdge(u.min(v) + 1, u.max(v) + 1)));
                    }
                    adj[v].insert(u);
                    edge_count += 1;
                } else {
                    let v = index(fields[1])?;
                    let w = fields[2].parse::<Weight>().map_err(|e| match e {
                        WeightParseError::Negative(s) => err(ParseErrorKind::NegativeWeight(s)),
                        other => err(ParseErrorKind::BadWeight(other)),
                    })?;
                    if weights[v].replace(w).is_some() {
                        return Err(err(ParseErrorKind::DuplicateWeight(v + 1)));
                    }
                }
            }
            _ => return Err(err(ParseErrorKind::Malformed(content.to_string()))),
        }
    }

    let h = header.ok_or(ParseError { line: last_line.max(1), kind: ParseErrorKind::MissingHeader })?;
    if edge_count != h.m {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::EdgeCount { declared: h.m, found: edge_count },
        });
    }
    let mut edges = Vec::with_capacity(edge_count);
    for (u, nb) in adj.iter().enumerate() {
        edges.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
    }
    let weights = weights.into_iter().map(|w| w.unwrap_or(Weight::ONE)).collect();
    Ok(Graph::with_weights(h.n, &edges, weights).expect("validated while parsing"))
}

pub fn emit_graph(g: &Graph) -> String {
    emit_graph_with_comments(g, &[])
}

/// Emits the header, every non-unit weight, then the sorted edge list.
pub fn emit_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let _ = writeln!(out, "p mwis {} {}", g.n(), g.m());
    for v in 0..g.n() {
        if g.weight(v) != Weight::ONE {
            let _ = writeln!(out, "w {} {}", v + 1, g.weight(v));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
