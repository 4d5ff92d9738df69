//! Plain-text instance files.
//!
//! ```text
//! # comment
//! p rp <n> <m> <s> <t> <M>
//! e <u> <v> <w>
//! ```
//!
//! Ids are 0-based, integers decimal and whitespace-separated, and exactly
//! `m` edge lines follow the header. Parallel edges merge to the minimum
//! weight when the graph is built.

use std::fmt::Write as _;

use rpaths_core::{Graph, GraphError};
use thiserror::Error;

/// A graph with its designated source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed edge record: {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("line {line}: node id {id} out of range for n = {n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: weight {w} outside [-{bound}, {bound}]")]
    WeightOutOfRange { line: usize, w: i64, bound: i64 },
    #[error("line {line}: self-loop at node {node}")]
    SelfLoop { line: usize, node: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

struct Header {
    n: usize,
    m: usize,
    s: usize,
    t: usize,
    bound: i64,
}

fn fields<const K: usize>(rest: &[&str], line: usize, header: bool) -> Result<[i64; K], FormatError> {
    let fail = |reason: String| {
        if header {
            FormatError::MalformedHeader { line, reason }
        } else {
            FormatError::MalformedEdge { line, reason }
        }
    };
    if rest.len() != K {
        return Err(fail(format!("expected {K} integers, found {}", rest.len())));
    }
    let mut out = [0i64; K];
    for (slot, tok) in out.iter_mut().zip(rest) {
        *slot = tok.parse().map_err(|_| fail(format!("not an integer: {tok:?}")))?;
    }
    Ok(out)
}

fn parse_header(rest: &[&str], line: usize) -> Result<Header, FormatError> {
    if rest.first() != Some(&"rp") {
        return Err(FormatError::MalformedHeader { line, reason: "expected problem tag `rp`".into() });
    }
    let [n, m, s, t, bound] = fields::<5>(&rest[1..], line, true)?;
    let bad = |reason: &str| FormatError::MalformedHeader { line, reason: reason.into() };
    if n < 1 || m < 0 || s < 0 || t < 0 {
        return Err(bad("n must be positive and m, s, t nonnegative"));
    }
    if bound < 1 {
        return Err(bad("weight bound M must be at least 1"));
    }
    let n = n as usize;
    for id in [s as usize, t as usize] {
        if id >= n {
            return Err(FormatError::IdOutOfRange { line, id, n });
        }
    }
    Ok(Header { n, m: m as usize, s: s as usize, t: t as usize, bound })
}

/// Parses an instance file.
pub fn parse_graph(text: &str) -> Result<Instance, FormatError> {
    let mut header: Option<Header> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&tag, rest)) = tokens.split_first() else {
            continue;
        };
        match (tag, &header) {
            ("p", None) => header = Some(parse_header(rest, line)?),
            ("p", Some(_)) => {
                return Err(FormatError::MalformedHeader { line, reason: "second header line".into() })
            }
            ("e", None) => {
                return Err(FormatError::MalformedHeader { line, reason: "edge before header".into() })
            }
            ("e", Some(h)) => {
                let [u, v, w] = fields::<3>(rest, line, false)?;
                let mut ids = [0usize; 2];
                for (slot, id) in ids.iter_mut().zip([u, v]) {
                    if id < 0 || id as usize >= h.n {
                        return Err(FormatError::IdOutOfRange { line, id: id.max(0) as usize, n: h.n });
                    }
                    *slot = id as usize;
                }
                if ids[0] == ids[1] {
                    return Err(FormatError::SelfLoop { line, node: ids[0] });
                }
                if w.abs() > h.bound {
                    return Err(FormatError::WeightOutOfRange { line, w, bound: h.bound });
                }
                edges.push((ids[0], ids[1], w));
            }
            (other, _) => {
                return Err(FormatError::MalformedEdge { line, reason: format!("unknown record {other:?}") })
            }
        }
    }
    let h = header.ok_or(FormatError::MalformedHeader { line: 0, reason: "missing header".into() })?;
    if edges.len() != h.m {
        return Err(FormatError::EdgeCount { expected: h.m, found: edges.len() });
    }
    let graph = Graph::from_edges(h.n, h.bound, edges)?;
    Ok(Instance { graph, s: h.s, t: h.t })
}

/// Serializes an instance; edges come out merged and sorted.
pub fn write_graph(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("p rp {} {} {} {} {}\n", g.n(), g.edge_count(), inst.s, inst.t, g.weight_bound());
    for (u, v, w) in g.edges() {
        writeln!(out, "e {u} {v} {w}").expect("writing to a String cannot fail");
    }
    out
}
