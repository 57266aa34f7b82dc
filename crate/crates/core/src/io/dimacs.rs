//! DIMACS `sp` text format, extended to allow negative arc weights, and the
//! line protocol for solver results.
//!
//! Vertices and arcs are 1-based on the wire and 0-based in memory. Arc `i`
//! of a file is edge `i - 1` of the parsed graph.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, VertexId, Weight};
use crate::solver::{SsspOutcome, SsspResult};
use crate::sssp::ShortestPathTree;

/// A parsed instance and its optional `s <v>` source line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimacsInstance {
    pub graph: Graph,
    pub source: Option<VertexId>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<VertexId> {
    let v: usize = field(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(t) => Err(parse_err(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

/// Parses `c` comments, one `p sp <n> <m>` line, `a <u> <v> <w>` arcs and
/// at most one `s <v>` line.
pub fn parse_dimacs(text: &str) -> Result<DimacsInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut source = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                if toks.next() != Some("sp") {
                    return Err(parse_err(line, "expected `p sp <n> <m>`"));
                }
                let n = field(toks.next(), line, "vertex count")?;
                let m = field(toks.next(), line, "arc count")?;
                no_trailing(toks, line)?;
                edges.reserve(m);
                header = Some((n, m));
            }
            "a" => {
                let (n, m) = header.ok_or_else(|| parse_err(line, "arc before problem line"))?;
                let u = vertex(toks.next(), line, n)?;
                let v = vertex(toks.next(), line, n)?;
                let w: Weight = field(toks.next(), line, "weight")?;
                no_trailing(toks, line)?;
                if edges.len() == m {
                    return Err(parse_err(line, format!("more than {m} arcs")));
                }
                edges.push(Edge::new(u, v, w));
            }
            "s" => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "source before problem line"))?;
                if source.is_some() {
                    return Err(parse_err(line, "duplicate source line"));
                }
                source = Some(vertex(toks.next(), line, n)?);
                no_trailing(toks, line)?;
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("declared {m} arcs, found {}", edges.len())));
    }
    Ok(DimacsInstance { graph: Graph::new(n, edges)?, source })
}

pub fn write_dimacs(g: &Graph) -> String {
    write_dimacs_with_source(g, None)
}

pub fn write_dimacs_with_source(g: &Graph, source: Option<VertexId>) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(out, "p sp {} {}", g.n(), g.m());
    if let Some(s) = source {
        let _ = writeln!(out, "s {}", s + 1);
    }
    for e in g.edges() {
        let _ = writeln!(out, "a {} {} {}", e.src + 1, e.dst + 1, e.weight);
    }
    out
}

/// Trees as `v <id> <dist|inf> <parent-arc|->` per vertex; cycles as
/// `cycle <v1> ... <vk> weight <w>`.
pub fn write_result(res: &SsspResult) -> String {
    write_outcome(&res.outcome)
}

pub fn write_outcome(outcome: &SsspOutcome) -> String {
    let mut out = String::new();
    match outcome {
        SsspOutcome::Tree(t) => {
            for v in 0..t.n() {
                let _ = write!(out, "v {} ", v + 1);
                match t.dist(v) {
                    Some(d) => {
                        let _ = write!(out, "{d}");
                    }
                    None => out.push_str("inf"),
                }
                match t.parent(v) {
                    Some(e) => {
                        let _ = writeln!(out, " {}", e + 1);
                    }
                    None => out.push_str(" -\n"),
                }
            }
        }
        SsspOutcome::Cycle(c) => {
            out.push_str("cycle");
            for &v in &c.vertices {
                let _ = write!(out, " {}", v + 1);
            }
            let _ = writeln!(out, " weight {}", c.weight);
        }
    }
    out
}

/// A result read back from [`write_result`] text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedResult {
    Tree(ShortestPathTree),
    /// Cycle vertices in order, and the claimed weight.
    Cycle { vertices: Vec<VertexId>, weight: Weight },
}

pub fn parse_result(text: &str, n: usize) -> Result<ParsedResult> {
    let mut dist: Vec<Option<Option<Weight>>> = vec![None; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut source = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("cycle") => {
                let rest: Vec<&str> = toks.collect();
                let k = rest.len();
                if k < 3 || rest[k - 2] != "weight" {
                    return Err(parse_err(line, "expected `cycle <v1> ... <vk> weight <w>`"));
                }
                let weight = field(Some(rest[k - 1]), line, "weight")?;
                let vertices = rest[..k - 2]
                    .iter()
                    .map(|t| vertex(Some(t), line, n))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(ParsedResult::Cycle { vertices, weight });
            }
            Some("v") => {
                let v = vertex(toks.next(), line, n)?;
                let d = match toks.next() {
                    Some("inf") => None,
                    t => Some(field::<Weight>(t, line, "distance")?),
                };
                let p = match toks.next() {
                    Some("-") => None,
                    t => Some(field::<usize>(t, line, "parent arc")?.checked_sub(1).ok_or_else(|| parse_err(line, "arc 0"))?),
                };
                no_trailing(toks, line)?;
                if dist[v].is_some() {
                    return Err(parse_err(line, format!("vertex {} listed twice", v + 1)));
                }
                if d.is_some() && p.is_none() {
                    if source.is_some() {
                        return Err(parse_err(line, "more than one root"));
                    }
                    source = Some(v);
                }
                dist[v] = Some(d);
                parent[v] = p;
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let dist = dist
        .into_iter()
        .enumerate()
        .map(|(v, d)| d.ok_or_else(|| parse_err(0, format!("vertex {} missing", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    let source = source.ok_or_else(|| parse_err(0, "no root vertex"))?;
    Ok(ParsedResult::Tree(ShortestPathTree { source, dist, parent }))
}

/// For each consecutive vertex pair of a closed walk, the lightest edge
/// joining them, or `None` if some pair has no edge.
pub fn lightest_cycle_edges(g: &Graph, vertices: &[VertexId]) -> Option<Vec<EdgeId>> {
    if vertices.is_empty() {
        return None;
    }
    (0..vertices.len())
        .map(|i| {
            let (u, v) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            g.out_edges(u).iter().copied().filter(|&e| g.edge(e).dst == v).min_by_key(|&e| (g.edge(e).weight, e))
        })
        .collect()
}
