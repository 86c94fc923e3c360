//! Line-oriented `.tg` text format and DOT export.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1 1
//! 1 2 2
//! ```
//!
//! The first non-comment line is `n <count>`; every further line is
//! `<u> <v> <t1> <t2> ...`.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Edge, Label, TemporalGraph, Vertex};

pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph> {
    let mut n: Option<usize> = None;
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    let mut edges: Vec<(Vertex, Vertex, Vec<Label>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let Some(count) = n else {
            if tokens.next() != Some("n") {
                return Err(Error::parse(line_no, "expected header `n <count>`"));
            }
            let value = tokens
                .next()
                .ok_or_else(|| Error::parse(line_no, "missing vertex count"))?;
            n = Some(parse_int(value, line_no)?);
            if tokens.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after vertex count"));
            }
            continue;
        };

        let nums = tokens
            .map(|tok| parse_int(tok, line_no))
            .collect::<Result<Vec<usize>>>()?;
        if nums.len() < 3 {
            return Err(Error::parse(
                line_no,
                "edge line needs two endpoints and at least one label",
            ));
        }
        let (a, b) = (nums[0], nums[1]);
        for x in [a, b] {
            if x >= count {
                return Err(Error::parse(
                    line_no,
                    format!("vertex {x} out of range for n = {count}"),
                ));
            }
        }
        if a == b {
            return Err(Error::parse(line_no, format!("self-loop on vertex {a}")));
        }
        if !seen.insert(Edge::new(a, b)) {
            return Err(Error::parse(
                line_no,
                format!("edge {} repeated", Edge::new(a, b)),
            ));
        }
        let labels = nums[2..]
            .iter()
            .map(|&t| match Label::try_from(t) {
                Ok(0) => Err(Error::parse(line_no, "labels must be at least 1")),
                Ok(l) => Ok(l),
                Err(_) => Err(Error::parse(line_no, format!("label {t} too large"))),
            })
            .collect::<Result<Vec<Label>>>()?;
        edges.push((a, b, labels));
    }

    let n =
        n.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing header `n <count>`"))?;
    TemporalGraph::new(n, edges)
}

fn parse_int(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
}

/// Canonical text form: header, then one line per edge sorted by endpoints.
pub fn serialize_temporal_graph(g: &TemporalGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (e, labels) in g.edges() {
        write!(out, "{} {}", e.u, e.v).unwrap();
        for t in labels {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Undirected DOT graph with labels as edge annotations.
pub fn to_dot(g: &TemporalGraph) -> String {
    to_dot_named(g, |v| v.to_string())
}

/// DOT export with custom vertex display names (e.g. gadget names).
pub fn to_dot_named(g: &TemporalGraph, name: impl Fn(Vertex) -> String) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", name(v)).unwrap();
    }
    for (e, labels) in g.edges() {
        let ann = labels
            .iter()
            .map(Label::to_string)
            .collect::<Vec<_>>()
            .join(",");
        writeln!(out, "  {} -- {} [label=\"{ann}\"];", e.u, e.v).unwrap();
    }
    out.push_str("}\n");
    out
}
