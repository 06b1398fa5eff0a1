//! Plain-text graph files and DOT export.
//!
//! ```text
//! # comment
//! nodes: a b c d
//! a -- b
//! b -> c
//! c <-> d
//! ```
//!
//! Edge endpoints are declared implicitly; a `nodes:` line adds isolated
//! nodes. Rendering is canonical: one `nodes:` line with every node in
//! sorted order, then edges sorted by kind and endpoints.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeKind, MixedGraph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Labels are runs of letters, digits, `_`, `.` and `'`.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

fn label(line: usize, token: &str) -> Result<NodeId, ParseError> {
    if !is_valid_label(token) {
        return fail(line, format!("invalid node label `{token}`"));
    }
    Ok(NodeId::new(token).expect("validated label is non-empty"))
}

pub fn parse(text: &str) -> Result<MixedGraph, ParseError> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("nodes:") {
            for token in rest.split_whitespace() {
                nodes.push(label(line, token)?);
            }
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [from, op, to] = tokens[..] else {
            return fail(line, "expected `<node> <edge> <node>`");
        };
        let kind = match op {
            "--" => EdgeKind::Line,
            "->" => EdgeKind::Arrow,
            "<->" => EdgeKind::Arc,
            other => return fail(line, format!("unknown edge `{other}`, expected `--`, `->` or `<->`")),
        };
        let (from, to) = (label(line, from)?, label(line, to)?);
        if from == to {
            return fail(line, format!("loop edge at `{from}`"));
        }
        nodes.push(from.clone());
        nodes.push(to.clone());
        edges.push((from, to, kind));
    }
    Ok(MixedGraph::build(&nodes, edges).expect("labels and endpoints are checked above"))
}

/// Canonical text form of `g`.
pub fn render(g: &MixedGraph) -> String {
    let mut out = String::new();
    if g.node_count() > 0 {
        let names: Vec<&str> = g.nodes().iter().map(NodeId::as_str).collect();
        writeln!(out, "nodes: {}", names.join(" ")).unwrap();
    }
    for e in g.edges() {
        writeln!(out, "{e}").unwrap();
    }
    out
}

/// Splits a comma- or whitespace-separated list of labels.
pub fn parse_node_list(text: &str) -> Result<Vec<NodeId>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| label(1, t))
        .collect()
}

/// Graphviz export: arrows are directed edges, lines have no arrowheads and
/// arcs have one at each end.
pub fn to_dot(g: &MixedGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.nodes() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for e in g.edges() {
        let attr = match e.kind {
            EdgeKind::Line => " [dir=none]",
            EdgeKind::Arrow => "",
            EdgeKind::Arc => " [dir=both]",
        };
        writeln!(out, "  \"{}\" -> \"{}\"{attr};", e.from, e.to).unwrap();
    }
    out.push_str("}\n");
    out
}
