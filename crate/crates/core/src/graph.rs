//! Loopless mixed graphs with lines, arrows and arcs.
//!
//! Nodes are kept sorted by label, so a node's index doubles as its position
//! in the canonical order. Each ordered pair of nodes carries a small bitmask
//! of the edges between them.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A node label. Labels are case-sensitive and never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(NodeId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for NodeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type NodeSet = BTreeSet<NodeId>;

/// Builds a [`NodeSet`] from labels. Empty labels are rejected.
pub fn node_set<I, S>(labels: I) -> Result<NodeSet>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    labels
        .into_iter()
        .map(|s| NodeId::new(s.as_ref()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Line,
    Arrow,
    Arc,
}

impl EdgeKind {
    pub fn symbol(self) -> &'static str {
        match self {
            EdgeKind::Line => "--",
            EdgeKind::Arrow => "->",
            EdgeKind::Arc => "<->",
        }
    }
}

/// An edge in canonical form. Lines and arcs have `from < to`; an arrow
/// points from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub kind: EdgeKind,
    pub from: NodeId,
    pub to: NodeId,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.from, self.kind.symbol(), self.to)
    }
}

/// One traversal of an edge, relative to the direction of travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Line,
    /// Arrow pointing in the direction of travel.
    Forward,
    /// Arrow pointing against the direction of travel.
    Backward,
    Arc,
}

impl Step {
    pub fn is_line(self) -> bool {
        self == Step::Line
    }

    /// Arrowhead at the node the step leaves.
    pub fn head_at_source(self) -> bool {
        matches!(self, Step::Backward | Step::Arc)
    }

    /// Arrowhead at the node the step enters.
    pub fn head_at_target(self) -> bool {
        matches!(self, Step::Forward | Step::Arc)
    }

    pub fn reversed(self) -> Step {
        match self {
            Step::Forward => Step::Backward,
            Step::Backward => Step::Forward,
            s => s,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Step::Line => "--",
            Step::Forward => "->",
            Step::Backward => "<-",
            Step::Arc => "<->",
        }
    }

    pub(crate) fn bit(self) -> u8 {
        match self {
            Step::Line => LINE,
            Step::Forward => OUT,
            Step::Backward => IN,
            Step::Arc => ARC,
        }
    }
}

pub(crate) const LINE: u8 = 1;
/// Arrow from the row node to the column node.
pub(crate) const OUT: u8 = 2;
/// Arrow from the column node to the row node.
pub(crate) const IN: u8 = 4;
pub(crate) const ARC: u8 = 8;

const STEPS: [Step; 4] = [Step::Line, Step::Forward, Step::Backward, Step::Arc];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    labels: Vec<NodeId>,
    adj: Vec<u8>,
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MixedGraph")
            .field("nodes", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

impl MixedGraph {
    /// Builds a graph from labels and `(from, to, kind)` triples.
    ///
    /// Repeated edges of the same kind collapse into one. Edges must refer
    /// to declared nodes.
    pub fn build<N, S, E, A, B>(nodes: N, edges: E) -> Result<Self>
    where
        N: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator<Item = (A, B, EdgeKind)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: NodeSet = node_set(nodes)?;
        let mut g = MixedGraph::empty(labels.into_iter().collect());
        for (a, b, kind) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let x = g.require(a)?;
            let y = g.require(b)?;
            if x == y {
                return Err(Error::LoopEdge(a.to_string()));
            }
            g.add(x, y, kind);
        }
        Ok(g)
    }

    pub(crate) fn empty(labels: Vec<NodeId>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        MixedGraph {
            labels,
            adj: vec![0; n * n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.labels
    }

    pub fn node_set(&self) -> NodeSet {
        self.labels.iter().cloned().collect()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index(label).is_some()
    }

    pub(crate) fn index(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub(crate) fn label(&self, v: usize) -> &NodeId {
        &self.labels[v]
    }

    /// Membership mask over node indices.
    pub(crate) fn mask<'a, I>(&self, set: I) -> Result<Vec<bool>>
    where
        I: IntoIterator<Item = &'a NodeId>,
    {
        let mut mask = vec![false; self.node_count()];
        for id in set {
            mask[self.require(id.as_str())?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn set_of(&self, mask: &[bool]) -> NodeSet {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| self.labels[v].clone())
            .collect()
    }

    #[inline]
    pub(crate) fn bits(&self, x: usize, y: usize) -> u8 {
        self.adj[x * self.labels.len() + y]
    }

    #[inline]
    pub(crate) fn has_line(&self, x: usize, y: usize) -> bool {
        self.bits(x, y) & LINE != 0
    }

    /// Arrow x -> y.
    #[inline]
    pub(crate) fn has_arrow(&self, x: usize, y: usize) -> bool {
        self.bits(x, y) & OUT != 0
    }

    #[inline]
    pub(crate) fn has_arc(&self, x: usize, y: usize) -> bool {
        self.bits(x, y) & ARC != 0
    }

    #[inline]
    pub(crate) fn adjacent(&self, x: usize, y: usize) -> bool {
        self.bits(x, y) != 0
    }

    /// Edge with an arrowhead at `y` coming from `x` (arrow x -> y or arc).
    #[inline]
    pub(crate) fn head_into(&self, x: usize, y: usize) -> bool {
        self.bits(x, y) & (OUT | ARC) != 0
    }

    /// Steps available from `x` to `y`.
    pub(crate) fn steps_between(&self, x: usize, y: usize) -> impl Iterator<Item = Step> {
        let bits = self.bits(x, y);
        STEPS.into_iter().filter(move |s| bits & s.bit() != 0)
    }

    /// All steps leaving `x`.
    pub(crate) fn steps_from(&self, x: usize) -> impl Iterator<Item = (usize, Step)> + '_ {
        (0..self.node_count()).flat_map(move |y| self.steps_between(x, y).map(move |s| (y, s)))
    }

    fn set_bits(&mut self, x: usize, y: usize, xy: u8, yx: u8, on: bool) -> bool {
        let n = self.labels.len();
        let before = self.adj[x * n + y];
        if on {
            self.adj[x * n + y] |= xy;
            self.adj[y * n + x] |= yx;
        } else {
            self.adj[x * n + y] &= !xy;
            self.adj[y * n + x] &= !yx;
        }
        self.adj[x * n + y] != before
    }

    /// Adds an edge, returning whether it was new. Arrows point x -> y.
    pub(crate) fn add(&mut self, x: usize, y: usize, kind: EdgeKind) -> bool {
        debug_assert_ne!(x, y);
        match kind {
            EdgeKind::Line => self.set_bits(x, y, LINE, LINE, true),
            EdgeKind::Arrow => self.set_bits(x, y, OUT, IN, true),
            EdgeKind::Arc => self.set_bits(x, y, ARC, ARC, true),
        }
    }

    pub(crate) fn remove(&mut self, x: usize, y: usize, kind: EdgeKind) -> bool {
        match kind {
            EdgeKind::Line => self.set_bits(x, y, LINE, LINE, false),
            EdgeKind::Arrow => self.set_bits(x, y, OUT, IN, false),
            EdgeKind::Arc => self.set_bits(x, y, ARC, ARC, false),
        }
    }

    /// Adds the edge between x and y with the given arrowhead pattern:
    /// no heads gives a line, both gives an arc, one gives an arrow into
    /// that end.
    pub(crate) fn add_by_heads(&mut self, x: usize, y: usize, head_x: bool, head_y: bool) -> bool {
        match (head_x, head_y) {
            (false, false) => self.add(x, y, EdgeKind::Line),
            (true, true) => self.add(x, y, EdgeKind::Arc),
            (true, false) => self.add(y, x, EdgeKind::Arrow),
            (false, true) => self.add(x, y, EdgeKind::Arrow),
        }
    }

    pub fn has_edge(&self, from: &str, to: &str, kind: EdgeKind) -> bool {
        match (self.index(from), self.index(to)) {
            (Some(x), Some(y)) if x != y => match kind {
                EdgeKind::Line => self.has_line(x, y),
                EdgeKind::Arrow => self.has_arrow(x, y),
                EdgeKind::Arc => self.has_arc(x, y),
            },
            _ => false,
        }
    }

    pub fn is_adjacent(&self, a: &str, b: &str) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(x), Some(y)) => self.adjacent(x, y),
            _ => false,
        }
    }

    /// Edges in canonical order: by kind, then by endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.node_count();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let bits = self.bits(x, y);
                let mut push = |kind| {
                    out.push(Edge {
                        kind,
                        from: self.labels[x].clone(),
                        to: self.labels[y].clone(),
                    })
                };
                if x < y && bits & LINE != 0 {
                    push(EdgeKind::Line);
                }
                if bits & OUT != 0 {
                    push(EdgeKind::Arrow);
                }
                if x < y && bits & ARC != 0 {
                    push(EdgeKind::Arc);
                }
            }
        }
        out.sort();
        out
    }

    pub fn edge_count(&self) -> usize {
        let n = self.node_count();
        let mut count = 0;
        for x in 0..n {
            for y in x + 1..n {
                count += self.bits(x, y).count_ones() as usize;
            }
        }
        count
    }

    /// No pair of nodes is joined by more than one edge.
    pub fn is_simple(&self) -> bool {
        self.adj.iter().all(|b| b.count_ones() <= 1)
    }

    /// The subgraph on `keep` with every edge between kept nodes.
    pub fn induced_subgraph(&self, keep: &NodeSet) -> Result<MixedGraph> {
        let mask = self.mask(keep)?;
        Ok(self.restrict(&mask))
    }

    pub(crate) fn restrict(&self, keep: &[bool]) -> MixedGraph {
        let old: Vec<usize> = (0..self.node_count()).filter(|&v| keep[v]).collect();
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = MixedGraph::empty(labels);
        let n = old.len();
        for (x, &ox) in old.iter().enumerate() {
            for (y, &oy) in old.iter().enumerate() {
                g.adj[x * n + y] = self.bits(ox, oy);
            }
        }
        g
    }

    pub(crate) fn without(&self, drop: &[bool]) -> MixedGraph {
        let keep: Vec<bool> = drop.iter().map(|d| !d).collect();
        self.restrict(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_single_arrow() {
        let g = MixedGraph::build(["a", "b"], [("a", "b", EdgeKind::Arrow)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge("a", "b", EdgeKind::Arrow));
        assert!(!g.has_edge("b", "a", EdgeKind::Arrow));
    }

    #[test]
    fn loops_are_rejected() {
        let err = MixedGraph::build(["a"], [("a", "a", EdgeKind::Line)]).unwrap_err();
        assert_eq!(err, Error::LoopEdge("a".into()));
    }

    #[test]
    fn unknown_endpoint() {
        let err = MixedGraph::build(["a"], [("a", "z", EdgeKind::Line)]).unwrap_err();
        assert_eq!(err, Error::UnknownNode("z".into()));
    }

    #[test]
    fn multi_edges_of_distinct_kinds() {
        let g = MixedGraph::build(
            ["a", "b"],
            [("a", "b", EdgeKind::Arc), ("a", "b", EdgeKind::Arrow)],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn symmetric_kinds_collapse() {
        let g = MixedGraph::build(
            ["a", "b"],
            [
                ("b", "a", EdgeKind::Line),
                ("a", "b", EdgeKind::Line),
                ("b", "a", EdgeKind::Arc),
            ],
        )
        .unwrap();
        let edges = g.edges();
        assert_eq!(edges.len(), 2);
        assert_eq!(edges[0].to_string(), "a -- b");
        assert_eq!(edges[1].to_string(), "a <-> b");
    }

    #[test]
    fn empty_label() {
        assert_eq!(NodeId::new("").unwrap_err(), Error::EmptyLabel);
    }

    #[test]
    fn induced_subgraph_drops_crossing_edges() {
        let g = MixedGraph::build(
            ["a", "b", "c"],
            [("a", "b", EdgeKind::Arrow), ("b", "c", EdgeKind::Arrow)],
        )
        .unwrap();
        let h = g.induced_subgraph(&node_set(["a", "c"]).unwrap()).unwrap();
        assert_eq!(h.node_count(), 2);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(g.induced_subgraph(&g.node_set()).unwrap(), g);
        let single = MixedGraph::build(["a", "b"], [("a", "b", EdgeKind::Arrow)])
            .unwrap()
            .induced_subgraph(&node_set(["a"]).unwrap())
            .unwrap();
        assert_eq!(single.nodes().len(), 1);
    }

    #[test]
    fn steps_report_heads() {
        let g = MixedGraph::build(["a", "b"], [("a", "b", EdgeKind::Arrow)]).unwrap();
        let from_a: Vec<_> = g.steps_from(0).collect();
        assert_eq!(from_a, vec![(1, Step::Forward)]);
        let from_b: Vec<_> = g.steps_from(1).collect();
        assert_eq!(from_b, vec![(0, Step::Backward)]);
        assert!(from_b[0].1.head_at_source());
    }
}
