//! Walks and their decomposition into sections.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, NodeId, NodeSet, Step};

/// A walk `v0 e1 v1 ... en vn`. Nodes and edges may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    nodes: Vec<NodeId>,
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Endpoint,
    Collider,
    NonCollider,
}

/// A maximal run of lines on a walk, given by node positions `start..=end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Section {
    pub start: usize,
    pub end: usize,
    pub kind: SectionKind,
}

impl Section {
    pub fn is_collider(&self) -> bool {
        self.kind == SectionKind::Collider
    }
}

impl Walk {
    /// Checks that every step is an edge of `g` between its flanking nodes.
    pub fn new(g: &MixedGraph, nodes: Vec<NodeId>, steps: Vec<Step>) -> Result<Self> {
        if nodes.is_empty() || steps.len() + 1 != nodes.len() {
            return Err(Error::InvalidWalk("node and step counts disagree".into()));
        }
        for (k, step) in steps.iter().enumerate() {
            let x = g.require(nodes[k].as_str())?;
            let y = g.require(nodes[k + 1].as_str())?;
            if !g.steps_between(x, y).any(|s| s == *step) {
                return Err(Error::InvalidWalk(format!(
                    "no edge {} {} {}",
                    nodes[k],
                    step.symbol(),
                    nodes[k + 1]
                )));
            }
        }
        Ok(Walk { nodes, steps })
    }

    pub(crate) fn from_indices(g: &MixedGraph, nodes: &[usize], steps: Vec<Step>) -> Self {
        Walk {
            nodes: nodes.iter().map(|&v| g.label(v).clone()).collect(),
            steps,
        }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> &NodeId {
        &self.nodes[0]
    }

    pub fn last(&self) -> &NodeId {
        &self.nodes[self.nodes.len() - 1]
    }

    /// Splits the walk at every non-line step.
    pub fn sections(&self) -> Vec<Section> {
        let last = self.nodes.len() - 1;
        let mut out = Vec::new();
        let mut start = 0;
        for pos in 0..=last {
            let closes = pos == last || !self.steps[pos].is_line();
            if !closes {
                continue;
            }
            let kind = if start == 0 || pos == last {
                SectionKind::Endpoint
            } else if self.steps[start - 1].head_at_target() && self.steps[pos].head_at_source() {
                SectionKind::Collider
            } else {
                SectionKind::NonCollider
            };
            out.push(Section { start, end: pos, kind });
            start = pos + 1;
        }
        out
    }

    pub fn section_nodes(&self, s: &Section) -> &[NodeId] {
        &self.nodes[s.start..=s.end]
    }

    /// Every collider section meets `c` and every other section avoids it.
    pub fn is_c_connecting(&self, c: &NodeSet) -> bool {
        self.sections().iter().all(|s| {
            let mut nodes = self.section_nodes(s).iter();
            if s.is_collider() {
                nodes.any(|v| c.contains(v))
            } else {
                nodes.all(|v| !c.contains(v))
            }
        })
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nodes[0])?;
        for (step, node) in self.steps.iter().zip(&self.nodes[1..]) {
            write!(f, " {} {}", step.symbol(), node)?;
        }
        Ok(())
    }
}
