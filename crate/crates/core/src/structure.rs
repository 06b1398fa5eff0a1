//! Structural queries: reachability, anteriors, chain components and
//! class membership.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph, NodeSet, IN, LINE, OUT};

/// Which of the standard graph classes a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphClass {
    pub ug: bool,
    pub dag: bool,
    pub cg: bool,
    pub cmg: bool,
    pub ang: bool,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags = [
            (self.ug, "UG"),
            (self.dag, "DAG"),
            (self.cg, "CG"),
            (self.cmg, "CMG"),
            (self.ang, "AnG"),
        ];
        let names: Vec<&str> = flags.iter().filter(|(on, _)| *on).map(|(_, s)| *s).collect();
        f.write_str(&names.join(" "))
    }
}

impl MixedGraph {
    /// Nodes reachable from `start` along lines without entering `blocked`.
    /// `start` itself is always included.
    pub(crate) fn line_reach(&self, start: usize, blocked: &[bool]) -> Vec<bool> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && !blocked[w] && self.bits(v, w) & LINE != 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Line-connected component ids and their count.
    pub(crate) fn line_components(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let none = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if comp[v] == usize::MAX {
                for (w, r) in self.line_reach(v, &none).into_iter().enumerate() {
                    if r {
                        comp[w] = count;
                    }
                }
                count += 1;
            }
        }
        (comp, count)
    }

    /// Nodes with a walk into `targets` along edges whose bits (read at the
    /// walk's current node towards its predecessor) match `via`.
    fn reverse_reach(&self, targets: &[bool], via: u8) -> Vec<bool> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| targets[v]).collect();
        let mut reached = vec![false; n];
        while let Some(v) = queue.pop_front() {
            for u in 0..n {
                if !seen[u] && self.bits(v, u) & via != 0 {
                    seen[u] = true;
                    reached[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reached
    }

    /// Anteriors of a set, as a mask. Members of the set are excluded.
    pub(crate) fn anteriors_mask(&self, set: &[bool]) -> Vec<bool> {
        let mut ant = self.reverse_reach(set, LINE | IN);
        for (a, &s) in ant.iter_mut().zip(set) {
            if s {
                *a = false;
            }
        }
        ant
    }

    /// `m[x][y]` is true when x is an anterior of y (x != y).
    pub(crate) fn anterior_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.node_count();
        let mut m = vec![vec![false; n]; n];
        for y in 0..n {
            let mut single = vec![false; n];
            single[y] = true;
            for (x, a) in self.anteriors_mask(&single).into_iter().enumerate() {
                m[x][y] = a;
            }
        }
        m
    }

    /// True when some arrow x -> y has y reaching x by a semi-directed walk.
    pub fn has_semidirected_cycle_with_arrow(&self) -> bool {
        let n = self.node_count();
        (0..n).any(|x| {
            let mut single = vec![false; n];
            single[x] = true;
            let reaches_x = self.reverse_reach(&single, LINE | IN);
            (0..n).any(|y| self.has_arrow(x, y) && reaches_x[y])
        })
    }

    pub fn is_cmg(&self) -> bool {
        !self.has_semidirected_cycle_with_arrow()
    }

    fn has_kind(&self, bit: u8) -> bool {
        let n = self.node_count();
        (0..n).any(|x| (0..n).any(|y| self.bits(x, y) & bit != 0))
    }

    pub fn classify(&self) -> GraphClass {
        let has_line = self.has_kind(LINE);
        let has_arrow = self.has_kind(OUT);
        let has_arc = self.has_kind(crate::graph::ARC);
        let cmg = self.is_cmg();
        let cg = cmg && !has_arc;
        let ang = cmg && self.is_simple() && {
            let ant = self.anterior_matrix();
            let n = self.node_count();
            (0..n).all(|x| (0..n).all(|y| !self.has_arc(x, y) || !ant[x][y]))
        };
        GraphClass {
            ug: !has_arrow && !has_arc,
            dag: cg && !has_line,
            cg,
            cmg,
            ang,
        }
    }

    pub fn is_cg(&self) -> bool {
        self.classify().cg
    }

    pub fn is_ang(&self) -> bool {
        self.classify().ang
    }

    pub(crate) fn require_cmg(&self) -> Result<()> {
        if self.is_cmg() {
            Ok(())
        } else {
            Err(Error::NotACmg)
        }
    }

    pub(crate) fn require_cg(&self) -> Result<()> {
        if self.is_cg() {
            Ok(())
        } else {
            Err(Error::NotAChainGraph)
        }
    }

    /// Nodes with a semi-directed walk into some member of `set`, minus
    /// `set` itself.
    pub fn anteriors(&self, set: &NodeSet) -> Result<NodeSet> {
        let mask = self.mask(set)?;
        Ok(self.set_of(&self.anteriors_mask(&mask)))
    }

    /// Nodes with a walk of arrows, all pointing forward, into `node`. The
    /// node itself is never included.
    pub fn ancestors(&self, node: &str) -> Result<NodeSet> {
        let v = self.require(node)?;
        let mut single = vec![false; self.node_count()];
        single[v] = true;
        let mut an = self.reverse_reach(&single, IN);
        an[v] = false;
        Ok(self.set_of(&an))
    }

    /// Connected components of the line-only subgraph of a chain graph,
    /// ordered by their smallest label.
    pub fn chain_components(&self) -> Result<Vec<NodeSet>> {
        self.require_cg()?;
        let (comp, count) = self.line_components();
        let mut parts = vec![NodeSet::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            parts[c].insert(self.label(v).clone());
        }
        Ok(parts)
    }

    /// Nodes reachable from `start` along lines avoiding `blocked`.
    pub fn line_reachable(&self, start: &str, blocked: &NodeSet) -> Result<NodeSet> {
        let v = self.require(start)?;
        let mask = self.mask(blocked)?;
        if mask[v] {
            return Err(Error::BlockedStart(start.to_string()));
        }
        Ok(self.set_of(&self.line_reach(v, &mask)))
    }

    /// The moral graph of a chain graph: every edge becomes a line and any
    /// two parents of a common chain component are joined.
    pub fn moral_graph(&self) -> Result<MixedGraph> {
        self.require_cg()?;
        Ok(self.moralize())
    }

    pub(crate) fn moralize(&self) -> MixedGraph {
        let n = self.node_count();
        let (comp, count) = self.line_components();
        let mut moral = MixedGraph::empty(self.nodes().to_vec());
        let mut parents = vec![Vec::new(); count];
        for x in 0..n {
            for y in 0..n {
                if x < y && self.adjacent(x, y) {
                    moral.add(x, y, EdgeKind::Line);
                }
                if self.has_arrow(x, y) && !parents[comp[y]].contains(&x) {
                    parents[comp[y]].push(x);
                }
            }
        }
        for pa in &parents {
            for (k, &x) in pa.iter().enumerate() {
                for &y in &pa[k + 1..] {
                    moral.add(x, y, EdgeKind::Line);
                }
            }
        }
        moral
    }
}
