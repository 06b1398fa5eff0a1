//! c-separation in chain mixed graphs.
//!
//! The decision procedure searches states `(node, mark)`: a section of the
//! walk has just been entered at `node`, with an arrowhead at `node` when
//! `mark` is set. From a state the walk either leaves the section as a
//! non-collider (the section must avoid `C`, so only `C`-free line paths
//! count) or as a collider (arrowheads on both sides, and the section only
//! needs to touch `C` somewhere in its line component).

pub(crate) mod maximal;
pub(crate) mod model;
mod moral;
mod oracle;

use std::collections::VecDeque;

pub use maximal::{is_maximal, is_maximal_with_cap, non_maximality_witness, Trislide};
pub use model::{models_equal, pairwise_model, pairwise_model_with_cap, IndependenceModel, Statement};
pub use moral::moral_separated;
pub use oracle::{bounded_walk_oracle, minimum_walk_bound, sufficient_walk_bound, OracleMode};

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, NodeSet, Step};
use crate::walk::Walk;

/// Default node cap for exhaustive enumeration over conditioning sets.
pub const ENUMERATION_CAP: usize = 8;

/// `A ⊥ B | C` over node labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationQuery {
    pub a: NodeSet,
    pub b: NodeSet,
    pub c: NodeSet,
}

impl SeparationQuery {
    pub fn new(a: NodeSet, b: NodeSet, c: NodeSet) -> Self {
        SeparationQuery { a, b, c }
    }

    pub fn swapped(&self) -> Self {
        SeparationQuery::new(self.b.clone(), self.a.clone(), self.c.clone())
    }
}

/// A query as membership masks over a graph's node indices.
pub(crate) struct Masks {
    pub a: Vec<bool>,
    pub b: Vec<bool>,
    pub c: Vec<bool>,
}

impl Masks {
    pub(crate) fn resolve(g: &MixedGraph, q: &SeparationQuery) -> Result<Masks> {
        let a = g.mask(&q.a)?;
        let b = g.mask(&q.b)?;
        let c = g.mask(&q.c)?;
        let overlap = (0..g.node_count()).find(|&v| (a[v] as u8 + b[v] as u8 + c[v] as u8) > 1);
        if let Some(v) = overlap {
            return Err(Error::MalformedQuery(format!(
                "node `{}` appears in more than one set",
                g.label(v)
            )));
        }
        Ok(Masks { a, b, c })
    }

    pub(crate) fn trivially_separated(&self) -> bool {
        !self.a.contains(&true) || !self.b.contains(&true)
    }
}

/// True when no c-connecting walk joins `q.a` and `q.b` given `q.c`.
/// Empty `a` or `b` counts as separated.
pub fn c_separated(g: &MixedGraph, q: &SeparationQuery) -> Result<bool> {
    g.require_cmg()?;
    let m = Masks::resolve(g, q)?;
    if m.trivially_separated() {
        return Ok(true);
    }
    Ok(Search::new(g, &m.c).run(&m.a, &m.b, false).is_none())
}

/// A c-connecting walk between `q.a` and `q.b` given `q.c`, if one exists.
pub fn c_connecting_witness(g: &MixedGraph, q: &SeparationQuery) -> Result<Option<Walk>> {
    g.require_cmg()?;
    let m = Masks::resolve(g, q)?;
    if m.trivially_separated() {
        return Ok(None);
    }
    let search = Search::new(g, &m.c);
    Ok(search.run(&m.a, &m.b, true).map(|found| search.witness(found)))
}

/// Pairwise separation by index, for callers that already hold a CMG.
pub(crate) fn separated_ix(g: &MixedGraph, i: usize, j: usize, c: &[bool]) -> bool {
    let n = g.node_count();
    let mut a = vec![false; n];
    let mut b = vec![false; n];
    a[i] = true;
    b[j] = true;
    Search::new(g, c).run(&a, &b, false).is_none()
}

#[derive(Clone, Copy)]
struct Parent {
    from: usize,
    /// Node where the section was left.
    exit: usize,
    step: Step,
    collider: bool,
}

struct Found {
    state: usize,
    target: usize,
    parents: Vec<Option<Parent>>,
}

struct Search<'g> {
    g: &'g MixedGraph,
    c: &'g [bool],
    /// Line components of the whole graph.
    comp: Vec<usize>,
    comp_members: Vec<Vec<usize>>,
    comp_meets_c: Vec<bool>,
    /// Line components after deleting `C`; `usize::MAX` for members of `C`.
    open: Vec<usize>,
    open_members: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g MixedGraph, c: &'g [bool]) -> Self {
        let n = g.node_count();
        let (comp, count) = g.line_components();
        let mut comp_members = vec![Vec::new(); count];
        let mut comp_meets_c = vec![false; count];
        for v in 0..n {
            comp_members[comp[v]].push(v);
            comp_meets_c[comp[v]] |= c[v];
        }
        let mut open = vec![usize::MAX; n];
        let mut open_members: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if c[v] || open[v] != usize::MAX {
                continue;
            }
            let id = open_members.len();
            let reach = g.line_reach(v, c);
            let members: Vec<usize> = (0..n).filter(|&w| reach[w]).collect();
            for &w in &members {
                open[w] = id;
            }
            open_members.push(members);
        }
        Search {
            g,
            c,
            comp,
            comp_members,
            comp_meets_c,
            open,
            open_members,
        }
    }

    /// Breadth-first search from `a` to `b`. States are `2 * node + mark`.
    fn run(&self, a: &[bool], b: &[bool], track: bool) -> Option<Found> {
        let n = self.g.node_count();
        let mut seen = vec![false; 2 * n];
        let mut parents = if track { vec![None; 2 * n] } else { Vec::new() };
        let mut queue = VecDeque::new();
        for v in (0..n).filter(|&v| a[v]) {
            seen[2 * v] = true;
            queue.push_back(2 * v);
        }
        while let Some(state) = queue.pop_front() {
            let (u, head) = (state / 2, state % 2 == 1);
            if !self.c[u] {
                let members = &self.open_members[self.open[u]];
                if let Some(&t) = members.iter().find(|&&w| b[w]) {
                    return Some(Found {
                        state,
                        target: t,
                        parents,
                    });
                }
                for &w in members {
                    for (x, step) in self.g.steps_from(w) {
                        if step.is_line() || (head && step.head_at_source()) {
                            continue;
                        }
                        let next = 2 * x + step.head_at_target() as usize;
                        if !seen[next] {
                            seen[next] = true;
                            if track {
                                parents[next] = Some(Parent { from: state, exit: w, step, collider: false });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
            if head && self.comp_meets_c[self.comp[u]] {
                for &w in &self.comp_members[self.comp[u]] {
                    for (x, step) in self.g.steps_from(w) {
                        if step.is_line() || !step.head_at_source() {
                            continue;
                        }
                        let next = 2 * x + step.head_at_target() as usize;
                        if !seen[next] {
                            seen[next] = true;
                            if track {
                                parents[next] = Some(Parent { from: state, exit: w, step, collider: true });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        None
    }

    /// Rebuilds a concrete walk from the search tree.
    fn witness(&self, found: Found) -> Walk {
        let mut chain = Vec::new();
        let mut state = found.state;
        while let Some(p) = found.parents[state] {
            chain.push((state, p));
            state = p.from;
        }
        chain.reverse();
        let mut nodes = vec![state / 2];
        let mut steps = Vec::new();
        for (to, p) in chain {
            let u = *nodes.last().unwrap();
            if p.collider {
                let comp = self.comp[u];
                let hub = *self.comp_members[comp].iter().find(|&&v| self.c[v]).unwrap();
                self.extend_lines(&mut nodes, &mut steps, u, hub, None);
                self.extend_lines(&mut nodes, &mut steps, hub, p.exit, None);
            } else {
                self.extend_lines(&mut nodes, &mut steps, u, p.exit, Some(self.c));
            }
            nodes.push(to / 2);
            steps.push(p.step);
        }
        let u = *nodes.last().unwrap();
        self.extend_lines(&mut nodes, &mut steps, u, found.target, Some(self.c));
        Walk::from_indices(self.g, &nodes, steps)
    }

    fn extend_lines(
        &self,
        nodes: &mut Vec<usize>,
        steps: &mut Vec<Step>,
        from: usize,
        to: usize,
        blocked: Option<&[bool]>,
    ) {
        for v in line_path(self.g, from, to, blocked).into_iter().skip(1) {
            nodes.push(v);
            steps.push(Step::Line);
        }
    }
}

/// Shortest line path from `from` to `to`, avoiding `blocked`.
pub(crate) fn line_path(g: &MixedGraph, from: usize, to: usize, blocked: Option<&[bool]>) -> Vec<usize> {
    let n = g.node_count();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in 0..n {
            if prev[w] == usize::MAX && g.has_line(v, w) && !blocked.is_some_and(|b| b[w]) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{node_set, EdgeKind::*};

    fn q(a: &[&str], b: &[&str], c: &[&str]) -> SeparationQuery {
        SeparationQuery::new(
            node_set(a.iter().copied()).unwrap(),
            node_set(b.iter().copied()).unwrap(),
            node_set(c.iter().copied()).unwrap(),
        )
    }

    #[test]
    fn worked_example_is_connected() {
        let g = fixtures::worked_example();
        assert!(!c_separated(&g, &q(&["j"], &["h"], &["l"])).unwrap());
        let w = c_connecting_witness(&g, &q(&["j"], &["h"], &["l"])).unwrap().unwrap();
        assert!(w.is_c_connecting(&node_set(["l"]).unwrap()));
        let l = NodeId::new("l").unwrap();
        assert!(w
            .sections()
            .iter()
            .any(|s| s.is_collider() && w.section_nodes(s).contains(&l)));
        assert_eq!(w.to_string(), "j -> k -> l -- r <- q -> h");
    }

    use crate::graph::NodeId;

    #[test]
    fn isolated_nodes() {
        let g = MixedGraph::build(["i", "j", "k"], Vec::<(&str, &str, _)>::new()).unwrap();
        assert!(c_separated(&g, &q(&["i"], &["j"], &[])).unwrap());
        assert!(c_separated(&g, &q(&["i"], &["j"], &["k"])).unwrap());
    }

    #[test]
    fn collider_opens_on_conditioning() {
        let g = MixedGraph::build(["a", "b", "c"], [("a", "c", Arrow), ("b", "c", Arrow)]).unwrap();
        assert!(c_separated(&g, &q(&["a"], &["b"], &[])).unwrap());
        assert!(!c_separated(&g, &q(&["a"], &["b"], &["c"])).unwrap());
    }

    #[test]
    fn single_line_witness() {
        let g = MixedGraph::build(["a", "b"], [("a", "b", Line)]).unwrap();
        let w = c_connecting_witness(&g, &q(&["a"], &["b"], &[])).unwrap().unwrap();
        assert_eq!(w.to_string(), "a -- b");
        let sep = MixedGraph::build(["a", "b"], Vec::<(&str, &str, _)>::new()).unwrap();
        assert!(c_connecting_witness(&sep, &q(&["a"], &["b"], &[])).unwrap().is_none());
    }

    #[test]
    fn malformed_and_empty_queries() {
        let g = MixedGraph::build(["a", "b"], [("a", "b", Line)]).unwrap();
        assert!(matches!(
            c_separated(&g, &q(&["a"], &["a"], &[])),
            Err(Error::MalformedQuery(_))
        ));
        assert!(c_separated(&g, &q(&[], &["b"], &[])).unwrap());
        let cyclic = MixedGraph::build(["a", "b"], [("a", "b", Line), ("a", "b", Arrow)]).unwrap();
        assert_eq!(c_separated(&cyclic, &q(&["a"], &["b"], &[])), Err(Error::NotACmg));
    }

    #[test]
    fn collider_section_through_line_component() {
        // a -> x -- y -- z <- b with C = {y}: the section {x, y, z} is a
        // collider touching C, so a and b are connected.
        let g = MixedGraph::build(
            ["a", "b", "x", "y", "z"],
            [("a", "x", Arrow), ("x", "y", Line), ("y", "z", Line), ("b", "z", Arrow)],
        )
        .unwrap();
        assert!(!c_separated(&g, &q(&["a"], &["b"], &["y"])).unwrap());
        assert!(c_separated(&g, &q(&["a"], &["b"], &[])).unwrap());
        let w = c_connecting_witness(&g, &q(&["a"], &["b"], &["y"])).unwrap().unwrap();
        assert!(w.is_c_connecting(&node_set(["y"]).unwrap()));
    }
}
