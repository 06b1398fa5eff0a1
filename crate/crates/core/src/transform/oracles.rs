//! Walk characterizations of the edges each transform produces.
//!
//! These searches work directly on the input graph and never call the
//! transforms, so comparing their answers with the transform output is a
//! genuine cross-check.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::marginal_step_one;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph, NodeSet};

/// Arrowheads at the two ends of an edge or walk between `i` and `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndMarks {
    pub head_at_i: bool,
    pub head_at_j: bool,
}

impl EndMarks {
    pub fn new(head_at_i: bool, head_at_j: bool) -> Self {
        EndMarks { head_at_i, head_at_j }
    }

    /// Marks of the edges between `i` and `j` in `g`.
    pub fn of_edges(g: &MixedGraph, i: &str, j: &str) -> BTreeSet<EndMarks> {
        let mut out = BTreeSet::new();
        if g.has_edge(i, j, EdgeKind::Line) {
            out.insert(EndMarks::new(false, false));
        }
        if g.has_edge(i, j, EdgeKind::Arrow) {
            out.insert(EndMarks::new(false, true));
        }
        if g.has_edge(j, i, EdgeKind::Arrow) {
            out.insert(EndMarks::new(true, false));
        }
        if g.has_edge(i, j, EdgeKind::Arc) {
            out.insert(EndMarks::new(true, true));
        }
        out
    }
}

fn endpoints(g: &MixedGraph, removed: &NodeSet, i: &str, j: &str) -> Result<(usize, usize, Vec<bool>)> {
    g.require_cmg()?;
    let mask = g.mask(removed)?;
    let (x, y) = (g.require(i)?, g.require(j)?);
    if x == y || mask[x] || mask[y] {
        return Err(Error::MalformedQuery(
            "endpoints must be distinct and outside the removed set".into(),
        ));
    }
    Ok((x, y, mask))
}

/// Whether `i` and `j` are adjacent after marginalizing `m`, decided from
/// walks whose inner nodes all lie in `m` and whose inner sections are all
/// non-colliders.
pub fn marginal_edge_oracle(g: &MixedGraph, m: &NodeSet, i: &str, j: &str) -> Result<bool> {
    Ok(!marginal_edge_marks(g, m, i, j)?.is_empty())
}

/// End marks of every walk described at [`marginal_edge_oracle`].
pub fn marginal_edge_marks(g: &MixedGraph, m: &NodeSet, i: &str, j: &str) -> Result<BTreeSet<EndMarks>> {
    let (i, j, m) = endpoints(g, m, i, j)?;
    let h = marginal_step_one(g, &m);

    // (node, still inside the section of i, mark at i, entered with a head)
    type State = (usize, bool, bool, bool);
    let mut found = BTreeSet::new();
    let mut seen: HashSet<State> = HashSet::new();
    let mut queue: VecDeque<State> = VecDeque::from([(i, true, false, false)]);
    seen.insert((i, true, false, false));
    while let Some((v, first, i_head, entry)) = queue.pop_front() {
        for (x, step) in h.steps_from(v) {
            let next = if step.is_line() {
                if x == j {
                    found.insert(EndMarks::new(i_head, entry));
                    continue;
                }
                (x, first, i_head, entry)
            } else {
                let i_head = if first { step.head_at_source() } else { i_head };
                if !first && entry && step.head_at_source() {
                    continue;
                }
                if x == j {
                    found.insert(EndMarks::new(i_head, step.head_at_target()));
                    continue;
                }
                (x, false, i_head, step.head_at_target())
            };
            if m[x] && seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(found)
}

/// Whether `i` and `j` are adjacent after conditioning on `c`, decided from
/// walks whose inner sections are colliders inside `c` and its anteriors.
pub fn conditional_edge_oracle(g: &MixedGraph, c: &NodeSet, i: &str, j: &str) -> Result<bool> {
    Ok(!conditional_edge_marks(g, c, i, j)?.is_empty())
}

/// End marks of the edges predicted by [`conditional_edge_oracle`].
///
/// An endpoint section may hold more than its endpoint only when the walk
/// has an arrowhead there and the endpoint has an arc to `c` or its
/// anteriors. Arrowheads at endpoints that are anteriors of `c` disappear.
pub fn conditional_edge_marks(g: &MixedGraph, c: &NodeSet, i: &str, j: &str) -> Result<BTreeSet<EndMarks>> {
    let (i, j, c) = endpoints(g, c, i, j)?;
    let n = g.node_count();
    let ant = g.anteriors_mask(&c);
    let s: Vec<bool> = (0..n).map(|v| c[v] || ant[v]).collect();
    let spouse_of_s = |v: usize| (0..n).any(|w| s[w] && g.has_arc(v, w));

    let mut raw = BTreeSet::new();
    for step in g.steps_between(i, j) {
        raw.insert(EndMarks::new(step.head_at_source(), step.head_at_target()));
    }

    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    enum State {
        /// In the section of `i`; `single` while no line has been taken.
        First { v: usize, single: bool },
        /// In a later section.
        Inner { v: usize, i_head: bool, entry: bool, in_s: bool },
    }
    let mut seen = HashSet::new();
    let start = State::First { v: i, single: true };
    let mut queue = VecDeque::from([start]);
    seen.insert(start);
    let j_multi_ok = spouse_of_s(j);
    let i_multi_ok = spouse_of_s(i);
    while let Some(state) = queue.pop_front() {
        let mut push = |st: State, queue: &mut VecDeque<State>| {
            if seen.insert(st) {
                queue.push_back(st);
            }
        };
        match state {
            State::First { v, single } => {
                for (x, step) in g.steps_from(v) {
                    if step.is_line() {
                        push(State::First { v: x, single: false }, &mut queue);
                        continue;
                    }
                    let i_head = step.head_at_source();
                    if !single && !(i_head && i_multi_ok) {
                        continue;
                    }
                    if x == j && !single {
                        raw.insert(EndMarks::new(i_head, step.head_at_target()));
                    }
                    let entry = step.head_at_target();
                    push(State::Inner { v: x, i_head, entry, in_s: s[x] }, &mut queue);
                }
            }
            State::Inner { v, i_head, entry, in_s } => {
                if v == j && entry && j_multi_ok {
                    raw.insert(EndMarks::new(i_head, true));
                }
                for (x, step) in g.steps_from(v) {
                    if step.is_line() {
                        push(State::Inner { v: x, i_head, entry, in_s: in_s && s[x] }, &mut queue);
                        continue;
                    }
                    if !(entry && step.head_at_source() && in_s) {
                        continue;
                    }
                    if x == j {
                        raw.insert(EndMarks::new(i_head, step.head_at_target()));
                    }
                    push(
                        State::Inner { v: x, i_head, entry: step.head_at_target(), in_s: s[x] },
                        &mut queue,
                    );
                }
            }
        }
    }
    Ok(raw
        .into_iter()
        .map(|e| EndMarks::new(e.head_at_i && !ant[i], e.head_at_j && !ant[j]))
        .collect())
}

/// Whether the anterial graph of `h` joins `i` and `j`, decided from walks
/// starting at `j` with an edge out of `j`, ending at `i` with an edge into
/// `i`, and passing only through collider sections inside the anteriors of
/// `i` (or `i` itself).
pub fn subprimitive_walk_exists(h: &MixedGraph, j: &str, i: &str) -> Result<bool> {
    h.require_cmg()?;
    let (j, i) = (h.require(j)?, h.require(i)?);
    if i == j {
        return Err(Error::MalformedQuery("endpoints must be distinct".into()));
    }
    if h.adjacent(i, j) {
        return Ok(true);
    }
    let n = h.node_count();
    let mut single = vec![false; n];
    single[i] = true;
    let ant = h.anteriors_mask(&single);
    let allowed = |v: usize| v == i || ant[v];

    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for (x, step) in h.steps_from(j) {
        if !step.is_line() && step.head_at_target() && allowed(x) && !seen[x] {
            seen[x] = true;
            queue.push_back(x);
        }
    }
    while let Some(v) = queue.pop_front() {
        for (x, step) in h.steps_from(v) {
            let next = if step.is_line() {
                allowed(x)
            } else {
                if !step.head_at_source() {
                    continue;
                }
                if x == i {
                    return Ok(true);
                }
                step.head_at_target() && allowed(x)
            };
            if next && !seen[x] {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    Ok(false)
}
