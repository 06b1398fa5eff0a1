//! Marginalization, conditioning and anterialization of chain mixed graphs.

mod classes;
mod oracles;
mod rules;

pub use classes::{in_class_h, in_class_k};
pub use oracles::{
    conditional_edge_marks, conditional_edge_oracle, marginal_edge_marks, marginal_edge_oracle,
    subprimitive_walk_exists, EndMarks,
};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph, NodeSet};
use rules::{close_anchored, close_colliders, fixpoint};

/// Nodes to marginalize over (`m`) and to condition on (`c`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformSpec {
    pub m: NodeSet,
    pub c: NodeSet,
}

impl TransformSpec {
    pub fn new(m: NodeSet, c: NodeSet) -> Self {
        TransformSpec { m, c }
    }

    fn validate(&self, g: &MixedGraph) -> Result<(Vec<bool>, Vec<bool>)> {
        let m = g.mask(&self.m)?;
        let c = g.mask(&self.c)?;
        if let Some(v) = self.m.intersection(&self.c).next() {
            return Err(Error::MalformedQuery(format!(
                "node `{v}` is both marginalized and conditioned on"
            )));
        }
        Ok((m, c))
    }
}

/// Which operation runs first in [`marginalize_and_condition_ordered`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    #[default]
    MarginalizeFirst,
    ConditionFirst,
}

/// Removes `m`, adding the edges that keep the model over the remaining
/// nodes.
pub fn marginalize(g: &MixedGraph, m: &NodeSet) -> Result<MixedGraph> {
    g.require_cmg()?;
    let mask = g.mask(m)?;
    Ok(marginalize_ix(g, &mask))
}

pub(crate) fn marginalize_ix(g: &MixedGraph, m: &[bool]) -> MixedGraph {
    let mut h = marginal_step_one(g, m);
    close_tripaths(&mut h, m);
    h.without(m)
}

/// Collider trislides `m -> i -- ... -- w <-* j` with `m` marginalized.
pub(crate) fn marginal_step_one(g: &MixedGraph, m: &[bool]) -> MixedGraph {
    let mut h = g.clone();
    close_anchored(&mut h, |h, k, i| m[k] && h.has_arrow(k, i));
    h
}

/// Non-collider tripaths `i *-* m *-* j` with `m` marginalized. The new
/// edge has an arrowhead at i when the first edge has one there, or when the
/// first edge is a line and the second has an arrowhead at m; likewise at j.
fn close_tripaths(g: &mut MixedGraph, m: &[bool]) {
    let n = g.node_count();
    fixpoint(g, |g| {
        let mut changed = false;
        for mid in (0..n).filter(|&v| m[v]) {
            for i in (0..n).filter(|&i| i != mid) {
                for j in (i + 1..n).filter(|&j| j != mid) {
                    let firsts: Vec<_> = g.steps_between(i, mid).collect();
                    let seconds: Vec<_> = g.steps_between(mid, j).collect();
                    for &e1 in &firsts {
                        for &e2 in &seconds {
                            if e1.head_at_target() && e2.head_at_source() {
                                continue;
                            }
                            let head_i = if e1.is_line() { e2.head_at_source() } else { e1.head_at_source() };
                            let head_j = if e2.is_line() { e1.head_at_target() } else { e2.head_at_target() };
                            changed |= g.add_by_heads(i, j, head_i, head_j);
                        }
                    }
                }
            }
        }
        changed
    });
}

/// Removes `c` after conditioning on it.
pub fn condition(g: &MixedGraph, c: &NodeSet) -> Result<MixedGraph> {
    g.require_cmg()?;
    let mask = g.mask(c)?;
    Ok(condition_ix(g, &mask))
}

pub(crate) fn condition_ix(g: &MixedGraph, c: &[bool]) -> MixedGraph {
    let n = g.node_count();
    let ant = g.anteriors_mask(c);
    let s: Vec<bool> = (0..n).map(|v| c[v] || ant[v]).collect();
    let mut h = g.clone();

    close_anchored(&mut h, |h, k, i| s[k] && h.has_arc(k, i));

    let original = h.clone();
    close_colliders(&mut h, &original, |u, _, _| s[u], |_, _| true);

    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if s[y] && h.remove(x, y, EdgeKind::Arrow) {
                h.add(x, y, EdgeKind::Line);
            }
            if x < y && h.has_arc(x, y) && (s[x] || s[y]) {
                h.remove(x, y, EdgeKind::Arc);
                match (s[x], s[y]) {
                    (true, true) => h.add(x, y, EdgeKind::Line),
                    (true, false) => h.add(x, y, EdgeKind::Arrow),
                    _ => h.add(y, x, EdgeKind::Arrow),
                };
            }
        }
    }
    h.without(c)
}

/// Marginalizes over `spec.m`, then conditions on `spec.c`.
pub fn marginalize_and_condition(g: &MixedGraph, spec: &TransformSpec) -> Result<MixedGraph> {
    marginalize_and_condition_ordered(g, spec, Order::MarginalizeFirst)
}

pub fn marginalize_and_condition_ordered(g: &MixedGraph, spec: &TransformSpec, order: Order) -> Result<MixedGraph> {
    g.require_cmg()?;
    let (m, c) = spec.validate(g)?;
    Ok(combined_ix(g, &m, &c, order))
}

pub(crate) fn combined_ix(g: &MixedGraph, m: &[bool], c: &[bool], order: Order) -> MixedGraph {
    match order {
        Order::MarginalizeFirst => condition_ix(&marginalize_ix(g, m), &project(c, m)),
        Order::ConditionFirst => marginalize_ix(&condition_ix(g, c), &project(m, c)),
    }
}

/// `mask` restricted to the nodes that survive deleting `removed`.
pub(crate) fn project(mask: &[bool], removed: &[bool]) -> Vec<bool> {
    mask.iter().zip(removed).filter(|(_, &r)| !r).map(|(&v, _)| v).collect()
}

/// Turns a chain mixed graph into an anterial graph with the same model.
pub fn anterialize(h: &MixedGraph) -> Result<MixedGraph> {
    h.require_cmg()?;
    Ok(anterialize_ix(h))
}

pub(crate) fn anterialize_ix(h: &MixedGraph) -> MixedGraph {
    let n = h.node_count();
    let ant = h.anterior_matrix();
    let mut g = h.clone();

    close_anchored(&mut g, |g, k, i| g.has_arc(k, i) && ant[k][i]);

    let lines = g.clone();
    close_colliders(&mut g, &lines, |u, _, y| ant[u][y], |_, y_arc| y_arc);

    let ant = g.anterior_matrix();
    for x in 0..n {
        for y in x + 1..n {
            if !g.has_arc(x, y) || !(ant[x][y] || ant[y][x]) {
                continue;
            }
            g.remove(x, y, EdgeKind::Arc);
            match (ant[x][y], ant[y][x]) {
                (true, true) => g.add(x, y, EdgeKind::Line),
                (true, false) => g.add(x, y, EdgeKind::Arrow),
                _ => g.add(y, x, EdgeKind::Arrow),
            };
        }
    }
    g
}

/// Conditions on `spec.c`, marginalizes over `spec.m`, then anterializes.
pub fn ang_transform(g: &MixedGraph, spec: &TransformSpec) -> Result<MixedGraph> {
    g.require_cmg()?;
    let (m, c) = spec.validate(g)?;
    Ok(ang_ix(g, &m, &c))
}

pub(crate) fn ang_ix(g: &MixedGraph, m: &[bool], c: &[bool]) -> MixedGraph {
    anterialize_ix(&marginalize_ix(&condition_ix(g, c), &project(m, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::node_set;
    use crate::graphfile::{parse, render};

    fn graph(text: &str) -> MixedGraph {
        parse(&text.replace(';', "\n")).unwrap()
    }

    fn set(labels: &[&str]) -> NodeSet {
        node_set(labels.iter().copied()).unwrap()
    }

    fn edges(g: &MixedGraph) -> Vec<String> {
        g.edges().iter().map(|e| e.to_string()).collect()
    }

    fn marg(text: &str) -> Vec<String> {
        edges(&marginalize(&graph(text), &set(&["m"])).unwrap())
    }

    fn cond(text: &str) -> Vec<String> {
        edges(&condition(&graph(text), &set(&["s"])).unwrap())
    }

    #[test]
    fn marginal_row_1_chain() {
        assert_eq!(marg("m -> i; j -> m"), ["j -> i"]);
    }

    #[test]
    fn marginal_row_2_arrow_then_line() {
        assert_eq!(marg("m -> i; m -- j"), ["j -> i"]);
    }

    #[test]
    fn marginal_row_3_arc_then_line() {
        assert_eq!(marg("i <-> m; m -- j"), ["i <-> j"]);
    }

    #[test]
    fn marginal_row_4_fork() {
        assert_eq!(marg("m -> i; m -> j"), ["i <-> j"]);
    }

    #[test]
    fn marginal_row_5_arrow_then_arc() {
        assert_eq!(marg("m -> i; m <-> j"), ["i <-> j"]);
    }

    #[test]
    fn marginal_row_6_line_then_arrow_in() {
        assert_eq!(marg("i -- m; j -> m"), ["j -> i"]);
    }

    #[test]
    fn marginal_row_7_lines() {
        assert_eq!(marg("i -- m; m -- j"), ["i -- j"]);
    }

    #[test]
    fn marginal_row_8_trislide_with_arrow() {
        assert_eq!(marg("m -> i; i -- k; j -> k"), ["i -- k", "j -> i", "j -> k"]);
    }

    #[test]
    fn marginal_row_9_trislide_with_arc() {
        assert_eq!(marg("m -> i; i -- k; j <-> k"), ["i -- k", "i <-> j", "j <-> k"]);
    }

    #[test]
    fn conditional_row_1_arrows_in() {
        assert_eq!(cond("i -> s; j -> s"), ["i -- j"]);
    }

    #[test]
    fn conditional_row_2_arc_and_arrow() {
        assert_eq!(cond("i <-> s; j -> s"), ["j -> i"]);
    }

    #[test]
    fn conditional_row_3_arcs() {
        assert_eq!(cond("i <-> s; s <-> j"), ["i <-> j"]);
    }

    #[test]
    fn conditional_row_4_anchor_arc_then_arrow() {
        assert_eq!(cond("s <-> i; i -- k; j -> k"), ["i -- k", "j -> i", "j -> k"]);
    }

    #[test]
    fn conditional_row_5_anchor_arc_then_arc() {
        assert_eq!(cond("s <-> i; i -- k; j <-> k"), ["i -- k", "i <-> j", "j <-> k"]);
    }

    #[test]
    fn conditional_rows_trace_long_sections() {
        assert_eq!(cond("i -> s; s -- t; t -- u; j -> u"), ["i -- j", "j -- u", "t -- u"]);
    }

    #[test]
    fn chain_through_latent() {
        assert_eq!(marg("a -> m; m -> b"), ["a -> b"]);
    }

    #[test]
    fn empty_sets_are_identities() {
        for text in ["a -- b; b -> c; c <-> d; a <-> c", "a -> b; b -- c; d -> c"] {
            let g = graph(text);
            assert_eq!(marginalize(&g, &NodeSet::new()).unwrap(), g);
            assert_eq!(condition(&g, &NodeSet::new()).unwrap(), g);
            assert_eq!(marginalize_and_condition(&g, &TransformSpec::default()).unwrap(), g);
        }
    }

    #[test]
    fn anterialize_keeps_anterial_graphs() {
        let g = crate::fixtures::non_maximal_ang();
        assert_eq!(anterialize(&g).unwrap(), g);
        assert_eq!(ang_transform(&g, &TransformSpec::default()).unwrap(), g);
    }

    #[test]
    fn anterialize_resolves_arcs_between_anteriors() {
        let arrow = anterialize(&graph("a -> b; a <-> b")).unwrap();
        assert_eq!(edges(&arrow), ["a -> b"]);
        let line = anterialize(&graph("a -- b; a <-> b")).unwrap();
        assert_eq!(edges(&line), ["a -- b"]);
        let far = anterialize(&graph("a -> c; c -- b; a <-> b")).unwrap();
        assert_eq!(edges(&far), ["b -- c", "a -> b", "a -> c"]);
    }

    #[test]
    fn conditioning_a_chain_graph() {
        let g = graph("a -> b; c -> b; b -- d; d -> e; f -> e");
        let h = condition(&g, &set(&["e"])).unwrap();
        assert!(h.is_cg());
        assert_eq!(render(&h), "nodes: a b c d f\na -- b\na -- c\nb -- c\nb -- d\nd -- f\n");
        let partial = condition(&g, &set(&["a"])).unwrap();
        assert_eq!(edges(&partial), ["b -- d", "c -> b", "d -> e", "f -> e"]);
    }

    #[test]
    fn latent_common_cause_needs_an_arc() {
        let h = marginalize(&crate::fixtures::latent_common_cause(), &set(&["m"])).unwrap();
        assert_eq!(edges(&h), ["c -> a", "d -> b", "a <-> b"]);
        assert!(!h.is_cg());
    }

    #[test]
    fn orders_and_validation() {
        let g = graph("a -> m; m -> b; b -> c");
        let spec = TransformSpec::new(set(&["m"]), set(&["c"]));
        let mc = marginalize_and_condition(&g, &spec).unwrap();
        let cm = marginalize_and_condition_ordered(&g, &spec, Order::ConditionFirst).unwrap();
        assert_eq!(mc, cm);
        assert_eq!(edges(&mc), ["a -- b"]);
        let bad = TransformSpec::new(set(&["m"]), set(&["m"]));
        assert!(matches!(marginalize_and_condition(&g, &bad), Err(Error::MalformedQuery(_))));
        assert!(matches!(marginalize(&g, &set(&["zz"])), Err(Error::UnknownNode(_))));
        let cyclic = graph("a -> b; b -- c; c -> a");
        assert!(matches!(condition(&cyclic, &NodeSet::new()), Err(Error::NotACmg)));
    }
}
