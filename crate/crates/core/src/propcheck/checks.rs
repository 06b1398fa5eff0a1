//! Single-instance checks. Each returns a [`Verdict`]; failures describe
//! the first disagreement found.

use crate::graph::MixedGraph;
use crate::separation::{
    bounded_walk_oracle, c_connecting_witness, c_separated, maximal::maximal_ix, moral_separated,
    non_maximality_witness, separated_ix, sufficient_walk_bound, OracleMode, SeparationQuery,
};
use crate::separation::model::for_each_subset_without;
use crate::transform::{
    anterialize_ix, ang_ix, combined_ix, condition_ix, conditional_edge_oracle, in_class_h, in_class_k,
    marginal_edge_oracle, marginalize_ix, project, subprimitive_walk_exists, Order,
};

/// A graph plus up to four disjoint node masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: MixedGraph,
    pub m: Vec<bool>,
    pub c: Vec<bool>,
    pub m1: Vec<bool>,
    pub c1: Vec<bool>,
}

impl Instance {
    pub fn new(graph: MixedGraph) -> Self {
        let n = graph.node_count();
        Instance {
            graph,
            m: vec![false; n],
            c: vec![false; n],
            m1: vec![false; n],
            c1: vec![false; n],
        }
    }

    /// The instance with node `v` deleted from the graph and every mask.
    pub fn without(&self, v: usize) -> Instance {
        let mut drop = vec![false; self.graph.node_count()];
        drop[v] = true;
        Instance {
            graph: self.graph.without(&drop),
            m: project(&self.m, &drop),
            c: project(&self.c, &drop),
            m1: project(&self.m1, &drop),
            c1: project(&self.c1, &drop),
        }
    }
}

pub enum Verdict {
    Pass,
    Skip,
    Fail(String),
}

use Verdict::*;

fn or(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| *x || *y).collect()
}

fn label_list(g: &MixedGraph, mask: &[bool]) -> String {
    let names: Vec<String> = g.set_of(mask).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", names.join(","))
}

/// Compares `h` (the result of removing `removed` from `g`) with `g` on every
/// pairwise statement over the survivors: `i ⊥ j | C1` in `h` must agree
/// with `i ⊥ j | C ∪ C1` in `g`.
fn same_model(g: &MixedGraph, removed: &[bool], c: &[bool], h: &MixedGraph, what: &str) -> Verdict {
    let survivors: Vec<usize> = (0..g.node_count()).filter(|&v| !removed[v]).collect();
    let k = survivors.len();
    debug_assert_eq!(k, h.node_count());
    for a in 0..k {
        for b in a + 1..k {
            let mut failure = None;
            for_each_subset_without(k, a, b, |c1| {
                let mut given = c.to_vec();
                for (x, &v) in survivors.iter().enumerate() {
                    given[v] |= c1[x];
                }
                let lhs = separated_ix(h, a, b, c1);
                let rhs = separated_ix(g, survivors[a], survivors[b], &given);
                if lhs != rhs {
                    failure = Some(format!(
                        "{what}: {} vs {} given {} is {} in the result but {} in the input",
                        h.label(a),
                        h.label(b),
                        label_list(h, c1),
                        if lhs { "separated" } else { "connected" },
                        if rhs { "separated" } else { "connected" },
                    ));
                }
                failure.is_some()
            });
            if let Some(msg) = failure {
                return Fail(msg);
            }
        }
    }
    Pass
}

pub fn marginalization(x: &Instance) -> Verdict {
    let h = marginalize_ix(&x.graph, &x.m);
    same_model(&x.graph, &x.m, &vec![false; x.m.len()], &h, "marginalize")
}

pub fn conditioning(x: &Instance) -> Verdict {
    let h = condition_ix(&x.graph, &x.c);
    same_model(&x.graph, &x.c, &x.c, &h, "condition")
}

pub fn combined(x: &Instance) -> Verdict {
    let removed = or(&x.m, &x.c);
    for order in [Order::MarginalizeFirst, Order::ConditionFirst] {
        let h = combined_ix(&x.graph, &x.m, &x.c, order);
        if let Fail(msg) = same_model(&x.graph, &removed, &x.c, &h, &format!("{order:?}")) {
            return Fail(msg);
        }
    }
    Pass
}

pub fn anterialize_model(x: &Instance) -> Verdict {
    let none = vec![false; x.graph.node_count()];
    same_model(&x.graph, &none, &none, &anterialize_ix(&x.graph), "anterialize")
}

pub fn ang(x: &Instance) -> Verdict {
    let h = ang_ix(&x.graph, &x.m, &x.c);
    same_model(&x.graph, &or(&x.m, &x.c), &x.c, &h, "anterial pipeline")
}

fn graphs_equal(lhs: &MixedGraph, rhs: &MixedGraph, what: &str) -> Verdict {
    if lhs == rhs {
        Pass
    } else {
        Fail(format!(
            "{what}: {} differs from {}",
            render_inline(lhs),
            render_inline(rhs)
        ))
    }
}

fn render_inline(g: &MixedGraph) -> String {
    let text = crate::graphfile::render(g);
    format!("[{}]", text.lines().collect::<Vec<_>>().join("; "))
}

pub fn composition_marginal(x: &Instance) -> Verdict {
    let g = &x.graph;
    let lhs = marginalize_ix(&marginalize_ix(g, &x.m), &project(&x.m1, &x.m));
    let rhs = marginalize_ix(g, &or(&x.m, &x.m1));
    graphs_equal(&lhs, &rhs, "stepwise vs joint marginalization")
}

pub fn composition_conditional(x: &Instance) -> Verdict {
    let g = &x.graph;
    let lhs = condition_ix(&condition_ix(g, &x.c), &project(&x.c1, &x.c));
    let rhs = condition_ix(g, &or(&x.c, &x.c1));
    graphs_equal(&lhs, &rhs, "stepwise vs joint conditioning")
}

pub fn composition_combined(x: &Instance) -> Verdict {
    let g = &x.graph;
    let first_removed = or(&x.m, &x.c);
    let inner = combined_ix(g, &x.m, &x.c, Order::MarginalizeFirst);
    let lhs = combined_ix(
        &inner,
        &project(&x.m1, &first_removed),
        &project(&x.c1, &first_removed),
        Order::MarginalizeFirst,
    );
    let rhs = combined_ix(g, &or(&x.m, &x.m1), &or(&x.c, &x.c1), Order::MarginalizeFirst);
    if !maximal_ix(&lhs) || !maximal_ix(&rhs) {
        return Skip;
    }
    graphs_equal(&lhs, &rhs, "stepwise vs joint transform")
}

pub fn commutativity_graph(x: &Instance) -> Verdict {
    let mc = combined_ix(&x.graph, &x.m, &x.c, Order::MarginalizeFirst);
    if !maximal_ix(&mc) {
        return Skip;
    }
    let cm = combined_ix(&x.graph, &x.m, &x.c, Order::ConditionFirst);
    graphs_equal(&mc, &cm, "marginalize-first vs condition-first")
}

pub fn commutativity_model(x: &Instance) -> Verdict {
    let mc = combined_ix(&x.graph, &x.m, &x.c, Order::MarginalizeFirst);
    let cm = combined_ix(&x.graph, &x.m, &x.c, Order::ConditionFirst);
    let n = mc.node_count();
    for i in 0..n {
        for j in i + 1..n {
            let mut failure = None;
            for_each_subset_without(n, i, j, |c| {
                if separated_ix(&mc, i, j, c) != separated_ix(&cm, i, j, c) {
                    failure = Some(format!(
                        "orders disagree on {} vs {} given {}",
                        mc.label(i),
                        mc.label(j),
                        label_list(&mc, c)
                    ));
                }
                failure.is_some()
            });
            if let Some(msg) = failure {
                return Fail(msg);
            }
        }
    }
    Pass
}

fn holds(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Pass
    } else {
        Fail(msg())
    }
}

pub fn closure_marginalize(x: &Instance) -> Verdict {
    let h = marginalize_ix(&x.graph, &x.m);
    holds(h.is_cmg(), || format!("result {} is not a CMG", render_inline(&h)))
}

pub fn closure_condition(x: &Instance) -> Verdict {
    let h = condition_ix(&x.graph, &x.c);
    holds(h.is_cmg(), || format!("result {} is not a CMG", render_inline(&h)))
}

pub fn closure_condition_cg(x: &Instance) -> Verdict {
    let h = condition_ix(&x.graph, &x.c);
    holds(h.is_cg(), || format!("result {} is not a CG", render_inline(&h)))
}

pub fn closure_anterialize(x: &Instance) -> Verdict {
    let h = anterialize_ix(&x.graph);
    holds(h.is_ang() && h.is_simple() && h.nodes() == x.graph.nodes(), || {
        format!("result {} is not a simple AnG", render_inline(&h))
    })
}

pub fn class_h(x: &Instance) -> Verdict {
    let h = combined_ix(&x.graph, &x.m, &x.c, Order::MarginalizeFirst);
    holds(in_class_h(&h).unwrap_or(false), || {
        format!("result {} is outside class H", render_inline(&h))
    })
}

pub fn class_k(x: &Instance) -> Verdict {
    let h = ang_ix(&x.graph, &x.m, &x.c);
    holds(in_class_k(&h).unwrap_or(false), || {
        format!("result {} is outside class K", render_inline(&h))
    })
}

/// Runs `oracle(i, j)` for every surviving pair and compares it with
/// adjacency in `h`.
fn adjacency_agrees(h: &MixedGraph, what: &str, oracle: impl Fn(&str, &str) -> bool) -> Verdict {
    let n = h.node_count();
    for a in 0..n {
        for b in a + 1..n {
            let (i, j) = (h.label(a).as_str(), h.label(b).as_str());
            let predicted = oracle(i, j);
            if predicted != h.adjacent(a, b) {
                return Fail(format!(
                    "{what} predicts {} between {i} and {j}, transform says {}",
                    if predicted { "an edge" } else { "no edge" },
                    if h.adjacent(a, b) { "adjacent" } else { "non-adjacent" },
                ));
            }
        }
    }
    Pass
}

pub fn oracle_marginal(x: &Instance) -> Verdict {
    let g = &x.graph;
    let h = marginalize_ix(g, &x.m);
    let m = g.set_of(&x.m);
    adjacency_agrees(&h, "marginal walk oracle", |i, j| {
        marginal_edge_oracle(g, &m, i, j).expect("valid query")
    })
}

pub fn oracle_conditional(x: &Instance) -> Verdict {
    let g = &x.graph;
    let h = condition_ix(g, &x.c);
    let c = g.set_of(&x.c);
    adjacency_agrees(&h, "conditional walk oracle", |i, j| {
        conditional_edge_oracle(g, &c, i, j).expect("valid query")
    })
}

pub fn oracle_subprimitive(x: &Instance) -> Verdict {
    let g = &x.graph;
    let h = anterialize_ix(g);
    adjacency_agrees(&h, "subprimitive walk oracle", |i, j| {
        subprimitive_walk_exists(g, j, i).expect("valid query")
            || subprimitive_walk_exists(g, i, j).expect("valid query")
    })
}

/// Every disjoint `(A, B, C)` with non-empty `A` and `B` when the graph is
/// small, otherwise every single-pair query.
fn queries(g: &MixedGraph) -> Vec<SeparationQuery> {
    let n = g.node_count();
    let mut out = Vec::new();
    if n <= 5 {
        for code in 0..4usize.pow(n as u32) {
            let mut parts = [Vec::new(), Vec::new(), Vec::new()];
            let mut rest = code;
            for v in 0..n {
                if rest % 4 < 3 {
                    parts[rest % 4].push(g.label(v).clone());
                }
                rest /= 4;
            }
            if parts[0].is_empty() || parts[1].is_empty() {
                continue;
            }
            let [a, b, c] = parts.map(|p| p.into_iter().collect());
            out.push(SeparationQuery::new(a, b, c));
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                for_each_subset_without(n, i, j, |c| {
                    out.push(SeparationQuery::new(
                        [g.label(i).clone()].into(),
                        [g.label(j).clone()].into(),
                        g.set_of(c),
                    ));
                    false
                });
            }
        }
    }
    out
}

fn describe(q: &SeparationQuery) -> String {
    let show = |s: &crate::graph::NodeSet| {
        let v: Vec<&str> = s.iter().map(|x| x.as_str()).collect();
        format!("{{{}}}", v.join(","))
    };
    format!("{} vs {} given {}", show(&q.a), show(&q.b), show(&q.c))
}

pub fn separation_oracle(x: &Instance) -> Verdict {
    let g = &x.graph;
    let bound = sufficient_walk_bound(g.node_count());
    for q in queries(g) {
        let fast = c_separated(g, &q).expect("valid query");
        for mode in [OracleMode::WalksInC, OracleMode::PathsInAntC] {
            let slow = bounded_walk_oracle(g, &q, bound, mode).expect("valid query");
            if fast != slow {
                return Fail(format!("{}: search says {fast}, {mode:?} oracle says {slow}", describe(&q)));
            }
        }
    }
    Pass
}

pub fn separation_moral(x: &Instance) -> Verdict {
    let g = &x.graph;
    for q in queries(g) {
        let fast = c_separated(g, &q).expect("valid query");
        let moral = moral_separated(g, &q).expect("chain graph");
        if fast != moral {
            return Fail(format!("{}: search says {fast}, moral criterion says {moral}", describe(&q)));
        }
    }
    Pass
}

pub fn witness_audit(x: &Instance) -> Verdict {
    let g = &x.graph;
    for q in queries(g) {
        let separated = c_separated(g, &q).expect("valid query");
        let witness = c_connecting_witness(g, &q).expect("valid query");
        let ok = match &witness {
            None => separated,
            Some(w) => {
                !separated
                    && q.a.contains(w.first())
                    && q.b.contains(w.last())
                    && w.is_c_connecting(&q.c)
                    && crate::walk::Walk::new(g, w.nodes().to_vec(), w.steps().to_vec()).is_ok()
            }
        };
        if !ok {
            return Fail(format!(
                "{}: witness {} does not match verdict {separated}",
                describe(&q),
                witness.map_or("none".to_string(), |w| w.to_string())
            ));
        }
    }
    Pass
}

pub fn maximality_witness(x: &Instance) -> Verdict {
    let g = &x.graph;
    match non_maximality_witness(g).expect("CMG input") {
        None => Skip,
        Some(t) => holds(!maximal_ix(g), || format!("witness {} but the graph is maximal", t.path)),
    }
}
