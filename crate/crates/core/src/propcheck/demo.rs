//! Exhaustive graph enumeration and the latent common cause demo: after
//! marginalizing `m` from `c -> a <- m -> b <- d`, no chain graph on the
//! remaining four nodes induces the same pairwise model.

use crate::fixtures::latent_common_cause;
use crate::graph::{EdgeKind, MixedGraph};
use crate::separation::model::for_each_subset_without;
use crate::separation::separated_ix;
use crate::transform::marginalize_ix;

use super::generate::labels;
use super::report::{Counterexample, PropertyReport};

pub const DEMO_ID: &str = "cg-unrepresentability";

/// Every mixed graph on the labels `a, b, ...`. With `simple` each pair
/// carries at most one edge (5 choices), otherwise any subset of the four
/// oriented edge kinds (16 choices).
pub fn all_mixed_graphs(n: usize, simple: bool) -> Vec<MixedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let choices: u64 = if simple { 5 } else { 16 };
    let total = choices.pow(pairs.len() as u32);
    let options: [(EdgeKind, bool); 4] = [
        (EdgeKind::Line, false),
        (EdgeKind::Arrow, false),
        (EdgeKind::Arrow, true),
        (EdgeKind::Arc, false),
    ];
    let mut out = Vec::with_capacity(total as usize);
    for mut code in 0..total {
        let mut g = MixedGraph::empty(labels(n));
        for &(x, y) in &pairs {
            let choice = (code % choices) as usize;
            code /= choices;
            let bits = if simple {
                if choice == 0 { 0 } else { 1 << (choice - 1) }
            } else {
                choice
            };
            for (k, &(kind, flip)) in options.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    let (from, to) = if flip { (y, x) } else { (x, y) };
                    g.add(from, to, kind);
                }
            }
        }
        out.push(g);
    }
    out
}

fn same_pairwise_model(g: &MixedGraph, h: &MixedGraph) -> bool {
    let n = g.node_count();
    (0..n).all(|i| {
        (i + 1..n).all(|j| !for_each_subset_without(n, i, j, |c| separated_ix(g, i, j, c) != separated_ix(h, i, j, c)))
    })
}

/// Searches the simple chain graphs on `target`'s nodes for one with the
/// same pairwise model. Returns the number of candidates tried and the
/// first match.
pub fn find_cg_with_model(target: &MixedGraph) -> (usize, Option<MixedGraph>) {
    let n = target.node_count();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut tried = 0;
    for mut code in 0..4u64.pow(pairs.len() as u32) {
        let mut h = MixedGraph::empty(target.nodes().to_vec());
        for &(x, y) in &pairs {
            match code % 4 {
                1 => h.add(x, y, EdgeKind::Line),
                2 => h.add(x, y, EdgeKind::Arrow),
                3 => h.add(y, x, EdgeKind::Arrow),
                _ => false,
            };
            code /= 4;
        }
        if !h.is_cg() {
            continue;
        }
        tried += 1;
        if same_pairwise_model(target, &h) {
            return (tried, Some(h));
        }
    }
    (tried, None)
}

/// Runs the demo. A failure is either a chain graph matching the marginal
/// model or the control case (nothing marginalized) finding no match.
pub fn cg_unrepresentability_demo() -> PropertyReport {
    let g = latent_common_cause();
    let m: Vec<bool> = g.nodes().iter().map(|v| v.as_str() == "m").collect();
    let marginal = marginalize_ix(&g, &m);
    let (tried, found) = find_cg_with_model(&marginal);

    let control = g.without(&m);
    let (control_tried, control_found) = find_cg_with_model(&control);

    let counterexample = |graph: MixedGraph, detail: String| Counterexample {
        graph,
        m: Default::default(),
        c: Default::default(),
        m1: Default::default(),
        c1: Default::default(),
        detail,
    };
    let mut failures = 0;
    let mut first = None;
    if let Some(h) = found {
        failures += 1;
        first = Some(counterexample(h, "chain graph with the marginal model".into()));
    }
    if control_found.is_none() {
        failures += 1;
        first.get_or_insert_with(|| counterexample(control, "control graph has no chain graph match".into()));
    }
    PropertyReport {
        property_id: DEMO_ID.to_string(),
        instances: tried + control_tried,
        failures,
        skipped: 0,
        first_counterexample: first,
    }
}
