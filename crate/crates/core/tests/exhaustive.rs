//! Exhaustive agreement between the separation procedures on small graphs.

use chaingraph::propcheck::all_mixed_graphs;
use chaingraph::separation::{
    bounded_walk_oracle, c_separated, moral_separated, sufficient_walk_bound, OracleMode, SeparationQuery,
};
use chaingraph::{MixedGraph, NodeSet};
use rayon::prelude::*;

/// Every `(A, B, C)` with `A` and `B` non-empty.
fn all_queries(g: &MixedGraph) -> Vec<SeparationQuery> {
    let n = g.node_count();
    let mut out = Vec::new();
    for code in 0..4usize.pow(n as u32) {
        let mut parts: [NodeSet; 3] = Default::default();
        let mut rest = code;
        for v in g.nodes() {
            if rest % 4 < 3 {
                parts[rest % 4].insert(v.clone());
            }
            rest /= 4;
        }
        let [a, b, c] = parts;
        if !a.is_empty() && !b.is_empty() {
            out.push(SeparationQuery::new(a, b, c));
        }
    }
    out
}

fn oracle_mismatches(graphs: Vec<MixedGraph>) -> (usize, Vec<String>) {
    let graphs: Vec<MixedGraph> = graphs.into_iter().filter(MixedGraph::is_cmg).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let bound = sufficient_walk_bound(g.node_count());
            all_queries(g).into_iter().filter_map(move |q| {
                let fast = c_separated(g, &q).unwrap();
                let agree = [OracleMode::WalksInC, OracleMode::PathsInAntC]
                    .into_iter()
                    .all(|mode| bounded_walk_oracle(g, &q, bound, mode).unwrap() == fast);
                (!agree).then(|| format!("{:?} {q:?}", g.edges()))
            })
        })
        .collect();
    (graphs.len(), bad)
}

#[test]
fn oracle_agrees_on_all_three_node_multigraphs() {
    let (count, bad) = oracle_mismatches(all_mixed_graphs(3, false));
    assert_eq!(count, 400);
    assert!(bad.is_empty(), "{} mismatches, first {}", bad.len(), bad[0]);
}

#[test]
fn oracle_agrees_on_all_four_node_simple_graphs() {
    let (count, bad) = oracle_mismatches(all_mixed_graphs(4, true));
    assert_eq!(count, 9939);
    assert!(bad.is_empty(), "{} mismatches, first {}", bad.len(), bad[0]);
}

#[test]
fn moral_criterion_agrees_on_all_four_node_chain_graphs() {
    let graphs: Vec<MixedGraph> = all_mixed_graphs(4, true).into_iter().filter(MixedGraph::is_cg).collect();
    assert_eq!(graphs.len(), 1688);
    let bad = graphs
        .par_iter()
        .flat_map_iter(|g| all_queries(g).into_iter().map(move |q| (g, q)))
        .filter(|(g, q)| c_separated(g, q).unwrap() != moral_separated(g, q).unwrap())
        .count();
    assert_eq!(bad, 0);
}

#[test]
fn labeled_chain_graph_counts() {
    let count = |n| all_mixed_graphs(n, true).into_iter().filter(MixedGraph::is_cg).count();
    assert_eq!([count(2), count(3)], [4, 50]);
}
