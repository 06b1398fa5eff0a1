use chaingraph::graphfile::{parse, render};
use chaingraph::propcheck::{labels, random_graph, GeneratorConfig, GraphFamily};
use chaingraph::separation::{c_separated, SeparationQuery};
use chaingraph::transform::{anterialize, condition, marginalize};
use chaingraph::{EdgeKind, MixedGraph, NodeSet};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = GraphFamily> {
    prop_oneof![
        Just(GraphFamily::Cg),
        Just(GraphFamily::Cmg),
        Just(GraphFamily::SimpleCmg),
        Just(GraphFamily::Ang),
    ]
}

fn generated(max_nodes: usize) -> impl Strategy<Value = MixedGraph> {
    (2..=max_nodes, 0.0..=1.0f64, any::<u64>(), family()).prop_map(|(node_count, edge_density, seed, family)| {
        random_graph(&GeneratorConfig { node_count, edge_density, seed, family }).unwrap()
    })
}

/// Any loopless mixed graph, not necessarily a CMG.
fn arbitrary(max_nodes: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize, EdgeKind)>)> {
    (2..=max_nodes).prop_flat_map(|n| {
        let kind = prop_oneof![Just(EdgeKind::Line), Just(EdgeKind::Arrow), Just(EdgeKind::Arc)];
        let edge = (0..n, 1..n, kind).prop_map(move |(x, d, k)| (x, (x + d) % n, k));
        (Just(n), prop::collection::vec(edge, 0..3 * n))
    })
}

fn build(n: usize, edges: &[(usize, usize, EdgeKind)]) -> MixedGraph {
    let names = labels(n);
    let named = edges.iter().map(|&(x, y, k)| (names[x].as_str(), names[y].as_str(), k));
    MixedGraph::build(names.iter().map(|v| v.as_str()), named).unwrap()
}

/// Splits the nodes into `A`, `B`, `C` and the rest using `code`.
fn split(g: &MixedGraph, code: &[u8]) -> (NodeSet, NodeSet, NodeSet) {
    let mut parts: [NodeSet; 4] = Default::default();
    for (v, k) in g.nodes().iter().zip(code) {
        parts[*k as usize % 4].insert(v.clone());
    }
    let [a, b, c, _] = parts;
    (a, b, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn separation_is_symmetric(g in generated(6), code in prop::collection::vec(any::<u8>(), 6)) {
        let (a, b, c) = split(&g, &code);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let q = SeparationQuery::new(a, b, c);
        prop_assert_eq!(c_separated(&g, &q).unwrap(), c_separated(&g, &q.swapped()).unwrap());
    }

    #[test]
    fn set_separation_decomposes_into_pairs(g in generated(6), code in prop::collection::vec(any::<u8>(), 6)) {
        let (a, b, c) = split(&g, &code);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let whole = c_separated(&g, &SeparationQuery::new(a.clone(), b.clone(), c.clone())).unwrap();
        let pairs = a.iter().all(|x| {
            b.iter().all(|y| {
                let q = SeparationQuery::new([x.clone()].into(), [y.clone()].into(), c.clone());
                c_separated(&g, &q).unwrap()
            })
        });
        prop_assert_eq!(whole, pairs);
    }

    #[test]
    fn duplicate_edges_collapse((n, edges) in arbitrary(6)) {
        let once = build(n, &edges);
        let mut twice = edges.clone();
        twice.extend(edges.iter().rev().copied());
        prop_assert_eq!(&build(n, &twice), &once);
        prop_assert!(once.edge_count() <= edges.len());
    }

    #[test]
    fn anteriors_contain_ancestors(g in generated(7)) {
        for v in g.nodes() {
            let ant = g.anteriors(&[v.clone()].into()).unwrap();
            let anc = g.ancestors(v.as_str()).unwrap();
            prop_assert!(anc.is_subset(&ant));
            prop_assert!(!ant.contains(v));
        }
    }

    #[test]
    fn text_format_round_trips((n, edges) in arbitrary(8)) {
        let g = build(n, &edges);
        let text = render(&g);
        let back = parse(&text).unwrap();
        prop_assert_eq!(render(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn transforms_stay_in_class(g in generated(6), code in prop::collection::vec(any::<u8>(), 6)) {
        prop_assume!(g.is_cmg());
        let (m, c, _) = split(&g, &code);
        let marginal = marginalize(&g, &m).unwrap();
        let conditional = condition(&g, &c).unwrap();
        prop_assert!(marginal.is_cmg());
        prop_assert!(conditional.is_cmg());
        prop_assert_eq!(marginal.node_set(), g.node_set().difference(&m).cloned().collect::<NodeSet>());
        if g.is_cg() {
            prop_assert!(conditional.is_cg());
        }
        let ang = anterialize(&g).unwrap();
        prop_assert!(ang.is_ang() && ang.is_simple());
        prop_assert_eq!(anterialize(&ang).unwrap(), ang);
    }
}
