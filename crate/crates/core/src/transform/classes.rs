use crate::error::{Error, Result};
use crate::graph::MixedGraph;

/// Membership in the class of marginalized and conditioned chain graphs.
///
/// Every collider trislide `k <-> i -- ... -- j <- l` must come with
/// `l -> i`, and every `k <-> i -- ... -- j <-> l` with arcs `k <-> j`,
/// `i <-> l` and `i <-> j`.
pub fn in_class_h(g: &MixedGraph) -> Result<bool> {
    g.require_cmg()?;
    Ok(trislides_close(g, |g, k, i, j, l| {
        g.has_arc(k, j) && g.has_arc(i, l) && g.has_arc(i, j)
    }))
}

/// The anterial counterpart of [`in_class_h`]: the arc-ended pattern needs
/// arcs `j <-> k`, `i <-> l` and a line `i -- j` instead.
pub fn in_class_k(g: &MixedGraph) -> Result<bool> {
    if !g.is_ang() {
        return Err(Error::NotAnAng);
    }
    Ok(trislides_close(g, |g, k, i, j, l| {
        g.has_arc(j, k) && g.has_arc(i, l) && g.has_line(i, j)
    }))
}

fn trislides_close(
    g: &MixedGraph,
    arc_ended: impl Fn(&MixedGraph, usize, usize, usize, usize) -> bool,
) -> bool {
    let n = g.node_count();
    for i in 0..n {
        for k in (0..n).filter(|&k| g.has_arc(k, i)) {
            for l in (0..n).filter(|&l| l != i && l != k) {
                let mut blocked = vec![false; n];
                blocked[k] = true;
                blocked[l] = true;
                let reach = g.line_reach(i, &blocked);
                for j in (0..n).filter(|&j| j != i && reach[j]) {
                    if g.has_arrow(l, j) && !g.has_arrow(l, i) {
                        return false;
                    }
                    if g.has_arc(j, l) && !arc_ended(g, k, i, j, l) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind::*;

    #[test]
    fn chain_graphs_belong() {
        let g = MixedGraph::build(
            ["a", "b", "c", "d"],
            [("a", "b", Arrow), ("b", "c", Line), ("d", "c", Arrow)],
        )
        .unwrap();
        assert!(in_class_h(&g).unwrap());
        assert!(in_class_k(&g).unwrap());
    }

    #[test]
    fn arrow_ended_trislide_without_shortcut() {
        let g = MixedGraph::build(
            ["i", "j", "k", "l"],
            [("k", "i", Arc), ("i", "j", Line), ("l", "j", Arrow)],
        )
        .unwrap();
        assert!(!in_class_h(&g).unwrap());
        let mut fixed = g.clone();
        fixed.add(3, 0, crate::graph::EdgeKind::Arrow);
        assert!(in_class_h(&fixed).unwrap());
    }

    #[test]
    fn arc_ended_trislide() {
        let g = MixedGraph::build(
            ["i", "j", "k", "l"],
            [("k", "i", Arc), ("i", "j", Line), ("j", "l", Arc)],
        )
        .unwrap();
        assert!(!in_class_k(&g).unwrap());
        assert!(!in_class_h(&g).unwrap());
        let k_shape = MixedGraph::build(
            ["i", "j", "k", "l"],
            [("k", "i", Arc), ("i", "j", Line), ("j", "l", Arc), ("j", "k", Arc), ("i", "l", Arc)],
        )
        .unwrap();
        assert!(in_class_k(&k_shape).unwrap());
    }

    #[test]
    fn k_requires_anterial_graph() {
        let g = MixedGraph::build(["a", "b"], [("a", "b", Arc), ("a", "b", Arrow)]).unwrap();
        assert_eq!(in_class_k(&g), Err(Error::NotAnAng));
    }
}
