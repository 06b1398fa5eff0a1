use super::model::for_each_subset_without;
use super::{separated_ix, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, NodeId, Step};
use crate::walk::Walk;

/// Every non-adjacent pair is separated by some conditioning set.
pub fn is_maximal(g: &MixedGraph) -> Result<bool> {
    is_maximal_with_cap(g, ENUMERATION_CAP)
}

pub fn is_maximal_with_cap(g: &MixedGraph, cap: usize) -> Result<bool> {
    g.require_cmg()?;
    let n = g.node_count();
    if n > cap || n > 63 {
        return Err(Error::TooLarge { nodes: n, cap });
    }
    Ok(maximal_ix(g))
}

pub(crate) fn maximal_ix(g: &MixedGraph) -> bool {
    let n = g.node_count();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            g.adjacent(i, j) || for_each_subset_without(n, i, j, |c| separated_ix(g, i, j, c))
        })
    })
}

/// A collider trislide between non-adjacent endpoints with an arrow from one
/// of its inner nodes into an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trislide {
    pub path: Walk,
    /// Inner node the arrow leaves from.
    pub source: NodeId,
    /// Endpoint the arrow points at.
    pub target: NodeId,
}

/// Searches for the trislide pattern above. Finding one proves the graph is
/// not maximal; finding none proves nothing.
pub fn non_maximality_witness(g: &MixedGraph) -> Result<Option<Trislide>> {
    g.require_cmg()?;
    let n = g.node_count();
    for i in 0..n {
        for j in 0..n {
            if i == j || g.adjacent(i, j) {
                continue;
            }
            for u in (0..n).filter(|&u| u != j && g.head_into(i, u)) {
                let mut path = vec![u];
                let mut on_path = vec![false; n];
                on_path[u] = true;
                on_path[i] = true;
                on_path[j] = true;
                if let Some(found) = extend(g, i, j, &mut path, &mut on_path) {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

fn extend(g: &MixedGraph, i: usize, j: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> Option<Trislide> {
    let w = *path.last().unwrap();
    if g.head_into(j, w) {
        let hit = path.iter().find_map(|&x| {
            if g.has_arrow(x, j) {
                Some((x, j))
            } else if g.has_arrow(x, i) {
                Some((x, i))
            } else {
                None
            }
        });
        if let Some((source, target)) = hit {
            return Some(trislide(g, i, j, path, source, target));
        }
    }
    for x in 0..g.node_count() {
        if !on_path[x] && g.has_line(w, x) {
            on_path[x] = true;
            path.push(x);
            let found = extend(g, i, j, path, on_path);
            path.pop();
            on_path[x] = false;
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn trislide(g: &MixedGraph, i: usize, j: usize, section: &[usize], source: usize, target: usize) -> Trislide {
    let head_step = |from: usize, to: usize| {
        if g.has_arrow(from, to) {
            Step::Forward
        } else {
            Step::Arc
        }
    };
    let mut nodes = vec![i];
    let mut steps = vec![head_step(i, section[0])];
    nodes.extend_from_slice(section);
    steps.extend(std::iter::repeat(Step::Line).take(section.len() - 1));
    steps.push(head_step(j, *section.last().unwrap()).reversed());
    nodes.push(j);
    Trislide {
        path: Walk::from_indices(g, &nodes, steps),
        source: g.label(source).clone(),
        target: g.label(target).clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::EdgeKind::*;
    use crate::walk::SectionKind;

    #[test]
    fn non_maximal_ang() {
        let g = fixtures::non_maximal_ang();
        assert!(g.is_ang());
        assert!(!is_maximal(&g).unwrap());
    }

    #[test]
    fn complete_graph_is_maximal() {
        let g = MixedGraph::build(
            ["a", "b", "c"],
            [("a", "b", Arrow), ("b", "c", Line), ("a", "c", Arc)],
        )
        .unwrap();
        assert!(is_maximal(&g).unwrap());
        assert!(non_maximality_witness(&g).unwrap().is_none());
    }

    #[test]
    fn chain_is_maximal() {
        let g = MixedGraph::build(["a", "b", "c"], [("a", "b", Arrow), ("b", "c", Arrow)]).unwrap();
        assert!(is_maximal(&g).unwrap());
    }

    #[test]
    fn witness_pattern() {
        let g = fixtures::trislide_with_inner_arrow();
        let w = non_maximality_witness(&g).unwrap().unwrap();
        assert!(!is_maximal(&g).unwrap());
        let sections = w.path.sections();
        assert_eq!(sections.len(), 3);
        assert_eq!(sections[1].kind, SectionKind::Collider);
        assert_eq!(w.path.to_string(), "i -> k -- l <-> j");
        assert_eq!((w.source.as_str(), w.target.as_str()), ("k", "j"));
    }
}
