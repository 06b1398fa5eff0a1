//! Small named graphs used by tests, examples and the CLI documentation.

use crate::graph::{EdgeKind, MixedGraph};

fn build(nodes: &[&str], edges: &[(&str, &str, EdgeKind)]) -> MixedGraph {
    MixedGraph::build(nodes.iter().copied(), edges.iter().copied()).expect("fixture is well formed")
}

/// `j -> k -> l -- r <- q -> h`. Here `j` and `h` are connected given `{l}`
/// through the collider section `l -- r`.
pub fn worked_example() -> MixedGraph {
    use EdgeKind::*;
    build(
        &["h", "j", "k", "l", "q", "r"],
        &[("j", "k", Arrow), ("k", "l", Arrow), ("l", "r", Line), ("q", "r", Arrow), ("q", "h", Arrow)],
    )
}

/// An anterial graph in which the non-adjacent pair `i`, `j` is connected
/// given every conditioning set.
pub fn non_maximal_ang() -> MixedGraph {
    use EdgeKind::*;
    build(
        &["b", "c", "i", "j"],
        &[("i", "b", Arc), ("b", "c", Arc), ("c", "j", Arc), ("b", "j", Arrow), ("c", "i", Arrow)],
    )
}

/// `i -> k -- l <-> j` with `k -> j`: a collider trislide whose inner node
/// points at an endpoint.
pub fn trislide_with_inner_arrow() -> MixedGraph {
    use EdgeKind::*;
    build(
        &["i", "j", "k", "l"],
        &[("i", "k", Arrow), ("k", "l", Line), ("l", "j", Arc), ("k", "j", Arrow)],
    )
}

/// `c -> a <- m -> b <- d`. Marginalizing `m` leaves a model no chain graph
/// on `{a, b, c, d}` induces.
pub fn latent_common_cause() -> MixedGraph {
    use EdgeKind::*;
    build(
        &["a", "b", "c", "d", "m"],
        &[("c", "a", Arrow), ("d", "b", Arrow), ("m", "a", Arrow), ("m", "b", Arrow)],
    )
}
