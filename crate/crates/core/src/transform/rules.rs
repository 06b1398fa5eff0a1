//! Rewrite rules shared by the three algorithms.
//!
//! Trislides are matched as (flanking edge at u) x (line component of u with
//! both endpoints removed) x (flanking edge at w). The section may be the
//! single node u = w.

use crate::graph::{EdgeKind, MixedGraph};

/// Repeats `round` until it reports no change.
pub(super) fn fixpoint(g: &mut MixedGraph, mut round: impl FnMut(&mut MixedGraph) -> bool) {
    while round(g) {}
}

/// Closes `g` under the pattern `k => i -- ... -- w <= j` where `anchor(k, i)`
/// selects the edge into `i`. An arrow `j -> w` generates `j -> i`, an arc
/// `j <-> w` generates `i <-> j`.
pub(super) fn close_anchored(g: &mut MixedGraph, anchor: impl Fn(&MixedGraph, usize, usize) -> bool) {
    let n = g.node_count();
    fixpoint(g, |g| {
        let mut changed = false;
        for i in 0..n {
            for k in 0..n {
                if k == i || !anchor(g, k, i) {
                    continue;
                }
                for j in (0..n).filter(|&j| j != i && j != k) {
                    let mut blocked = vec![false; n];
                    blocked[k] = true;
                    blocked[j] = true;
                    let reach = g.line_reach(i, &blocked);
                    let (arrow, arc) = (0..n).filter(|&w| reach[w]).fold((false, false), |(ar, ac), w| {
                        (ar || g.has_arrow(j, w), ac || g.has_arc(j, w))
                    });
                    if arrow {
                        changed |= g.add(j, i, EdgeKind::Arrow);
                    }
                    if arc {
                        changed |= g.add(i, j, EdgeKind::Arc);
                    }
                }
            }
        }
        changed
    });
}

/// Closes `g` under collider trislides `x *-> u -- ... -- w <-* y` whose
/// section satisfies `section_ok(u, x, y)`. Sections are traced through the
/// lines of `lines`. The generated edge between x and y has an arrowhead at
/// x exactly when the edge at x is an arc, likewise at y; `allow(x_arc,
/// y_arc)` filters which flanking combinations fire.
pub(super) fn close_colliders(
    g: &mut MixedGraph,
    lines: &MixedGraph,
    section_ok: impl Fn(usize, usize, usize) -> bool,
    allow: impl Fn(bool, bool) -> bool,
) {
    let n = g.node_count();
    fixpoint(g, |g| {
        let mut changed = false;
        for x in 0..n {
            for y in (0..n).filter(|&y| y != x) {
                let mut blocked = vec![false; n];
                blocked[x] = true;
                blocked[y] = true;
                // Flanking kinds seen at the y end for sections entered from x.
                let mut found = [[false; 2]; 2];
                for u in (0..n).filter(|&u| u != y && g.head_into(x, u) && section_ok(u, x, y)) {
                    let reach = lines.line_reach(u, &blocked);
                    for w in (0..n).filter(|&w| reach[w]) {
                        for (xa, x_arc) in [(g.has_arrow(x, u), false), (g.has_arc(x, u), true)] {
                            for (ya, y_arc) in [(g.has_arrow(y, w), false), (g.has_arc(y, w), true)] {
                                if xa && ya {
                                    found[x_arc as usize][y_arc as usize] = true;
                                }
                            }
                        }
                    }
                }
                for (x_arc, row) in found.iter().enumerate() {
                    for (y_arc, &hit) in row.iter().enumerate() {
                        let (x_arc, y_arc) = (x_arc == 1, y_arc == 1);
                        if hit && allow(x_arc, y_arc) {
                            changed |= g.add_by_heads(x, y, x_arc, y_arc);
                        }
                    }
                }
            }
        }
        changed
    });
}
