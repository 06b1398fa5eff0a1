use std::collections::VecDeque;

use super::{Masks, SeparationQuery};
use crate::error::Result;
use crate::graph::MixedGraph;

/// Separation by the moralization criterion, for chain graphs only.
///
/// Restricts to `A ∪ B ∪ C` and its anteriors, moralizes, and asks whether
/// every path from `A` to `B` passes through `C`.
pub fn moral_separated(g: &MixedGraph, q: &SeparationQuery) -> Result<bool> {
    g.require_cg()?;
    let m = Masks::resolve(g, q)?;
    if m.trivially_separated() {
        return Ok(true);
    }
    let n = g.node_count();
    let base: Vec<bool> = (0..n).map(|v| m.a[v] || m.b[v] || m.c[v]).collect();
    let ant = g.anteriors_mask(&base);
    let keep: Vec<bool> = (0..n).map(|v| base[v] || ant[v]).collect();
    let index: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let moral = g.restrict(&keep).moralize();

    let mut seen = vec![false; index.len()];
    let mut queue = VecDeque::new();
    for (k, &v) in index.iter().enumerate() {
        if m.a[v] {
            seen[k] = true;
            queue.push_back(k);
        }
    }
    while let Some(k) = queue.pop_front() {
        if m.b[index[k]] {
            return Ok(false);
        }
        for (w, &v) in index.iter().enumerate() {
            if !seen[w] && !m.c[v] && moral.has_line(k, w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(true)
}
