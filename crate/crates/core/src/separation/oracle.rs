//! Reference check by bounded walk enumeration.
//!
//! Walks are grown one edge at a time. Two walk prefixes that end in the same
//! checker state accept exactly the same continuations, so prefixes are
//! collapsed by state and each layer of the search is one more edge. This
//! visits every walk of length at most `maxlen` without listing them.

use std::collections::HashSet;

use super::{Masks, SeparationQuery};
use crate::error::{Error, Result};
use crate::graph::MixedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    /// Collider sections meet `C`, all other sections avoid it.
    #[default]
    WalksInC,
    /// Every section is a path, collider sections lie inside `C` and its
    /// anteriors, all other sections avoid `C`.
    PathsInAntC,
}

/// Smallest accepted `maxlen` for a graph on `n` nodes.
pub fn minimum_walk_bound(n: usize) -> usize {
    2 * n * n
}

/// Default `maxlen` for a graph on `n` nodes.
pub fn sufficient_walk_bound(n: usize) -> usize {
    4 * n * n
}

/// True when no walk of at most `maxlen` edges connects `q.a` and `q.b`
/// under the criterion selected by `mode`.
pub fn bounded_walk_oracle(
    g: &MixedGraph,
    q: &SeparationQuery,
    maxlen: usize,
    mode: OracleMode,
) -> Result<bool> {
    g.require_cmg()?;
    let n = g.node_count();
    let required = minimum_walk_bound(n);
    if maxlen < required {
        return Err(Error::BoundTooSmall { maxlen, required });
    }
    if n > 64 {
        return Err(Error::TooLarge { nodes: n, cap: 64 });
    }
    let m = Masks::resolve(g, q)?;
    if m.trivially_separated() {
        return Ok(true);
    }
    let in_c = bits_of(&m.c);
    let collider_ok = match mode {
        OracleMode::WalksInC => u64::MAX,
        OracleMode::PathsInAntC => in_c | bits_of(&g.anteriors_mask(&m.c)),
    };
    let paths = mode == OracleMode::PathsInAntC;

    // (node, entered with an arrowhead, nodes of the current section)
    let mut frontier: Vec<(usize, bool, u64)> = Vec::new();
    let mut seen: HashSet<(usize, bool, u64)> = HashSet::new();
    for v in (0..n).filter(|&v| m.a[v]) {
        let state = (v, false, if paths { 1u64 << v } else { 0 });
        seen.insert(state);
        frontier.push(state);
    }
    for depth in 0..=maxlen {
        let mut next = Vec::new();
        for &(v, entry_head, section) in &frontier {
            if m.b[v] && section & in_c == 0 {
                return Ok(false);
            }
            if depth == maxlen {
                continue;
            }
            for (x, step) in g.steps_from(v) {
                let state = if step.is_line() {
                    if paths && section & (1 << x) != 0 {
                        continue;
                    }
                    let section = if paths { section | 1 << x } else { section | ((1 << x) & in_c) };
                    (x, entry_head, section)
                } else {
                    let collider = entry_head && step.head_at_source();
                    let valid = if collider {
                        section & in_c != 0 || paths
                    } else {
                        section & in_c == 0
                    };
                    if !valid || (collider && section & !collider_ok != 0) {
                        continue;
                    }
                    let fresh = if paths { 1 << x } else { (1 << x) & in_c };
                    (x, step.head_at_target(), fresh)
                };
                if seen.insert(state) {
                    next.push(state);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(true)
}

fn bits_of(mask: &[bool]) -> u64 {
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .fold(0, |acc, (v, _)| acc | 1 << v)
}
