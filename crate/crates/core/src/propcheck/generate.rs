use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph, NodeId};
use crate::transform::anterialize_ix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Cg,
    Cmg,
    /// Chain mixed graphs without multi-edges.
    SimpleCmg,
    Ang,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    /// Between 2 and 8.
    pub node_count: usize,
    /// Probability of each candidate edge, in `[0, 1]`.
    pub edge_density: f64,
    pub seed: u64,
    pub family: GraphFamily,
}

/// Node labels `a`, `b`, ... for generated graphs.
pub fn labels(n: usize) -> Vec<NodeId> {
    (0..n)
        .map(|k| NodeId::new(((b'a' + k as u8) as char).to_string()).unwrap())
        .collect()
}

pub fn random_graph(cfg: &GeneratorConfig) -> Result<MixedGraph> {
    if !(2..=8).contains(&cfg.node_count) {
        return Err(Error::InvalidConfig(format!(
            "node_count {} outside 2..=8",
            cfg.node_count
        )));
    }
    if !(0.0..=1.0).contains(&cfg.edge_density) {
        return Err(Error::InvalidConfig(format!(
            "edge_density {} outside [0, 1]",
            cfg.edge_density
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(sample(&mut rng, cfg.node_count, cfg.edge_density, cfg.family))
}

pub(crate) fn sample(rng: &mut impl Rng, n: usize, p: f64, family: GraphFamily) -> MixedGraph {
    let mut g = MixedGraph::empty(labels(n));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut comp = vec![0; n];
    let mut current = 0;
    for (k, &v) in order.iter().enumerate() {
        if k > 0 && rng.gen_bool(0.5) {
            current += 1;
        }
        comp[v] = current;
    }
    for x in 0..n {
        for y in x + 1..n {
            if !rng.gen_bool(p) {
                continue;
            }
            match comp[x].cmp(&comp[y]) {
                std::cmp::Ordering::Equal => g.add(x, y, EdgeKind::Line),
                std::cmp::Ordering::Greater => g.add(x, y, EdgeKind::Arrow),
                std::cmp::Ordering::Less => g.add(y, x, EdgeKind::Arrow),
            };
        }
    }
    if family == GraphFamily::Cg {
        return g;
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    pairs.shuffle(rng);
    for &(x, y) in &pairs {
        if family == GraphFamily::SimpleCmg && g.adjacent(x, y) {
            continue;
        }
        if rng.gen_bool(p / 2.0) {
            g.add(x, y, EdgeKind::Arc);
        }
        if rng.gen_bool(p / 3.0) {
            let (x, y, kind) = match rng.gen_range(0..3) {
                0 => (x, y, EdgeKind::Line),
                1 => (x, y, EdgeKind::Arrow),
                _ => (y, x, EdgeKind::Arrow),
            };
            if family == GraphFamily::SimpleCmg && g.adjacent(x, y) {
                continue;
            }
            if g.add(x, y, kind) && !g.is_cmg() {
                g.remove(x, y, kind);
            }
        }
    }
    match family {
        GraphFamily::Ang => anterialize_ix(&g),
        _ => g,
    }
}
