use std::collections::BTreeSet;
use std::fmt;

use super::{separated_ix, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, NodeId, NodeSet};

/// `i ⊥ j | given` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Statement {
    pub i: NodeId,
    pub j: NodeId,
    pub given: NodeSet,
}

impl Statement {
    /// Orders the pair. Panics if `i == j` or `given` contains either.
    pub fn new(i: NodeId, j: NodeId, given: NodeSet) -> Self {
        assert!(i != j && !given.contains(&i) && !given.contains(&j));
        if i < j {
            Statement { i, j, given }
        } else {
            Statement { i: j, j: i, given }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let given: Vec<&str> = self.given.iter().map(NodeId::as_str).collect();
        write!(f, "{} ⊥ {} | {{{}}}", self.i, self.j, given.join(", "))
    }
}

/// The pairwise statements a graph induces over its node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceModel {
    ground: NodeSet,
    statements: BTreeSet<Statement>,
}

impl IndependenceModel {
    pub fn new(ground: NodeSet, statements: BTreeSet<Statement>) -> Self {
        IndependenceModel { ground, statements }
    }

    pub fn ground(&self) -> &NodeSet {
        &self.ground
    }

    pub fn statements(&self) -> &BTreeSet<Statement> {
        &self.statements
    }

    pub fn contains(&self, s: &Statement) -> bool {
        self.statements.contains(s)
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// Statements mentioning only nodes of `keep`, over the ground set `keep`.
    pub fn restrict(&self, keep: &NodeSet) -> IndependenceModel {
        let statements = self
            .statements
            .iter()
            .filter(|s| keep.contains(&s.i) && keep.contains(&s.j) && s.given.is_subset(keep))
            .cloned()
            .collect();
        IndependenceModel::new(keep.intersection(&self.ground).cloned().collect(), statements)
    }
}

/// All `(i, j, C)` with `i ⊥ j | C`, using the default node cap.
pub fn pairwise_model(g: &MixedGraph) -> Result<IndependenceModel> {
    pairwise_model_with_cap(g, ENUMERATION_CAP)
}

pub fn pairwise_model_with_cap(g: &MixedGraph, cap: usize) -> Result<IndependenceModel> {
    g.require_cmg()?;
    let n = g.node_count();
    if n > cap || n > 63 {
        return Err(Error::TooLarge { nodes: n, cap });
    }
    let mut statements = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for_each_subset_without(n, i, j, |c| {
                if separated_ix(g, i, j, c) {
                    statements.insert(Statement {
                        i: g.label(i).clone(),
                        j: g.label(j).clone(),
                        given: g.set_of(c),
                    });
                }
                false
            });
        }
    }
    Ok(IndependenceModel::new(g.node_set(), statements))
}

/// Calls `f` on every subset of `0..n` avoiding `i` and `j`, as a mask.
/// Stops early when `f` returns true; the return value says whether it did.
pub(crate) fn for_each_subset_without(
    n: usize,
    i: usize,
    j: usize,
    mut f: impl FnMut(&[bool]) -> bool,
) -> bool {
    let rest: Vec<usize> = (0..n).filter(|&v| v != i && v != j).collect();
    let mut mask = vec![false; n];
    for bits in 0u64..1 << rest.len() {
        for (k, &v) in rest.iter().enumerate() {
            mask[v] = bits >> k & 1 == 1;
        }
        if f(&mask) {
            return true;
        }
    }
    false
}

pub fn models_equal(m1: &IndependenceModel, m2: &IndependenceModel) -> Result<bool> {
    if m1.ground != m2.ground {
        return Err(Error::GroundSetMismatch);
    }
    Ok(m1.statements == m2.statements)
}
