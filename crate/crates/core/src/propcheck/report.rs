use std::fmt;

use crate::graph::{MixedGraph, NodeId, NodeSet};
use crate::graphfile::render;

/// A failing instance after shrinking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: MixedGraph,
    pub m: NodeSet,
    pub c: NodeSet,
    pub m1: NodeSet,
    pub c1: NodeSet,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property_id: String,
    pub instances: usize,
    pub failures: usize,
    /// Instances outside the property's side conditions.
    pub skipped: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn list(set: &NodeSet) -> String {
    let names: Vec<&str> = set.iter().map(NodeId::as_str).collect();
    format!("[{}]", names.join(","))
}

fn quoted(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One line: `property=<id> instances=<n> failures=<n> skipped=<n>
/// status=<ok|FAIL>`, followed on failure by the counterexample fields
/// `graph="<edges separated by ;>" m=[..] c=[..] m1=[..] c1=[..] detail="<text>"`.
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "property={} instances={} failures={} skipped={} status={}",
            self.property_id,
            self.instances,
            self.failures,
            self.skipped,
            if self.passed() { "ok" } else { "FAIL" }
        )?;
        if let Some(cx) = &self.first_counterexample {
            let graph = render(&cx.graph);
            let graph: Vec<&str> = graph.lines().collect();
            write!(
                f,
                " graph={} m={} c={} m1={} c1={} detail={}",
                quoted(&graph.join("; ")),
                list(&cx.m),
                list(&cx.c),
                list(&cx.m1),
                list(&cx.c1),
                quoted(&cx.detail)
            )?;
        }
        Ok(())
    }
}
