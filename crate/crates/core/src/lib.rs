//! Chain graphs, chain mixed graphs and anterial graphs.
//!
//! [`MixedGraph`] holds lines, arrows and arcs. On top of it the crate
//! decides c-separation ([`separation`]), marginalizes and conditions
//! ([`transform`]), reads and writes a plain-text graph format
//! ([`graphfile`]) and checks the model-level guarantees of the transforms
//! on random graphs ([`propcheck`]).

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graphfile;
pub mod propcheck;
pub mod separation;
mod structure;
pub mod transform;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{node_set, Edge, EdgeKind, MixedGraph, NodeId, NodeSet, Step};
pub use structure::GraphClass;
pub use walk::{Section, SectionKind, Walk};
