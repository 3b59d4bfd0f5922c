//! Simple topological graphs as combinatorial embeddings: validation,
//! crossing-pattern classification, rerouting transformations toward
//! fan-crossing and fan-planar embeddings, and an exhaustive enumerator
//! used as an independent oracle.

pub mod embedding;

pub use embedding::{Crossing, Dir, EdgeId, Embedding, Graph, OuterDart, Sign, Vertex};
pub mod catalog;
pub mod classify;
pub mod enumerate;
pub mod reroute;
