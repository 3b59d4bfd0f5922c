use serde::{Deserialize, Serialize};

use super::{Crossing, EdgeId, Embedding, Graph, OuterDart, Vertex};

pub const FORMAT: &str = "fancross-embedding/1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: String,
    n: usize,
    edges: Vec<[Vertex; 2]>,
    crossings: Vec<Vec<Crossing>>,
    rotations: Vec<Vec<EdgeId>>,
    outer: OuterDart,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format {0:?}, expected {FORMAT:?}")]
    Format(String),
}

/// Canonical pretty-printed document; `from_json(to_json(e)) == e`.
pub fn to_json(e: &Embedding) -> String {
    let doc = Document {
        format: FORMAT.to_string(),
        n: e.graph.n,
        edges: e.graph.edges.iter().map(|&(a, b)| [a, b]).collect(),
        crossings: e.crossings.clone(),
        rotations: e.rotations.clone(),
        outer: e.outer,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Parses a document. Structural validity is checked separately by `validate`.
pub fn from_json(text: &str) -> Result<Embedding, DocumentError> {
    let doc: Document = serde_json::from_str(text)?;
    if doc.format != FORMAT {
        return Err(DocumentError::Format(doc.format));
    }
    Ok(Embedding {
        graph: Graph { n: doc.n, edges: doc.edges.into_iter().map(|[a, b]| (a, b)).collect() },
        crossings: doc.crossings,
        rotations: doc.rotations,
        outer: doc.outer,
    })
}

