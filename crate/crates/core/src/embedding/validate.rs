use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{EdgeId, Embedding, Planarization, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyGraph,
    VertexOutOfRange { edge: EdgeId, vertex: Vertex },
    SelfLoop { edge: EdgeId },
    EdgeOrientation { edge: EdgeId },
    DuplicateEdge { first: EdgeId, second: EdgeId },
    ListCount { what: &'static str, expected: usize, found: usize },
    CrossingOutOfRange { edge: EdgeId, other: EdgeId },
    SelfCrossing { edge: EdgeId },
    AdjacentCrossing { edge: EdgeId, other: EdgeId },
    DuplicateCrossing { edge: EdgeId, other: EdgeId },
    Reciprocity { edge: EdgeId, other: EdgeId },
    Rotation { vertex: Vertex },
    OuterDart,
    Disconnected { components: usize },
    Euler { vertices: usize, edges: usize, faces: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGraph => write!(f, "graph has no edges"),
            Violation::VertexOutOfRange { edge, vertex } => write!(f, "edge {edge}: vertex {vertex} out of range"),
            Violation::SelfLoop { edge } => write!(f, "edge {edge} is a self-loop"),
            Violation::EdgeOrientation { edge } => write!(f, "edge {edge}: smaller endpoint must come first"),
            Violation::DuplicateEdge { first, second } => write!(f, "edges {first} and {second} are parallel"),
            Violation::ListCount { what, expected, found } => {
                write!(f, "{what}: expected {expected} lists, found {found}")
            }
            Violation::CrossingOutOfRange { edge, other } => write!(f, "edge {edge}: crossing with unknown edge {other}"),
            Violation::SelfCrossing { edge } => write!(f, "edge {edge} crosses itself"),
            Violation::AdjacentCrossing { edge, other } => write!(f, "adjacent edges {edge} and {other} cross"),
            Violation::DuplicateCrossing { edge, other } => write!(f, "edges {edge} and {other} cross more than once"),
            Violation::Reciprocity { edge, other } => {
                write!(f, "crossing of {edge} with {other} lacks an opposite-sign partner record")
            }
            Violation::Rotation { vertex } => write!(f, "rotation at vertex {vertex} does not list its incident edges once each"),
            Violation::OuterDart => write!(f, "outer dart does not exist"),
            Violation::Disconnected { components } => write!(f, "planarization has {components} components"),
            Violation::Euler { vertices, edges, faces } => {
                write!(f, "Euler check failed: {vertices} - {edges} + {faces} != 2")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Planarization counts when the input was structurally sound.
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
    pub faces: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(super) fn validate(e: &Embedding) -> ValidationReport {
    let mut out = Vec::new();
    let n = e.n();
    let m = e.m();
    if m == 0 {
        out.push(Violation::EmptyGraph);
    }
    if e.crossings.len() != m {
        out.push(Violation::ListCount { what: "crossings", expected: m, found: e.crossings.len() });
    }
    if e.rotations.len() != n {
        out.push(Violation::ListCount { what: "rotations", expected: n, found: e.rotations.len() });
    }
    let mut seen = std::collections::HashMap::new();
    for (i, &(a, b)) in e.graph.edges.iter().enumerate() {
        for v in [a, b] {
            if v >= n {
                out.push(Violation::VertexOutOfRange { edge: i, vertex: v });
            }
        }
        if a == b {
            out.push(Violation::SelfLoop { edge: i });
        } else if a > b {
            out.push(Violation::EdgeOrientation { edge: i });
        }
        if let Some(&j) = seen.get(&(a.min(b), a.max(b))) {
            out.push(Violation::DuplicateEdge { first: j, second: i });
        } else {
            seen.insert((a.min(b), a.max(b)), i);
        }
    }
    if !out.is_empty() {
        return ValidationReport { violations: out, vertices: None, edges: None, faces: None };
    }

    let mut structural = false;
    let mut pairs = HashSet::new();
    for a in 0..m {
        for c in &e.crossings[a] {
            let b = c.other;
            if b >= m {
                out.push(Violation::CrossingOutOfRange { edge: a, other: b });
                structural = true;
                continue;
            }
            if b == a {
                out.push(Violation::SelfCrossing { edge: a });
                structural = true;
                continue;
            }
            if e.graph.adjacent(a, b) && a < b {
                out.push(Violation::AdjacentCrossing { edge: a, other: b });
            }
            if !pairs.insert((a, b)) {
                out.push(Violation::DuplicateCrossing { edge: a, other: b });
                structural = true;
                continue;
            }
            let back: Vec<_> = e.crossings[b].iter().filter(|d| d.other == a).collect();
            if back.len() != 1 || back[0].sign != c.sign.flip() {
                out.push(Violation::Reciprocity { edge: a, other: b });
                structural = true;
            }
        }
    }
    for v in 0..n {
        let rot = &e.rotations[v];
        let mut expected: Vec<EdgeId> = (0..m).filter(|&i| e.graph.incident(i, v)).collect();
        let mut got = rot.clone();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            out.push(Violation::Rotation { vertex: v });
            structural = true;
        }
    }
    if m > 0 && (e.outer.edge >= m || e.outer.segment > e.crossings[e.outer.edge].len()) {
        out.push(Violation::OuterDart);
    }
    if structural || m == 0 {
        return ValidationReport { violations: out, vertices: None, edges: None, faces: None };
    }
    let p = Planarization::build(e);
    let comps = p.components();
    if comps != 1 {
        out.push(Violation::Disconnected { components: comps });
    }
    let (nv, ne, nf) = (p.node_count(), p.segment_count(), p.face_count());
    if comps == 1 && p.euler() != 2 {
        out.push(Violation::Euler { vertices: nv, edges: ne, faces: nf });
    }
    ValidationReport { violations: out, vertices: Some(nv), edges: Some(ne), faces: Some(nf) }
}
