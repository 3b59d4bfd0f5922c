//! Combinatorial embeddings of simple topological graphs.

mod drawing;
mod io;
mod iso;
mod planar;
mod route;
mod surgery;
mod validate;

pub use drawing::{Drawing, DrawingError};
pub use io::{from_json, to_json, DocumentError, FORMAT};
pub use iso::{canonical_code, map_isomorphic, CanonicalCode};
pub use planar::{Dart, NodeKind, Planarization};
pub use route::{Anchor, RouteDirective, Side};
pub use surgery::{Slot, SurgeryError};
pub use validate::{ValidationReport, Violation};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0},{1}}}")]
    Duplicate(Vertex, Vertex),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexRange { vertex: Vertex, n: usize },
}

/// Simple undirected graph; edge ids are list indices, endpoints stored smaller first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::Duplicate(e.0, e.1));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    /// Wheel with hub 0 and rim 1..=k.
    pub fn wheel(k: usize) -> Self {
        let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        for i in 1..=k {
            let j = if i == k { 1 } else { i + 1 };
            edges.push((i.min(j), i.max(j)));
        }
        Graph { n: k + 1, edges }
    }

    /// Triangular prism: triangles 0,1,2 and 3,4,5 joined by 0-3, 1-4, 2-5.
    pub fn prism() -> Self {
        Graph {
            n: 6,
            edges: vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn incident(&self, e: EdgeId, v: Vertex) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn common_vertex(&self, e: EdgeId, f: EdgeId) -> Option<Vertex> {
        let (a, b) = self.edges[e];
        if self.incident(f, a) {
            Some(a)
        } else if self.incident(f, b) {
            Some(b)
        } else {
            None
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// Crossing side: walking the host tail to head, the other edge passes
/// from the host's left to its right (`LR`) or from right to left (`RL`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    LR,
    RL,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::LR => Sign::RL,
            Sign::RL => Sign::LR,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub other: EdgeId,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    Fwd,
    Rev,
}

/// The outer face is the face to the left of this dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OuterDart {
    pub edge: EdgeId,
    pub segment: usize,
    pub dir: Dir,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub graph: Graph,
    /// Per edge, crossings ordered from tail to head.
    pub crossings: Vec<Vec<Crossing>>,
    /// Per vertex, incident edge ids in counterclockwise order.
    pub rotations: Vec<Vec<EdgeId>>,
    pub outer: OuterDart,
}

impl Embedding {
    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn m(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn crossers(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.crossings[e].iter().map(|c| c.other)
    }

    pub fn crosses(&self, e: EdgeId, f: EdgeId) -> bool {
        self.crossings[e].iter().any(|c| c.other == f)
    }

    /// Position of `f` in the crossing list of `e`.
    pub fn crossing_index(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        self.crossings[e].iter().position(|c| c.other == f)
    }

    /// Sign recorded on `e` for its crossing with `f`.
    pub fn sign(&self, e: EdgeId, f: EdgeId) -> Option<Sign> {
        self.crossings[e].iter().find(|c| c.other == f).map(|c| c.sign)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    pub fn planarize(&self) -> Result<Planarization, ValidationReport> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(report);
        }
        Ok(Planarization::build(self))
    }

    /// Reflection: rotations reversed, signs flipped, crossing orders kept.
    pub fn mirror(&self) -> Embedding {
        let mut out = self.clone();
        for rot in &mut out.rotations {
            rot.reverse();
        }
        for list in &mut out.crossings {
            for c in list.iter_mut() {
                c.sign = c.sign.flip();
            }
        }
        out.outer.dir = match out.outer.dir {
            Dir::Fwd => Dir::Rev,
            Dir::Rev => Dir::Fwd,
        };
        out
    }

    /// Relabel vertices by `perm` (old id to new id). Edge ids follow the
    /// sorted order of the relabelled edge list; edges whose tail and head
    /// swap have their crossing lists reversed.
    pub fn relabel(&self, perm: &[Vertex]) -> Embedding {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut keyed: Vec<((Vertex, Vertex), EdgeId)> = self
            .graph
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let (x, y) = (perm[a], perm[b]);
                ((x.min(y), x.max(y)), e)
            })
            .collect();
        keyed.sort();
        let mut new_id = vec![0; self.m()];
        for (i, &(_, e)) in keyed.iter().enumerate() {
            new_id[e] = i;
        }
        self.reindex(perm, &new_id)
    }

    /// Rename vertices and edges; edges flipped by the renaming are reoriented.
    pub(crate) fn reindex(&self, perm: &[Vertex], new_id: &[EdgeId]) -> Embedding {
        let n = self.n();
        let m = self.m();
        let flipped: Vec<bool> = self
            .graph
            .edges
            .iter()
            .map(|&(a, b)| perm[a] > perm[b])
            .collect();
        let mut edges = vec![(0, 0); m];
        let mut crossings = vec![Vec::new(); m];
        for e in 0..m {
            let (a, b) = self.graph.edges[e];
            let (x, y) = (perm[a], perm[b]);
            edges[new_id[e]] = (x.min(y), x.max(y));
            let mut list: Vec<Crossing> = self.crossings[e]
                .iter()
                .map(|c| {
                    // Reversing either edge's orientation flips the sign.
                    let flip = flipped[e] ^ flipped[c.other];
                    Crossing {
                        other: new_id[c.other],
                        sign: if flip { c.sign.flip() } else { c.sign },
                    }
                })
                .collect();
            if flipped[e] {
                list.reverse();
            }
            crossings[new_id[e]] = list;
        }
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            rotations[perm[v]] = self.rotations[v].iter().map(|&e| new_id[e]).collect();
        }
        let o = self.outer;
        let k = self.crossings[o.edge].len();
        let outer = if flipped[o.edge] {
            OuterDart {
                edge: new_id[o.edge],
                segment: k - o.segment,
                dir: match o.dir {
                    Dir::Fwd => Dir::Rev,
                    Dir::Rev => Dir::Fwd,
                },
            }
        } else {
            OuterDart { edge: new_id[o.edge], ..o }
        };
        Embedding {
            graph: Graph { n, edges },
            crossings,
            rotations,
            outer,
        }
    }

    /// Sub-embedding induced by keeping the listed vertices (renumbered in
    /// the given order). The outer face is kept when its dart survives,
    /// otherwise it is reset to the face left of edge 0.
    pub fn induced(&self, keep: &[Vertex]) -> Embedding {
        let mut map = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let drop: Vec<EdgeId> = (0..self.m())
            .filter(|&e| {
                let (a, b) = self.graph.edges[e];
                map[a] == usize::MAX || map[b] == usize::MAX
            })
            .collect();
        let mut sub = self.remove_edges(&drop);
        let mut rotations = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            rotations[i] = std::mem::take(&mut sub.rotations[v]);
        }
        sub.rotations = rotations;
        sub.graph.n = keep.len();
        for e in &mut sub.graph.edges {
            *e = (map[e.0], map[e.1]);
        }
        fix_orientation(&sub)
    }

    /// Remove a set of edges, keeping the remaining ids in order. The outer
    /// dart is remapped when possible.
    pub(crate) fn remove_edges(&self, drop: &[EdgeId]) -> Embedding {
        let m = self.m();
        let mut dead = vec![false; m];
        for &e in drop {
            dead[e] = true;
        }
        let mut new_id = vec![usize::MAX; m];
        let mut next = 0;
        for e in 0..m {
            if !dead[e] {
                new_id[e] = next;
                next += 1;
            }
        }
        let mut edges = Vec::with_capacity(next);
        let mut crossings = Vec::with_capacity(next);
        for e in 0..m {
            if dead[e] {
                continue;
            }
            edges.push(self.graph.edges[e]);
            crossings.push(
                self.crossings[e]
                    .iter()
                    .filter(|c| !dead[c.other])
                    .map(|c| Crossing { other: new_id[c.other], sign: c.sign })
                    .collect(),
            );
        }
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().filter(|&&e| !dead[e]).map(|&e| new_id[e]).collect())
            .collect();
        let mut out = Embedding {
            graph: Graph { n: self.n(), edges },
            crossings,
            rotations,
            outer: OuterDart { edge: 0, segment: 0, dir: Dir::Fwd },
        };
        out.outer = self.remap_outer(&out, &dead, &new_id);
        out
    }

    /// Find a dart of `target` bounding the same face as this embedding's
    /// outer dart after edges marked `dead` are removed.
    fn remap_outer(&self, target: &Embedding, dead: &[bool], new_id: &[EdgeId]) -> OuterDart {
        if target.m() == 0 {
            return OuterDart { edge: 0, segment: 0, dir: Dir::Fwd };
        }
        if let Ok(p) = self.planarize() {
            let start = p.dart_of(self.outer.edge, self.outer.segment, self.outer.dir);
            // Walk the old outer face; the first surviving dart whose edge
            // segment is unchanged identifies the merged face.
            for d in p.face_darts(p.face_of(start)) {
                let (e, seg, dir) = p.dart_edge(*d);
                if dead[e] {
                    continue;
                }
                let seg_new = self.crossings[e][..seg]
                    .iter()
                    .filter(|c| !dead[c.other])
                    .count();
                return OuterDart { edge: new_id[e], segment: seg_new, dir };
            }
        }
        OuterDart { edge: 0, segment: 0, dir: Dir::Fwd }
    }

    /// Embedding with the same sphere map and a different outer face.
    pub fn with_outer(&self, outer: OuterDart) -> Embedding {
        Embedding { outer, ..self.clone() }
    }
}

/// Re-establish tail < head after an arbitrary renumbering of endpoints.
fn fix_orientation(e: &Embedding) -> Embedding {
    let flipped: Vec<bool> = e.graph.edges.iter().map(|&(a, b)| a > b).collect();
    if !flipped.iter().any(|&f| f) {
        return e.clone();
    }
    let mut out = e.clone();
    for i in 0..e.m() {
        let (a, b) = e.graph.edges[i];
        out.graph.edges[i] = (a.min(b), a.max(b));
        let mut list: Vec<Crossing> = e.crossings[i]
            .iter()
            .map(|c| Crossing {
                other: c.other,
                sign: if flipped[i] ^ flipped[c.other] { c.sign.flip() } else { c.sign },
            })
            .collect();
        if flipped[i] {
            list.reverse();
        }
        out.crossings[i] = list;
    }
    let o = e.outer;
    if flipped[o.edge] {
        out.outer = OuterDart {
            edge: o.edge,
            segment: e.crossings[o.edge].len() - o.segment,
            dir: match o.dir {
                Dir::Fwd => Dir::Rev,
                Dir::Rev => Dir::Fwd,
            },
        };
    }
    out
}
