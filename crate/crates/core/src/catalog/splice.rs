//! Fat edges: an uncrossed edge replaced by a copy of a gadget embedding.

use thiserror::Error;

use crate::embedding::{Crossing, Drawing, EdgeId, Embedding, OuterDart, Planarization, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpliceError {
    #[error("edge {0} is crossed")]
    Crossed(EdgeId),
    #[error("gadget has no edge between its ends {0} and {1}")]
    NoEnds(Vertex, Vertex),
    #[error("gadget ends {0} and {1} do not lie once each on its outer face")]
    EndsNotOuter(Vertex, Vertex),
    #[error("spliced embedding is invalid")]
    Invalid,
}

/// Replaces the uncrossed edge `fat` by a copy of `gadget` whose vertices
/// `ends` are identified with the endpoints of `fat` (the smaller end with
/// `ends.0`). The gadget edge between its ends takes the id of `fat`; the
/// other gadget vertices and edges are appended. The gadget's outer face is
/// the side that faces the rest of the embedding.
pub fn splice_fat_edge(
    base: &Embedding,
    fat: EdgeId,
    gadget: &Embedding,
    ends: (Vertex, Vertex),
) -> Result<Embedding, SpliceError> {
    if !base.crossings[fat].is_empty() {
        return Err(SpliceError::Crossed(fat));
    }
    let (p, q) = ends;
    let link = gadget.graph.find_edge(p, q).ok_or(SpliceError::NoEnds(p, q))?;
    let gp = Planarization::build(gadget);
    let outer = gp.outer_face;
    let on_outer = gp.face_vertices(outer);
    if [p, q].iter().any(|w| on_outer.iter().filter(|&x| x == w).count() != 1) {
        return Err(SpliceError::EndsNotOuter(p, q));
    }
    let (bp, bq) = base.graph.edges[fat];
    let (n0, m0) = (base.n(), base.m());

    let mut vmap = vec![0; gadget.n()];
    let mut next = n0;
    for (w, slot) in vmap.iter_mut().enumerate() {
        *slot = if w == p {
            bp
        } else if w == q {
            bq
        } else {
            next += 1;
            next - 1
        };
    }
    let mut emap = vec![0; gadget.m()];
    let mut next_e = m0;
    for (g, slot) in emap.iter_mut().enumerate() {
        *slot = if g == link {
            fat
        } else {
            next_e += 1;
            next_e - 1
        };
    }
    let flipped: Vec<bool> = gadget.graph.edges.iter().map(|&(a, b)| vmap[a] > vmap[b]).collect();

    let mut out = base.clone();
    out.graph.n = next;
    out.rotations.resize(next, Vec::new());
    out.graph.edges.resize(next_e, (0, 0));
    out.crossings.resize(next_e, Vec::new());
    for g in 0..gadget.m() {
        let (a, b) = gadget.graph.edges[g];
        let (x, y) = (vmap[a], vmap[b]);
        out.graph.edges[emap[g]] = (x.min(y), x.max(y));
        let mut list: Vec<Crossing> = gadget.crossings[g]
            .iter()
            .map(|c| Crossing {
                other: emap[c.other],
                sign: if flipped[g] ^ flipped[c.other] { c.sign.flip() } else { c.sign },
            })
            .collect();
        if flipped[g] {
            list.reverse();
        }
        out.crossings[emap[g]] = list;
    }
    for w in 0..gadget.n() {
        let rot = &gadget.rotations[w];
        if w != p && w != q {
            out.rotations[vmap[w]] = rot.iter().map(|&g| emap[g]).collect();
            continue;
        }
        // Gadget edges at an end, starting right after the outer wedge.
        let j = (0..rot.len())
            .find(|&j| gp.left_face(gp.dart_from_vertex(gadget, w, rot[j])) == outer)
            .expect("end lies on the outer face");
        let seq: Vec<EdgeId> = rot[j + 1..].iter().chain(&rot[..=j]).map(|&g| emap[g]).collect();
        let at = &mut out.rotations[vmap[w]];
        let i = at.iter().position(|&x| x == fat).expect("fat edge at its end");
        at.splice(i..=i, seq);
    }
    if base.outer.edge == fat {
        out.outer = outer_off(base, fat);
    }
    if !out.is_valid() {
        return Err(SpliceError::Invalid);
    }
    Ok(out)
}

/// A dart of the base outer face that does not run along `fat`.
fn outer_off(base: &Embedding, fat: EdgeId) -> OuterDart {
    let p = Planarization::build(base);
    p.faces[p.outer_face]
        .iter()
        .map(|&d| p.dart_edge(d))
        .find(|&(e, _, _)| e != fat)
        .map(|(edge, segment, dir)| OuterDart { edge, segment, dir })
        .unwrap_or(base.outer)
}

/// Vertex names of graph M.
pub mod m {
    use crate::Vertex;

    pub const T: Vertex = 0;
    pub const V: Vertex = 1;
    pub const Y: Vertex = 2;
    pub const B: Vertex = 3;
    pub const A: Vertex = 4;
    pub const T2: Vertex = 5;
    pub const V2: Vertex = 6;
    pub const Y2: Vertex = 7;
    pub const B2: Vertex = 8;
    pub const A2: Vertex = 9;
    pub const U: Vertex = 10;
    pub const S: Vertex = 11;
    pub const X: Vertex = 12;
    pub const W: Vertex = 13;
    pub const Z: Vertex = 14;

    pub const NAMES: [&str; 15] = ["t", "v", "y", "b", "a", "t'", "v'", "y'", "b'", "a'", "u", "s", "x", "w", "z"];

    pub const FAT: [(Vertex, Vertex); 24] = [
        (T, V),
        (V, Y),
        (Y, B),
        (B, A),
        (A, T),
        (T2, V2),
        (V2, Y2),
        (Y2, B2),
        (B2, A2),
        (A2, T2),
        (T, T2),
        (V, V2),
        (Y, Y2),
        (B, B2),
        (A, A2),
        (T, U),
        (U, X),
        (X, W),
        (W, Z),
        (Z, T),
        (X, Z),
        (T, S),
        (S, U),
        (S, Z),
    ];

    pub const ORDINARY: [(Vertex, Vertex); 9] =
        [(T, Y), (B, V), (U, A), (U, B), (U, V), (U, W), (V, W), (V, Z), (T, X)];
}

/// Graph M with every fat edge drawn as a single uncrossed edge.
pub fn m_skeleton() -> Embedding {
    use m::*;
    let mut pts = vec![(0.0, 0.0); 15];
    let place = [
        (T, (0.0, 10.0)),
        (V, (10.0, 3.0)),
        (Y, (6.0, -9.0)),
        (B, (-6.0, -9.0)),
        (A, (-10.0, 3.0)),
        (T2, (0.0, 20.0)),
        (V2, (20.0, 6.0)),
        (Y2, (12.0, -18.0)),
        (B2, (-12.0, -18.0)),
        (A2, (-20.0, 6.0)),
        (U, (-3.0, 6.0)),
        (S, (0.0, 7.0)),
        (X, (-2.0, 2.0)),
        (W, (2.0, 2.0)),
        (Z, (3.0, 6.0)),
    ];
    for (v, xy) in place {
        pts[v] = xy;
    }
    let mut d = Drawing::new(pts);
    for (u, v) in FAT {
        d.line(u, v);
    }
    d.poly(T, Y, &[(4.0, 6.5)])
        .poly(B, V, &[(5.5, -7.5)])
        .line(U, A)
        .poly(U, B, &[(-4.5, -1.0)])
        .poly(U, V, &[(-3.5, -3.0), (4.0, -4.0), (8.0, -1.0)])
        .poly(U, W, &[(-3.0, -0.5), (1.0, -0.5)])
        .line(V, W)
        .line(V, Z)
        .poly(T, X, &[(-4.0, 6.8), (-6.0, 1.0), (-4.0, -2.0), (-2.0, -1.5)]);
    d.to_embedding().expect("skeleton drawing is simple")
}

/// Graph M: the skeleton with every fat edge replaced by `gadget`.
pub fn build_graph_m(gadget: &Embedding, ends: (Vertex, Vertex)) -> Result<Embedding, SpliceError> {
    let mut e = m_skeleton();
    for fat in 0..m::FAT.len() {
        e = splice_fat_edge(&e, fat, gadget, ends)?;
    }
    Ok(e)
}
