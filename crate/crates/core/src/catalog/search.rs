//! Construction by adding edges through sequences of faces.

use crate::embedding::{Dir, EdgeId, Embedding, Planarization, Slot, Vertex};

/// A course for a new edge: the darts it crosses from left to right, and its
/// corners at both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRoute {
    pub path: Vec<(EdgeId, usize, Dir)>,
    pub slots: (Slot, Slot),
}

impl DualRoute {
    pub fn apply(&self, e: &Embedding, u: Vertex, v: Vertex) -> Option<Embedding> {
        e.insert_edge_through(u, v, &self.path, self.slots).ok()
    }
}

/// Where an endpoint without edges sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Home {
    Face(usize),
    /// The face around a vertex of degree one.
    With(Vertex),
}

fn corners(e: &Embedding, p: &Planarization, w: Vertex, home: Option<Home>) -> Vec<(usize, Slot)> {
    let rot = &e.rotations[w];
    if rot.is_empty() {
        let face = match home {
            Some(Home::Face(f)) => f,
            Some(Home::With(x)) => p.left_face(p.dart_from_vertex(e, x, e.rotations[x][0])),
            None => return Vec::new(),
        };
        return vec![(face, Slot::Auto)];
    }
    rot.iter().map(|&h| (p.left_face(p.dart_from_vertex(e, w, h)), Slot::After(h))).collect()
}

/// All courses of a new edge `{u,v}` with at most `max` crossings that
/// visit no face twice, fewest crossings first.
pub fn dual_routes(e: &Embedding, u: Vertex, v: Vertex, home: Option<Home>, max: usize) -> Vec<DualRoute> {
    let p = Planarization::build(e);
    let starts = corners(e, &p, u, home);
    let ends = corners(e, &p, v, home);
    let mut out = Vec::new();
    for &(f0, su) in &starts {
        let mut path = Vec::new();
        let mut seen = vec![false; p.face_count()];
        walk(e, &p, (u, v), f0, su, &ends, max, &mut path, &mut seen, &mut out);
    }
    out.sort_by_key(|r| r.path.len());
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    e: &Embedding,
    p: &Planarization,
    (u, v): (Vertex, Vertex),
    face: usize,
    su: Slot,
    ends: &[(usize, Slot)],
    max: usize,
    path: &mut Vec<(EdgeId, usize, Dir)>,
    seen: &mut Vec<bool>,
    out: &mut Vec<DualRoute>,
) {
    seen[face] = true;
    for &(f, sv) in ends {
        if f == face {
            out.push(DualRoute { path: path.clone(), slots: (su, sv) });
        }
    }
    if path.len() < max {
        for &d in p.face_darts(face) {
            let (h, seg, dir) = p.dart_edge(d);
            let next = p.right_face(d);
            if seen[next] || e.graph.incident(h, u) || e.graph.incident(h, v) || path.iter().any(|&(x, _, _)| x == h) {
                continue;
            }
            path.push((h, seg, dir));
            walk(e, p, (u, v), next, su, ends, max, path, seen, out);
            path.pop();
        }
    }
    seen[face] = false;
}

/// One new edge of an extension, with the placement of an endpoint that
/// has no edges yet.
#[derive(Debug, Clone, Copy)]
pub struct Step {
    pub u: Vertex,
    pub v: Vertex,
    pub home: Option<Home>,
}

/// Depth-first search for courses of all `steps` such that every partial
/// embedding satisfies `keep`; each edge crosses at most `max` times. A step
/// may name the next new vertex, which is then created.
pub fn extend(e: &Embedding, steps: &[Step], max: usize, keep: &dyn Fn(&Embedding) -> bool) -> Option<Embedding> {
    let Some((s, rest)) = steps.split_first() else {
        return Some(e.clone());
    };
    let grown;
    let e = if s.u.max(s.v) >= e.n() {
        grown = with_vertices(e, s.u.max(s.v) + 1 - e.n());
        &grown
    } else {
        e
    };
    dual_routes(e, s.u, s.v, s.home, max)
        .into_iter()
        .filter_map(|r| r.apply(e, s.u, s.v))
        .filter(|next| keep(next))
        .find_map(|next| extend(&next, rest, max, keep))
}

/// The embedding with `k` additional vertices without edges.
pub fn with_vertices(e: &Embedding, k: usize) -> Embedding {
    let mut out = e.clone();
    out.graph.n += k;
    out.rotations.extend(std::iter::repeat_with(Vec::new).take(k));
    out
}
