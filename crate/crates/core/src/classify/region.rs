use crate::embedding::{Dart, EdgeId, Embedding, Planarization, Vertex};

/// Segment mask for whole edges.
pub(crate) fn edge_mask(p: &Planarization, e: &Embedding, edges: &[EdgeId]) -> Vec<bool> {
    let mut mask = vec![false; p.segment_count()];
    for &h in edges {
        for s in p.seg_start[h]..=p.seg_start[h] + e.crossings[h].len() {
            mask[s] = true;
        }
    }
    mask
}

/// Marks the segments of `h` between crossing positions `from` and `to`
/// (tail is -1, head is the list length).
pub(crate) fn mark_span(p: &Planarization, e: &Embedding, mask: &mut [bool], h: EdgeId, from: isize, to: isize) {
    let (lo, hi) = (from.min(to), from.max(to));
    let len = e.crossings[h].len() as isize;
    // Segment i runs from position i-1 to position i.
    for i in (lo + 1)..=hi.min(len) {
        mask[p.seg_start[h] + i as usize] = true;
    }
}

/// Faces reachable from `start` without passing a masked segment.
pub(crate) fn reachable(p: &Planarization, blocked: &[bool], start: usize) -> Vec<bool> {
    let mut seen = vec![false; p.face_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(f) = stack.pop() {
        for &d in p.face_darts(f) {
            if blocked[d / 2] {
                continue;
            }
            let g = p.right_face(d);
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
    }
    seen
}

pub(crate) fn vertex_in(p: &Planarization, reach: &[bool], v: Vertex) -> bool {
    p.node_faces(v).iter().any(|&f| reach[f])
}

/// Any face incident to real vertex `v`.
pub(crate) fn face_at(p: &Planarization, v: Vertex) -> Option<usize> {
    p.node_faces(v).first().copied()
}

/// First dart leaving `v` along `edge`.
pub(crate) fn first_dart(p: &Planarization, e: &Embedding, v: Vertex, edge: EdgeId) -> Dart {
    p.dart_from_vertex(e, v, edge)
}
