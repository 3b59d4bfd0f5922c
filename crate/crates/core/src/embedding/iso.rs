use std::collections::VecDeque;

use super::{Embedding, NodeKind, Planarization};

/// Canonical form of the sphere map underlying an embedding: the minimum
/// breadth-first code over all start darts at minimum-degree real vertices
/// and both orientations. The outer face is ignored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

pub fn canonical_code(e: &Embedding) -> CanonicalCode {
    let p = Planarization::build(e);
    let min_deg = (0..p.n).map(|v| p.node_darts[v].len()).min().unwrap_or(0);
    let mut best: Option<Vec<u32>> = None;
    let mut buf = Vec::new();
    for v in 0..p.n {
        if p.node_darts[v].len() != min_deg {
            continue;
        }
        for &d in &p.node_darts[v] {
            for reverse in [false, true] {
                buf.clear();
                if bfs_code(&p, d, reverse, best.as_deref(), &mut buf) {
                    best = Some(buf.clone());
                }
            }
        }
    }
    let mut code = best.unwrap_or_default();
    // Sizes up front so codes of different maps never collide by prefix.
    code.splice(0..0, [p.node_count() as u32, p.segment_count() as u32]);
    CanonicalCode(code)
}

/// Writes the code for one start into `out`; returns true when it is
/// strictly smaller than `bound` (or no bound is set). Aborts early once
/// the code is known to be larger.
fn bfs_code(p: &Planarization, start: usize, reverse: bool, bound: Option<&[u32]>, out: &mut Vec<u32>) -> bool {
    let nn = p.node_count();
    let mut label = vec![u32::MAX; nn];
    let mut reference = vec![usize::MAX; nn];
    let mut queue = VecDeque::new();
    let s = p.origin[start];
    label[s] = 0;
    reference[s] = start;
    queue.push_back(s);
    let mut next_label = 1u32;
    let step = |d: usize| if reverse { p.rot_prev[d] } else { p.rot_next[d] };
    let mut less = bound.is_none();
    let mut emit = |x: u32, out: &mut Vec<u32>| -> bool {
        let i = out.len();
        out.push(x);
        if !less {
            if let Some(b) = bound {
                match x.cmp(&b[i]) {
                    std::cmp::Ordering::Less => less = true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    };
    while let Some(x) = queue.pop_front() {
        let kind = match p.nodes[x] {
            NodeKind::Real(_) => 0,
            NodeKind::Cross(..) => 1,
        };
        let deg = p.node_darts[x].len() as u32;
        if !emit(kind, out) || !emit(deg, out) {
            return false;
        }
        let mut d = reference[x];
        for _ in 0..deg {
            let w = p.origin[d ^ 1];
            if label[w] == u32::MAX {
                label[w] = next_label;
                next_label += 1;
                reference[w] = d ^ 1;
                queue.push_back(w);
            }
            // Offset of the twin within the target's rotation.
            let mut off = 0u32;
            let mut t = reference[w];
            while t != d ^ 1 {
                t = step(t);
                off += 1;
            }
            if !emit(label[w], out) || !emit(off, out) {
                return false;
            }
            d = step(d);
        }
    }
    less
}

/// Sphere isomorphism of the planarizations (relabelling allowed,
/// reflection counts as isomorphic, outer face ignored).
pub fn map_isomorphic(a: &Embedding, b: &Embedding) -> bool {
    if a.n() != b.n() || a.m() != b.m() || a.crossing_count() != b.crossing_count() {
        return false;
    }
    canonical_code(a) == canonical_code(b)
}
