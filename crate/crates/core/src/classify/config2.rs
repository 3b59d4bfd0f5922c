use std::collections::BTreeMap;

use serde::Serialize;

use super::region::{mark_span, reachable, vertex_in};
use super::{covered_by, crossed_from, is_adjacency_crossing, sign_from, ClassifyError};
use crate::embedding::{EdgeId, Embedding, Planarization, Sign, Vertex};

/// Which base endpoint a curved crosser encloses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveSide {
    /// Encloses the tail `u` of the base.
    Left,
    /// Encloses the head `v` of the base.
    Right,
}

/// A base edge crossed from both sides by edges sharing the apex `t`.
/// Straight crossers have `t` on the left of the base (tail to head),
/// curved ones on the right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigIIInstance {
    pub base: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    pub apex: Vertex,
    /// In crossing order along the base.
    pub straight: Vec<EdgeId>,
    pub curved: Vec<(EdgeId, CurveSide)>,
    pub semi_covered: Vec<EdgeId>,
    /// Set when `{t,u}` or `{t,v}` were added virtually.
    pub augmented: bool,
}

impl ConfigIIInstance {
    pub fn crossers(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self.straight.iter().copied().chain(self.curved.iter().map(|&(g, _)| g)).collect();
        all.sort_unstable();
        all
    }

    pub fn is_semi_covered(&self, g: EdgeId) -> bool {
        self.semi_covered.contains(&g)
    }
}

pub fn config_ii_instances(e: &Embedding) -> Result<Vec<ConfigIIInstance>, ClassifyError> {
    if !is_adjacency_crossing(e) {
        return Err(ClassifyError::NotAdjacencyCrossing);
    }
    let p = Planarization::build(e);
    let mut out = Vec::new();
    for base in 0..e.m() {
        if e.crossings[base].len() < 2 {
            continue;
        }
        let mut by_apex: BTreeMap<Vertex, Vec<EdgeId>> = BTreeMap::new();
        for g in e.crossers(base) {
            let (x, y) = e.graph.edges[g];
            by_apex.entry(x).or_default().push(g);
            by_apex.entry(y).or_default().push(g);
        }
        for (t, gs) in by_apex {
            if gs.len() < 2 {
                continue;
            }
            let from_left = |g: EdgeId| sign_from(e, base, g, t) == Some(Sign::LR);
            let straight: Vec<EdgeId> = gs.iter().copied().filter(|&g| from_left(g)).collect();
            let curved_edges: Vec<EdgeId> = gs.iter().copied().filter(|&g| !from_left(g)).collect();
            if straight.is_empty() || curved_edges.is_empty() {
                continue;
            }
            let (u, v) = e.graph.edges[base];
            let curved = curved_edges.iter().map(|&c| (c, curve_side(e, &p, base, t, straight[0], c))).collect();
            let semi_covered = gs
                .iter()
                .copied()
                .filter(|&g| {
                    (covered_by(e, g, u) || covered_by(e, g, v)) && crossed_from(e, g, t).first() == Some(&base)
                })
                .collect();
            out.push(ConfigIIInstance { base, u, v, apex: t, straight, curved, semi_covered, augmented: false });
        }
    }
    Ok(out)
}

/// Position of the endpoint `t` on edge `g`: -1 for the tail, list length for the head.
fn end_pos(e: &Embedding, g: EdgeId, t: Vertex) -> isize {
    if e.graph.edges[g].0 == t {
        -1
    } else {
        e.crossings[g].len() as isize
    }
}

fn curve_side(e: &Embedding, p: &Planarization, base: EdgeId, t: Vertex, s: EdgeId, c: EdgeId) -> CurveSide {
    let mut mask = vec![false; p.segment_count()];
    let idx = |h: EdgeId, g: EdgeId| e.crossing_index(h, g).expect("crosses") as isize;
    mark_span(p, e, &mut mask, s, end_pos(e, s, t), idx(s, base));
    mark_span(p, e, &mut mask, base, idx(base, s), idx(base, c));
    mark_span(p, e, &mut mask, c, idx(c, base), end_pos(e, c, t));
    let reach = reachable(p, &mask, p.outer_face);
    let (u, _) = e.graph.edges[base];
    if vertex_in(p, &reach, u) {
        CurveSide::Right
    } else {
        CurveSide::Left
    }
}
