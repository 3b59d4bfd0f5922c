use serde::Serialize;
use thiserror::Error;

use super::route::{compile, RouteError, SlotSpec};
use super::{Crossing, Dir, EdgeId, Embedding, OuterDart, RouteDirective, Sign, ValidationReport, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {{{0},{1}}} already exists")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} does not lie on face {face}")]
    NotOnFace { vertex: Vertex, face: usize },
    #[error("edge {edge} is not in the rotation of vertex {vertex}")]
    BadSlot { vertex: Vertex, edge: EdgeId },
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("invalid input embedding: {0}")]
    InvalidInput(ValidationReport),
    #[error("malformed route for edge {edge}: {detail}")]
    Route { edge: EdgeId, detail: String },
    #[error("surgery on edge {edge} produced an invalid embedding: {report}")]
    Rejected { edge: EdgeId, report: ValidationReport },
}

/// Corner of a face at a vertex: the wedge immediately counterclockwise
/// after the named edge, or any corner of the face when `Auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Slot {
    Auto,
    After(EdgeId),
}

impl Embedding {
    /// Remove one edge; the result must still be a valid (connected) embedding.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Embedding, SurgeryError> {
        if id >= self.m() {
            return Err(SurgeryError::UnknownEdge(id));
        }
        let out = self.remove_edges(&[id]);
        let report = out.validate();
        if !report.is_valid() {
            return Err(SurgeryError::Rejected { edge: id, report });
        }
        Ok(out)
    }

    /// Add an uncrossed edge `{u,v}` through face `face`. The new edge gets
    /// the next free id.
    pub fn insert_edge_in_face(
        &self,
        u: Vertex,
        v: Vertex,
        face: usize,
        slots: (Slot, Slot),
    ) -> Result<Embedding, SurgeryError> {
        let p = self.planarize().map_err(SurgeryError::InvalidInput)?;
        if face >= p.face_count() {
            return Err(SurgeryError::UnknownFace(face));
        }
        if u == v || self.graph.find_edge(u, v).is_some() {
            return Err(SurgeryError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let corner = |w: Vertex, slot: Slot| -> Result<usize, SurgeryError> {
            let rot = &self.rotations[w];
            let ok = |i: usize| p.left_face(p.dart_from_vertex(self, w, rot[i])) == face;
            match slot {
                Slot::After(h) => match rot.iter().position(|&x| x == h) {
                    Some(i) if ok(i) => Ok(i),
                    _ => Err(SurgeryError::NotOnFace { vertex: w, face }),
                },
                Slot::Auto => (0..rot.len()).find(|&i| ok(i)).ok_or(SurgeryError::NotOnFace { vertex: w, face }),
            }
        };
        let iu = corner(u, slots.0)?;
        let iv = corner(v, slots.1)?;
        let id = self.m();
        let mut out = self.clone();
        out.graph.edges.push((u.min(v), u.max(v)));
        out.crossings.push(Vec::new());
        out.rotations[u].insert(iu + 1, id);
        out.rotations[v].insert(iv + 1, id);
        let report = out.validate();
        if !report.is_valid() {
            return Err(SurgeryError::Rejected { edge: id, report });
        }
        Ok(out)
    }

    /// Swap edge `id` for an uncrossed edge `{a,b}` that keeps the id. The
    /// corners are named in the embedding before the swap; `After(id)` is not
    /// allowed since `id` leaves both rotations first.
    pub fn replace_edge(&self, id: EdgeId, a: Vertex, b: Vertex, slots: (Slot, Slot)) -> Result<Embedding, SurgeryError> {
        if id >= self.m() {
            return Err(SurgeryError::UnknownEdge(id));
        }
        if a == b || self.graph.find_edge(a, b).is_some_and(|x| x != id) {
            return Err(SurgeryError::DuplicateEdge(a.min(b), a.max(b)));
        }
        let mut out = self.clone();
        let o = self.outer;
        if o.edge == id {
            let keep = (0..self.m()).find(|&x| x != id).ok_or(SurgeryError::UnknownEdge(id))?;
            out.outer = OuterDart { edge: keep, segment: 0, dir: o.dir };
        } else {
            let before = self.crossings[o.edge][..o.segment].iter().filter(|x| x.other == id).count();
            out.outer = OuterDart { segment: o.segment - before, ..o };
        }
        for list in out.crossings.iter_mut() {
            list.retain(|x| x.other != id);
        }
        out.crossings[id].clear();
        let (u, v) = self.graph.edges[id];
        out.rotations[u].retain(|&x| x != id);
        out.rotations[v].retain(|&x| x != id);
        out.graph.edges[id] = (a.min(b), a.max(b));
        for (w, slot) in [(a, slots.0), (b, slots.1)] {
            let rot = &mut out.rotations[w];
            let at = match slot {
                Slot::After(h) => {
                    rot.iter().position(|&x| x == h).ok_or(SurgeryError::BadSlot { vertex: w, edge: h })? + 1
                }
                Slot::Auto => rot.len(),
            };
            rot.insert(at, id);
        }
        let report = out.validate();
        if !report.is_valid() {
            return Err(SurgeryError::Rejected { edge: id, report });
        }
        Ok(out)
    }

    /// Add the edge `{u,v}` through a sequence of segments. Each dart in
    /// `path` is crossed from its left face to its right face, walking from
    /// `u` to `v`; the corners are wedges after the named edges.
    pub fn insert_edge_through(
        &self,
        u: Vertex,
        v: Vertex,
        path: &[(EdgeId, usize, Dir)],
        slots: (Slot, Slot),
    ) -> Result<Embedding, SurgeryError> {
        if u == v || self.graph.find_edge(u, v).is_some() {
            return Err(SurgeryError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let id = self.m();
        let forward = u < v;
        let mut out = self.clone();
        out.graph.edges.push((u.min(v), u.max(v)));
        let mut own = Vec::with_capacity(path.len());
        let mut inserts: Vec<(EdgeId, usize, Sign)> = Vec::with_capacity(path.len());
        for &(h, seg, dir) in path {
            if h >= self.m() || seg > self.crossings[h].len() {
                return Err(SurgeryError::UnknownEdge(h));
            }
            let host = if (dir == Dir::Fwd) == forward { Sign::LR } else { Sign::RL };
            own.push(Crossing { other: h, sign: host.flip() });
            inserts.push((h, seg, host));
        }
        if !forward {
            own.reverse();
        }
        out.crossings.push(own);
        let o = self.outer;
        let mut shift = 0;
        for &(h, seg, sign) in &inserts {
            if inserts.iter().filter(|&&(x, _, _)| x == h).count() > 1 {
                return Err(SurgeryError::Rejected {
                    edge: id,
                    report: ValidationReport {
                        violations: vec![super::Violation::DuplicateCrossing { edge: id, other: h }],
                        vertices: None,
                        edges: None,
                        faces: None,
                    },
                });
            }
            out.crossings[h].insert(seg, Crossing { other: id, sign });
            if h == o.edge && seg < o.segment {
                shift += 1;
            }
        }
        out.outer = OuterDart { segment: o.segment + shift, ..o };
        for (w, slot) in [(u, slots.0), (v, slots.1)] {
            let rot = &mut out.rotations[w];
            let at = match slot {
                Slot::After(h) => {
                    rot.iter().position(|&x| x == h).ok_or(SurgeryError::BadSlot { vertex: w, edge: h })? + 1
                }
                Slot::Auto => rot.len(),
            };
            rot.insert(at, id);
        }
        let report = out.validate();
        if !report.is_valid() {
            return Err(SurgeryError::Rejected { edge: id, report });
        }
        Ok(out)
    }

    /// Add the edge `{u,v}` along `route`; it gets the next free id.
    pub fn add_edge_along(&self, u: Vertex, v: Vertex, route: &[RouteDirective]) -> Result<Embedding, SurgeryError> {
        if u == v || self.graph.find_edge(u, v).is_some() {
            return Err(SurgeryError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut out = self.clone();
        out.graph.edges.push((u.min(v), u.max(v)));
        out.crossings.push(Vec::new());
        out.reroute_along(self.m(), route)
    }

    /// Replace the course of edge `id` by the given route. Fails atomically
    /// when the route is malformed or the result is not a valid embedding.
    pub fn reroute_along(&self, id: EdgeId, route: &[RouteDirective]) -> Result<Embedding, SurgeryError> {
        if id >= self.m() {
            return Err(SurgeryError::UnknownEdge(id));
        }
        let c = compile(self, id, route).map_err(|err| SurgeryError::Route {
            edge: id,
            detail: match err {
                RouteError::Empty => "empty route".to_string(),
                RouteError::BadAnchor(h, a) => format!("anchor {a:?} is not on edge {h}"),
                RouteError::Discontinuous(k) => format!("directive {k} does not continue the route"),
                RouteError::Endpoints => "route must run between the edge's endpoints".to_string(),
            },
        })?;
        let (tail, _) = self.graph.edges[id];
        let reversed = c.start != tail;
        let mut out = self.clone();
        // Drop the old course.
        for list in out.crossings.iter_mut() {
            list.retain(|x| x.other != id);
        }
        let mut steps = c.steps.clone();
        if reversed {
            steps.reverse();
            for s in &mut steps {
                s.sign = s.sign.flip();
            }
        }
        let mut seen = std::collections::HashSet::new();
        for s in &steps {
            if !seen.insert(s.host) || s.host == id {
                return Err(SurgeryError::Rejected {
                    edge: id,
                    report: ValidationReport {
                        violations: vec![super::Violation::DuplicateCrossing { edge: id, other: s.host }],
                        vertices: None,
                        edges: None,
                        faces: None,
                    },
                });
            }
        }
        // Outer dart in coordinates of the embedding without `id`.
        let base_outer = if self.outer.edge == id {
            self.remove_edges(&[id]).outer
        } else {
            let o = self.outer;
            let before = self.crossings[o.edge][..o.segment].iter().filter(|x| x.other == id).count();
            OuterDart { segment: o.segment - before, ..o }
        };
        let base_outer = OuterDart {
            edge: if self.outer.edge == id {
                // remove_edges renumbers; map back to original ids.
                if base_outer.edge >= id { base_outer.edge + 1 } else { base_outer.edge }
            } else {
                base_outer.edge
            },
            ..base_outer
        };
        out.crossings[id] = steps
            .iter()
            .map(|s| Crossing { other: s.host, sign: s.sign.flip() })
            .collect();
        let mut outer_shift = 0;
        for s in &steps {
            let list = &mut out.crossings[s.host];
            let gap = s.gap.min(list.len());
            list.insert(gap, Crossing { other: id, sign: s.sign });
            if s.host == base_outer.edge && gap < base_outer.segment {
                outer_shift += 1;
            }
        }
        out.outer = OuterDart { segment: base_outer.segment + outer_shift, ..base_outer };
        place(&mut out, id, c.start, c.start_slot);
        place(&mut out, id, c.end, c.end_slot);
        let report = out.validate();
        if !report.is_valid() {
            return Err(SurgeryError::Rejected { edge: id, report });
        }
        Ok(out)
    }

    /// True when `e` and `f` cross with opposite-sign records on both edges.
    pub fn reciprocal(&self, e: EdgeId, f: EdgeId) -> bool {
        matches!((self.sign(e, f), self.sign(f, e)), (Some(a), Some(b)) if a == b.flip())
    }
}

fn place(out: &mut Embedding, id: EdgeId, v: Vertex, slot: SlotSpec) {
    let rot = &mut out.rotations[v];
    match slot {
        SlotSpec::Keep => {}
        SlotSpec::After(h) | SlotSpec::Before(h) => {
            rot.retain(|&x| x != id);
            let i = rot.iter().position(|&x| x == h).unwrap_or(0);
            let at = if matches!(slot, SlotSpec::After(_)) { i + 1 } else { i };
            rot.insert(at, id);
        }
    }
}
