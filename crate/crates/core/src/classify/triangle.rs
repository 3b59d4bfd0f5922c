use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::region::{edge_mask, face_at, first_dart, reachable, vertex_in};
use super::{crossed_from, is_adjacency_crossing, ClassifyError};
use crate::embedding::{EdgeId, Embedding, Planarization, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TriangleEdge {
    Ac,
    Bc,
    Ab,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Cw,
    Ccw,
    Both,
}

/// Which endpoint of the triangle-crossing edge a class is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Viewpoint {
    /// The apex `u` on the outer side.
    Apex,
    /// The far endpoint `v` of a lone triangle-crossing edge.
    Inner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CrosserClass {
    Needle,
    Needle1,
    Needle2,
    Needle3,
    AHook,
    CHook,
    AArrow,
    CArrow,
    ASickle,
    CSickle,
    Cw,
    Ccw,
    CwLeft,
    CwRight,
    CcwLeft,
    CcwRight,
    /// A crossing sequence outside the table.
    Other,
}

impl CrosserClass {
    pub fn name(self) -> &'static str {
        match self {
            CrosserClass::Needle => "needle",
            CrosserClass::Needle1 => "needle-1",
            CrosserClass::Needle2 => "needle-2",
            CrosserClass::Needle3 => "needle-3",
            CrosserClass::AHook => "a-hook",
            CrosserClass::CHook => "c-hook",
            CrosserClass::AArrow => "a-arrow",
            CrosserClass::CArrow => "c-arrow",
            CrosserClass::ASickle => "a-sickle",
            CrosserClass::CSickle => "c-sickle",
            CrosserClass::Cw => "cw",
            CrosserClass::Ccw => "ccw",
            CrosserClass::CwLeft => "cw-left",
            CrosserClass::CwRight => "cw-right",
            CrosserClass::CcwLeft => "ccw-left",
            CrosserClass::CcwRight => "ccw-right",
            CrosserClass::Other => "other",
        }
    }

    pub fn is_needle(self) -> bool {
        matches!(self, CrosserClass::Needle | CrosserClass::Needle1 | CrosserClass::Needle2 | CrosserClass::Needle3)
    }

    pub fn is_clockwise(self) -> bool {
        matches!(self, CrosserClass::Cw | CrosserClass::CwLeft | CrosserClass::CwRight)
    }

    pub fn is_counterclockwise(self) -> bool {
        matches!(self, CrosserClass::Ccw | CrosserClass::CcwLeft | CrosserClass::CcwRight)
    }

    /// a-hooks, a-arrows and a-sickles.
    pub fn is_a_side(self) -> bool {
        matches!(self, CrosserClass::AHook | CrosserClass::AArrow | CrosserClass::ASickle)
    }
}

/// A triangle crossed by at least one edge that crosses all three of its
/// edges. Labels are chosen so that the first triangle edge crossed by the
/// reference edge from the apex is `{a,c}` and, seen with the apex side as
/// the outside, `(a,b,c)` is counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleCrossingContext {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub ab: EdgeId,
    pub bc: EdgeId,
    pub ac: EdgeId,
    /// Common endpoint `u` of the triangle-crossing edges.
    pub apex: Option<Vertex>,
    /// Far endpoint `v` when there is a single triangle-crossing edge.
    pub inner: Option<Vertex>,
    /// Whether the apex lies on the side of the triangle holding the outer face.
    pub apex_outside: bool,
    pub crossing_edges: Vec<EdgeId>,
    pub clockwise: Vec<EdgeId>,
    pub counterclockwise: Vec<EdgeId>,
    pub direction: Direction,
    pub chosen: Option<(EdgeId, EdgeId)>,
    /// Labels satisfy the standard order `{a,c}, {b,c}, {a,b}`.
    pub normalized: bool,
    /// `a` and `c` were exchanged relative to the geometric labelling.
    pub relabeled: bool,
    pub classes: BTreeMap<EdgeId, (CrosserClass, Viewpoint)>,
}

impl TriangleCrossingContext {
    pub fn triangle(&self) -> [Vertex; 3] {
        let mut t = [self.a, self.b, self.c];
        t.sort_unstable();
        t
    }

    pub fn edge(&self, t: TriangleEdge) -> EdgeId {
        match t {
            TriangleEdge::Ac => self.ac,
            TriangleEdge::Bc => self.bc,
            TriangleEdge::Ab => self.ab,
        }
    }

    pub fn triangle_edges(&self) -> [EdgeId; 3] {
        [self.ac, self.bc, self.ab]
    }

    pub fn class_of(&self, g: EdgeId) -> Option<CrosserClass> {
        self.classes.get(&g).map(|&(c, _)| c)
    }

    pub fn members(&self, pred: impl Fn(CrosserClass) -> bool, view: Viewpoint) -> Vec<EdgeId> {
        self.classes.iter().filter(|(_, &(c, v))| v == view && pred(c)).map(|(&g, _)| g).collect()
    }

    /// Exchange `a` and `c`, turning counterclockwise crossers into clockwise ones.
    pub(crate) fn swap_ac(&mut self) {
        std::mem::swap(&mut self.a, &mut self.c);
        std::mem::swap(&mut self.ab, &mut self.bc);
        std::mem::swap(&mut self.clockwise, &mut self.counterclockwise);
        self.relabeled = !self.relabeled;
    }
}

fn cyclic_eq(seq: &[TriangleEdge], pat: [TriangleEdge; 3]) -> bool {
    seq.len() == 3 && (0..3).any(|r| (0..3).all(|i| seq[i] == pat[(i + r) % 3]))
}

const CW: [TriangleEdge; 3] = [TriangleEdge::Ac, TriangleEdge::Bc, TriangleEdge::Ab];

/// Triangle edges crossed by `g`, in travel order from `from`.
fn sequence(e: &Embedding, g: EdgeId, from: Vertex, labels: [EdgeId; 3]) -> Vec<TriangleEdge> {
    let [ac, bc, ab] = labels;
    crossed_from(e, g, from)
        .into_iter()
        .filter_map(|h| {
            if h == ac {
                Some(TriangleEdge::Ac)
            } else if h == bc {
                Some(TriangleEdge::Bc)
            } else if h == ab {
                Some(TriangleEdge::Ab)
            } else {
                None
            }
        })
        .collect()
}

fn table_class(seq: &[TriangleEdge]) -> CrosserClass {
    use TriangleEdge::*;
    match seq {
        [Ac] => CrosserClass::Needle,
        [Ab] => CrosserClass::AHook,
        [Bc] => CrosserClass::CHook,
        [Ac, Ab] => CrosserClass::AArrow,
        [Ac, Bc] => CrosserClass::CArrow,
        [Ab, Ac] => CrosserClass::ASickle,
        [Bc, Ac] => CrosserClass::CSickle,
        s if cyclic_eq(s, CW) => CrosserClass::Cw,
        s if cyclic_eq(s, [Ac, Ab, Bc]) => CrosserClass::Ccw,
        _ => CrosserClass::Other,
    }
}

/// Edges crossing all three edges of some triangle.
pub fn triangle_crossing_edges(e: &Embedding) -> BTreeSet<EdgeId> {
    found_triangles(e).into_iter().flat_map(|(_, _, gs)| gs).collect()
}

/// (sorted vertex triple, edge ids ab/bc/ac by sorted vertices, crossing edges)
fn found_triangles(e: &Embedding) -> Vec<([Vertex; 3], [EdgeId; 3], Vec<EdgeId>)> {
    let mut by_tri: BTreeMap<[Vertex; 3], ([EdgeId; 3], BTreeSet<EdgeId>)> = BTreeMap::new();
    for g in 0..e.m() {
        let xs: Vec<EdgeId> = e.crossers(g).collect();
        if xs.len() < 3 {
            continue;
        }
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let Some(p) = e.graph.common_vertex(xs[i], xs[j]) else { continue };
                let x = e.graph.other_end(xs[i], p);
                let y = e.graph.other_end(xs[j], p);
                let Some(k) = e.graph.find_edge(x, y) else { continue };
                if !xs.contains(&k) {
                    continue;
                }
                let mut tri = [p, x, y];
                tri.sort_unstable();
                let ids = [
                    e.graph.find_edge(tri[0], tri[1]).expect("triangle edge"),
                    e.graph.find_edge(tri[1], tri[2]).expect("triangle edge"),
                    e.graph.find_edge(tri[0], tri[2]).expect("triangle edge"),
                ];
                by_tri.entry(tri).or_insert((ids, BTreeSet::new())).1.insert(g);
            }
        }
    }
    by_tri.into_iter().map(|(t, (ids, gs))| (t, ids, gs.into_iter().collect())).collect()
}

/// All crossed triangles with their taxonomy, in ascending vertex order.
/// Labels follow the geometric convention; see `normalize_triangle` in the
/// rerouter for the standard relabelling.
pub fn triangle_crossings_direct(e: &Embedding) -> Vec<TriangleCrossingContext> {
    let p = Planarization::build(e);
    found_triangles(e).into_iter().map(|(tri, ids, gs)| build(e, &p, tri, ids, gs)).collect()
}

fn build(e: &Embedding, p: &Planarization, tri: [Vertex; 3], ids: [EdgeId; 3], gs: Vec<EdgeId>) -> TriangleCrossingContext {
    let blocked = edge_mask(p, e, &ids);
    let outer = reachable(p, &blocked, p.outer_face);
    let apex = if gs.len() >= 2 {
        let (x, y) = e.graph.edges[gs[0]];
        [x, y].into_iter().find(|&v| gs.iter().all(|&g| e.graph.incident(g, v)))
    } else {
        let (x, y) = e.graph.edges[gs[0]];
        Some(if vertex_in(p, &outer, x) { x } else { y })
    };
    let u = apex.unwrap_or(e.graph.edges[gs[0]].0);
    let inner = (gs.len() == 1).then(|| e.graph.other_end(gs[0], u));
    let u_side = reachable(p, &blocked, face_at(p, u).expect("apex has edges"));
    let reference = gs.iter().copied().find(|&g| e.graph.incident(g, u)).unwrap_or(gs[0]);
    let first = crossed_from(e, reference, u)
        .into_iter()
        .find(|h| ids.contains(h))
        .expect("crosses the triangle");
    let (x, y) = e.graph.edges[first];
    let b = tri.into_iter().find(|&v| v != x && v != y).expect("third vertex");
    // (a,b,c) is counterclockwise when the far side lies left of a -> b.
    let xb = e.graph.find_edge(x, b).expect("triangle edge");
    let left = p.left_face(first_dart(p, e, x, xb));
    let (a, c) = if u_side[left] { (y, x) } else { (x, y) };
    let mut ctx = TriangleCrossingContext {
        a,
        b,
        c,
        ab: e.graph.find_edge(a, b).expect("triangle edge"),
        bc: e.graph.find_edge(b, c).expect("triangle edge"),
        ac: first,
        apex,
        inner,
        apex_outside: vertex_in(p, &outer, u),
        crossing_edges: gs.clone(),
        clockwise: Vec::new(),
        counterclockwise: Vec::new(),
        direction: Direction::Cw,
        chosen: None,
        normalized: false,
        relabeled: false,
        classes: BTreeMap::new(),
    };
    refresh(e, &mut ctx);
    ctx
}

/// Recompute direction data and classes from the current labels.
pub(crate) fn refresh(e: &Embedding, ctx: &mut TriangleCrossingContext) {
    let u = ctx.apex.unwrap_or(e.graph.edges[ctx.crossing_edges[0]].0);
    let labels = [ctx.ac, ctx.bc, ctx.ab];
    ctx.clockwise.clear();
    ctx.counterclockwise.clear();
    for &g in &ctx.crossing_edges {
        let s = sequence(e, g, u, labels);
        if cyclic_eq(&s, CW) {
            ctx.clockwise.push(g);
        } else {
            ctx.counterclockwise.push(g);
        }
    }
    ctx.direction = match (ctx.clockwise.is_empty(), ctx.counterclockwise.is_empty()) {
        (false, true) => Direction::Cw,
        (true, false) => Direction::Ccw,
        _ => Direction::Both,
    };
    ctx.normalized = ctx.apex.is_some() && ctx.direction != Direction::Ccw;
    ctx.chosen = None;
    if ctx.direction == Direction::Both {
        // First clockwise and first counterclockwise edge in rotation order at u.
        let rot = &e.rotations[u];
        let ei = rot.iter().copied().find(|g| ctx.clockwise.contains(g));
        let ej = rot.iter().copied().find(|g| ctx.counterclockwise.contains(g));
        if let (Some(i), Some(j)) = (ei, ej) {
            ctx.chosen = Some((i, j));
        }
    }
    let mut classes = BTreeMap::new();
    for (g, c) in raw_classes(e, ctx, Viewpoint::Apex) {
        classes.insert(g, (c, Viewpoint::Apex));
    }
    if ctx.inner.is_some() {
        for (g, c) in raw_classes(e, ctx, Viewpoint::Inner) {
            classes.entry(g).or_insert((c, Viewpoint::Inner));
        }
    }
    ctx.classes = classes;
}

fn raw_classes(e: &Embedding, ctx: &TriangleCrossingContext, view: Viewpoint) -> BTreeMap<EdgeId, CrosserClass> {
    let (w, labels) = match view {
        Viewpoint::Apex => (ctx.apex.unwrap_or(e.graph.edges[ctx.crossing_edges[0]].0), [ctx.ac, ctx.bc, ctx.ab]),
        // Seen from v the roles are (a, c, b).
        Viewpoint::Inner => (ctx.inner.expect("inner vertex"), [ctx.ab, ctx.bc, ctx.ac]),
    };
    let mut out = BTreeMap::new();
    for g in 0..e.m() {
        if !e.graph.incident(g, w) {
            continue;
        }
        if view == Viewpoint::Inner && ctx.crossing_edges.contains(&g) {
            continue;
        }
        let s = sequence(e, g, w, labels);
        if s.is_empty() {
            continue;
        }
        out.insert(g, table_class(&s));
    }
    if view == Viewpoint::Apex {
        if let Some((ei, ej)) = ctx.chosen {
            refine(e, ctx, ei, ej, &mut out);
        }
    }
    out
}

/// Split needles and triangle-crossing edges around the chosen pair,
/// using positions on `{a,c}`.
fn refine(e: &Embedding, ctx: &TriangleCrossingContext, ei: EdgeId, ej: EdgeId, out: &mut BTreeMap<EdgeId, CrosserClass>) {
    let pos = |g: EdgeId| e.crossing_index(ctx.ac, g).map(|i| i as isize);
    let (Some(pi), Some(pj)) = (pos(ei), pos(ej)) else { return };
    let sigma = if pi > pj { 1 } else { -1 };
    for (&g, class) in out.iter_mut() {
        let Some(pg) = pos(g) else { continue };
        let beyond_i = (pg - pi) * sigma > 0;
        let beyond_j = (pj - pg) * sigma > 0;
        *class = match *class {
            CrosserClass::Needle if beyond_i => CrosserClass::Needle1,
            CrosserClass::Needle if beyond_j => CrosserClass::Needle3,
            CrosserClass::Needle => CrosserClass::Needle2,
            CrosserClass::Ccw if beyond_i => CrosserClass::CcwLeft,
            CrosserClass::Ccw => CrosserClass::CcwRight,
            CrosserClass::Cw if beyond_j => CrosserClass::CwLeft,
            CrosserClass::Cw => CrosserClass::CwRight,
            other => other,
        };
    }
}

/// Classes of the crossers of the context's triangle, read from
/// the apex or, for a lone triangle-crossing edge, from its far endpoint.
pub fn classify_crossers(
    ctx: &TriangleCrossingContext,
    e: &Embedding,
    view: Viewpoint,
) -> Result<BTreeMap<EdgeId, CrosserClass>, ClassifyError> {
    if !ctx.normalized {
        return Err(ClassifyError::NotNormalized);
    }
    if view == Viewpoint::Inner && ctx.inner.is_none() {
        return Err(ClassifyError::Viewpoint(view));
    }
    Ok(raw_classes(e, ctx, view))
}

/// Edges `h` with `{h} = cover(x) ∩ cover(y)` for some `x != y`.
pub fn triangle_crossings_via_cover(e: &Embedding) -> Result<Vec<EdgeId>, ClassifyError> {
    if !is_adjacency_crossing(e) {
        return Err(ClassifyError::NotAdjacencyCrossing);
    }
    let n = e.n();
    let covers: Vec<BTreeSet<EdgeId>> = (0..n).map(|v| super::cover_of(e, v).into_iter().collect()).collect();
    let mut out = BTreeSet::new();
    for x in 0..n {
        if covers[x].is_empty() {
            continue;
        }
        for y in x + 1..n {
            let mut common = covers[x].intersection(&covers[y]);
            if let (Some(&h), None) = (common.next(), common.next()) {
                out.insert(h);
            }
        }
    }
    Ok(out.into_iter().collect())
}
