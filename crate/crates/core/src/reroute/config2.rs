use std::collections::BTreeSet;

use super::triangle::{precondition, rest_of, span_crossers};
use super::{heads_toward, leaves_tail, side_of, Builder, Lemma, RerouteError, RerouteTrace, Target, TraceStep};
use crate::classify::{config_ii_instances, covered_by, crossed_from, is_fan_crossing, ConfigIIInstance, CurveSide};
use crate::embedding::{Anchor, Dir, EdgeId, Embedding, Planarization, RouteDirective, Slot, Vertex};

fn target(inst: &ConfigIIInstance) -> Target {
    Target::Base { edge: inst.base, u: inst.u, v: inst.v, apex: inst.apex }
}

fn follow(guide: EdgeId, from: Anchor, to: Anchor, side: crate::embedding::Side) -> RouteDirective {
    RouteDirective::Follow { guide, from, to, side }
}

fn instances(e: &Embedding) -> Vec<ConfigIIInstance> {
    config_ii_instances(e).unwrap_or_default()
}

/// Add the missing edges `{t,u}` and `{t,v}`: each runs along the crosser of
/// the base nearest to that endpoint and then along the base.
pub fn augment_apex(e: &Embedding, inst: &ConfigIIInstance) -> Result<(Embedding, TraceStep), RerouteError> {
    let t = inst.apex;
    let base = inst.base;
    let mut b = Builder::new(e, Lemma::AugmentApex, target(inst), None);
    for z in [inst.u, inst.v] {
        if b.e.graph.find_edge(t, z).is_some() {
            continue;
        }
        let e = &b.e;
        let along = crossed_from(e, base, z);
        let g = *along.first().ok_or_else(|| precondition("base is not crossed"))?;
        let span = span_crossers(e, g, Anchor::Vertex(t), Anchor::Cross(base));
        if span.iter().any(|&x| e.graph.incident(x, z)) {
            return Err(precondition("nearest crosser is crossed by an edge at the base endpoint"));
        }
        if span.iter().any(|&x| e.crossers(x).any(|y| !e.graph.incident(y, t))) {
            return Err(precondition("nearest crosser is crossed by an edge whose fan avoids the apex"));
        }
        let d = heads_toward(e, base, Anchor::Cross(g), Anchor::Vertex(z));
        let route = vec![
            follow(g, Anchor::Vertex(t), Anchor::Cross(base), side_of(e, g, base, z, leaves_tail(e, g, t))),
            follow(base, Anchor::Cross(g), Anchor::Vertex(z), side_of(e, base, g, t, d)),
        ];
        b.add_along(t, z, route)?;
    }
    Ok(b.finish())
}

/// Endpoint of `h` reached from its crossing with `x` toward its crossing
/// with `y`.
fn end_toward(e: &Embedding, h: EdgeId, x: EdgeId, y: EdgeId) -> Vertex {
    let (t, hd) = e.graph.edges[h];
    if heads_toward(e, h, Anchor::Cross(x), Anchor::Cross(y)) {
        hd
    } else {
        t
    }
}

/// Whether the crossings stay fans when `g` newly crosses `fresh` and keeps
/// its crossings with `kept`.
fn stays_fan(e: &Embedding, g: EdgeId, fresh: &[EdgeId], kept: impl Iterator<Item = EdgeId>) -> bool {
    let own: Vec<EdgeId> = fresh.iter().copied().chain(kept).collect();
    fresh.iter().all(|&y| {
        let others: Vec<EdgeId> = e.crossers(y).filter(|&x| x != g).chain([g]).collect();
        share_vertex(e, &others)
    }) && share_vertex(e, &own)
}

/// Whether all edges in `es` have a common endpoint.
fn share_vertex(e: &Embedding, es: &[EdgeId]) -> bool {
    let Some(&first) = es.first() else { return true };
    let (x, y) = e.graph.edges[first];
    [x, y].into_iter().any(|v| es.iter().all(|&h| e.graph.incident(h, v)))
}

/// Curves of one side whose base crossing lies between the enclosed
/// endpoint `z` and the straight edge `s`.
fn curves_before(e: &Embedding, inst: &ConfigIIInstance, side: CurveSide, z: Vertex, s: EdgeId) -> Vec<EdgeId> {
    let along = crossed_from(e, inst.base, z);
    let rs = along.iter().position(|&x| x == s).expect("s crosses the base");
    inst.curved
        .iter()
        .filter(|&&(_, c)| c == side)
        .map(|&(g, _)| g)
        .filter(|g| along[..rs].contains(g))
        .collect()
}

/// Route of a curve `g` along `s` from the apex to `f`, along `f` to `g`,
/// then along `g`; `None` when the stretches are blocked.
/// Edges in `gone` are rerouted before `g` and do not block it.
fn curve_route(e: &Embedding, t: Vertex, s: EdgeId, g: EdgeId, f: EdgeId, gone: &[EdgeId]) -> Option<Vec<RouteDirective>> {
    let x = e.graph.other_end(g, t);
    let blocked = |h: EdgeId, a: Anchor, b: Anchor| {
        span_crossers(e, h, a, b).iter().any(|&y| !gone.contains(&y) && e.graph.adjacent(y, g))
    };
    if blocked(s, Anchor::Vertex(t), Anchor::Cross(f)) || blocked(f, Anchor::Cross(s), Anchor::Cross(g)) {
        return None;
    }
    let fresh: Vec<EdgeId> = span_crossers(e, s, Anchor::Vertex(t), Anchor::Cross(f))
        .into_iter()
        .chain(span_crossers(e, f, Anchor::Cross(s), Anchor::Cross(g)))
        .filter(|y| !gone.contains(y))
        .collect();
    let kept = crossed_from(e, g, t).into_iter().skip_while(|&y| y != f).skip(1);
    if !stays_fan(e, g, &fresh, kept) {
        return None;
    }
    let d = heads_toward(e, f, Anchor::Cross(s), Anchor::Cross(g));
    let on_f = side_of(e, f, s, t, d);
    if side_of(e, f, g, x, d) != on_f {
        return None;
    }
    let zf = end_toward(e, f, s, g);
    Some(vec![
        follow(s, Anchor::Vertex(t), Anchor::Cross(f), side_of(e, s, f, zf, leaves_tail(e, s, t))),
        follow(f, Anchor::Cross(s), Anchor::Cross(g), on_f),
        rest_of(e, g, f, t),
    ])
}

/// Lemma on left curves: with a straight edge `s` that is uncovered or
/// covered by the enclosed endpoint, the curves between that endpoint and
/// `s` are led along `s` and the first edge crossing both.
pub fn reroute_left_curves(e: &Embedding, inst: &ConfigIIInstance) -> Result<(Embedding, TraceStep), RerouteError> {
    let plan = curve_plan(e, inst).ok_or_else(|| precondition("no straight edge with curves before it"))?;
    let (s, members) = plan;
    let t = inst.apex;
    let mut b = Builder::new(e, Lemma::LeftCurves, target(inst), None);
    for (g, f) in members {
        let route = curve_route(&b.e, t, s, g, f, &[]).ok_or_else(|| precondition("curve stretch is blocked"))?;
        b.reroute(g, route)?;
    }
    Ok(b.finish())
}

/// Straight edge and its curves, each with the first edge crossing both,
/// in processing order: nearest turn-off first.
fn curve_plan(e: &Embedding, inst: &ConfigIIInstance) -> Option<(EdgeId, Vec<(EdgeId, EdgeId)>)> {
    let t = inst.apex;
    for (side, z) in [(CurveSide::Left, inst.u), (CurveSide::Right, inst.v)] {
        let fit = |s: &&EdgeId| {
            let crossers: Vec<EdgeId> = e.crossers(**s).collect();
            crossers.len() < 2 || covered_by(e, **s, z)
        };
        let along = crossed_from(e, inst.base, z);
        let Some(&s) = inst.straight.iter().filter(fit).max_by_key(|&&s| along.iter().position(|&x| x == s)) else {
            continue;
        };
        let curves = curves_before(e, inst, side, z, s);
        if curves.is_empty() {
            continue;
        }
        let on_s = crossed_from(e, s, t);
        let shared = |g: EdgeId| on_s.iter().copied().find(|&f| e.graph.incident(f, z) && e.crosses(f, g));
        let Some(mut members) = curves.into_iter().map(|g| shared(g).map(|f| (g, f))).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let rank = |&(g, f): &(EdgeId, EdgeId)| {
            let on_f = (e.crossing_index(f, s).unwrap() as isize - e.crossing_index(f, g).unwrap() as isize).abs();
            (on_s.iter().position(|&x| x == f), on_f)
        };
        members.sort_by_key(rank);
        let order: Vec<EdgeId> = members.iter().map(|&(g, _)| g).collect();
        if members.iter().enumerate().all(|(i, &(g, f))| curve_route(e, t, s, g, f, &order[..i]).is_some()) {
            return Some((s, members));
        }
    }
    None
}

/// Lemma on semi-covered edges: the crossers of the opposite kind are led in
/// a bundle along the semi-covered edge `f` to the base, then along the base
/// on the side of the apex, then along their old course.
pub fn reroute_via_semicovered(e: &Embedding, inst: &ConfigIIInstance) -> Result<(Embedding, TraceStep), RerouteError> {
    let (f, members) = semicovered_plan(e, inst).ok_or_else(|| precondition("no usable semi-covered edge"))?;
    let mut b = Builder::new(e, Lemma::SemiCovered, target(inst), None);
    for g in members {
        let route = bundle_route(&b.e, inst, f, g);
        b.reroute(g, route)?;
    }
    Ok(b.finish())
}

fn bundle_route(e: &Embedding, inst: &ConfigIIInstance, f: EdgeId, g: EdgeId) -> Vec<RouteDirective> {
    let (t, base) = (inst.apex, inst.base);
    let d = heads_toward(e, base, Anchor::Cross(f), Anchor::Cross(g));
    let z = end_toward(e, base, f, g);
    vec![
        follow(f, Anchor::Vertex(t), Anchor::Cross(base), side_of(e, f, base, z, leaves_tail(e, f, t))),
        follow(base, Anchor::Cross(f), Anchor::Cross(g), side_of(e, base, f, t, d)),
        rest_of(e, g, base, t),
    ]
}

/// A semi-covered edge whose opposite-kind crossers can be bundled: along the
/// base between it and each of them lie only other members. Members are in
/// processing order, nearest to `f` first.
fn semicovered_plan(e: &Embedding, inst: &ConfigIIInstance) -> Option<(EdgeId, Vec<EdgeId>)> {
    let straight: BTreeSet<EdgeId> = inst.straight.iter().copied().collect();
    let curved: BTreeSet<EdgeId> = inst.curved.iter().map(|&(g, _)| g).collect();
    let on_base = crossed_from(e, inst.base, inst.u);
    inst.semi_covered.iter().copied().find_map(|f| {
        let others = if straight.contains(&f) { &curved } else { &straight };
        let rf = on_base.iter().position(|&x| x == f)?;
        let clear = on_base.iter().enumerate().all(|(i, g)| {
            let between = |j: usize| (rf.min(j) + 1..rf.max(j)).all(|k| others.contains(&on_base[k]));
            !others.contains(g) || between(i)
        });
        if !clear || others.is_empty() {
            return None;
        }
        let mut members: Vec<EdgeId> = others.iter().copied().collect();
        members.sort_by_key(|g| on_base.iter().position(|x| x == g).map(|i| i.abs_diff(rf)));
        Some((f, members))
    })
}

/// Fan-planarization: configuration II is removed by the lemmas on left
/// curves and semi-covered edges where they apply, otherwise by replacing
/// the base with an uncrossed edge between two vertices of a face merged by
/// its removal.
pub fn fan_planarize(e: &Embedding) -> Result<(Embedding, RerouteTrace), RerouteError> {
    if !is_fan_crossing(e) {
        return Err(RerouteError::NotFanCrossing);
    }
    let mut cur = e.clone();
    let mut trace = RerouteTrace::default();
    loop {
        let insts = instances(&cur);
        let Some(inst) = insts.first() else { break };
        let before = weight(&insts);
        let (next, step) = if curve_plan(&cur, inst).is_some() {
            reroute_left_curves(&cur, inst)?
        } else if semicovered_plan(&cur, inst).is_some() {
            reroute_via_semicovered(&cur, inst)?
        } else {
            replace_base(&cur, inst)?
        };
        let after = weight(&instances(&next));
        if !is_fan_crossing(&next) || after >= before {
            return Err(RerouteError::NoProgress { lemma: step.lemma });
        }
        trace.steps.push(step);
        cur = next;
    }
    Ok((cur, trace))
}

/// Total number of (base, crosser) pairs over all instances.
fn weight(insts: &[ConfigIIInstance]) -> usize {
    insts.iter().map(|i| i.straight.len() + i.curved.len()).sum()
}

/// Corners of face `f` at real vertices, as insertion slots that remain
/// meaningful once `base` is gone.
fn corners(e: &Embedding, p: &Planarization, f: usize, base: EdgeId) -> Vec<(Vertex, Slot)> {
    let mut out: Vec<(Vertex, Slot)> = Vec::new();
    for &d in p.face_darts(f) {
        let crate::embedding::NodeKind::Real(w) = p.nodes[p.origin[d]] else { continue };
        let (h, _, _) = p.dart_edge(d);
        let rot = &e.rotations[w];
        let slot = if h != base {
            Slot::After(h)
        } else if rot.len() > 1 {
            let i = rot.iter().position(|&x| x == base).expect("base at its endpoint");
            Slot::After(rot[(i + rot.len() - 1) % rot.len()])
        } else {
            Slot::Auto
        };
        if !out.iter().any(|&(x, _)| x == w) {
            out.push((w, slot));
        }
    }
    out
}

/// Replace the base by an uncrossed edge `{a,b}`. The candidates are the
/// vertices on the two faces beside each base segment, from `u` toward `v`;
/// pairs across the base come first.
fn replace_base(e: &Embedding, inst: &ConfigIIInstance) -> Result<(Embedding, TraceStep), RerouteError> {
    let base = inst.base;
    let p = Planarization::build(e);
    let absent = |x: Vertex, y: Vertex| x != y && e.graph.find_edge(x, y).is_none_or(|h| h == base);
    let mut pick = None;
    'seg: for i in 0..=e.crossings[base].len() {
        let d = p.dart_of(base, i, Dir::Fwd);
        let left = corners(e, &p, p.left_face(d), base);
        let right = corners(e, &p, p.right_face(d), base);
        let across = left.iter().flat_map(|&l| right.iter().map(move |&r| (l, r)));
        let within = [&left, &right]
            .into_iter()
            .flat_map(|side| side.iter().enumerate().flat_map(move |(k, &l)| side[k + 1..].iter().map(move |&r| (l, r))));
        for ((a, sa), (b, sb)) in across.chain(within) {
            if absent(a, b) {
                pick = Some((a, b, sa, sb));
                break 'seg;
            }
        }
    }
    let (a, b, sa, sb) = pick.ok_or(RerouteError::NoReplacement(base))?;
    let mut bld = Builder::new(e, Lemma::BaseReplacement, target(inst), None);
    bld.replace(base, a, b, (sa, sb))?;
    Ok(bld.finish())
}
