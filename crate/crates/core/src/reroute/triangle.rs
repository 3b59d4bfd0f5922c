use std::collections::BTreeSet;

use super::{heads_toward, leaves_tail, pos, side_of, Builder, Lemma, RerouteError, RerouteTrace, Target, TraceStep};
use crate::classify::{
    classify_crossers, covered_by, is_adjacency_crossing, refresh, sign_from, triangle_crossings_direct, CrosserClass,
    Direction, TriangleCrossingContext, Viewpoint,
};
use crate::embedding::{Anchor, EdgeId, Embedding, RouteDirective, Side, Vertex};

/// Triangle labels as seen from one endpoint of the triangle-crossing edges.
/// From the inner vertex the roles of `b` and `c` are exchanged.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame {
    pub w: Vertex,
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub ab: EdgeId,
    pub bc: EdgeId,
    pub ac: EdgeId,
    pub view: Viewpoint,
}

impl Frame {
    pub fn of(e: &Embedding, ctx: &TriangleCrossingContext, view: Viewpoint) -> Option<Frame> {
        match view {
            Viewpoint::Apex => Some(Frame {
                w: ctx.apex.unwrap_or(e.graph.edges[ctx.crossing_edges[0]].0),
                a: ctx.a,
                b: ctx.b,
                c: ctx.c,
                ab: ctx.ab,
                bc: ctx.bc,
                ac: ctx.ac,
                view,
            }),
            Viewpoint::Inner => ctx.inner.map(|v| Frame {
                w: v,
                a: ctx.a,
                b: ctx.c,
                c: ctx.b,
                ab: ctx.ac,
                bc: ctx.bc,
                ac: ctx.ab,
                view,
            }),
        }
    }
}

fn target(ctx: &TriangleCrossingContext) -> Target {
    Target::Triangle { a: ctx.a, b: ctx.b, c: ctx.c }
}

pub(super) fn precondition(msg: impl Into<String>) -> RerouteError {
    RerouteError::Precondition(msg.into())
}

fn follow(guide: EdgeId, from: Anchor, to: Anchor, side: Side) -> RouteDirective {
    RouteDirective::Follow { guide, from, to, side }
}

/// The remaining course of `g` after its crossing with `h`, travelling away from `w`.
pub(super) fn rest_of(e: &Embedding, g: EdgeId, h: EdgeId, w: Vertex) -> RouteDirective {
    follow(g, Anchor::Cross(h), Anchor::Vertex(e.graph.other_end(g, w)), Side::Left)
}

/// Relabel the context so that clockwise triangle-crossing edges cross
/// `{a,c}`, `{b,c}`, `{a,b}` in this order from the apex.
pub fn normalize_triangle(e: &Embedding, ctx: &TriangleCrossingContext) -> (Embedding, TriangleCrossingContext) {
    let mut out = ctx.clone();
    if out.direction == Direction::Ccw {
        out.swap_ac();
        refresh(e, &mut out);
    }
    (e.clone(), out)
}

fn require_normalized(ctx: &TriangleCrossingContext) -> Result<(), RerouteError> {
    if !ctx.normalized {
        return Err(precondition("triangle context is not normalized"));
    }
    Ok(())
}

fn side_edges(e: &Embedding, ctx: &TriangleCrossingContext, view: Viewpoint) -> Vec<(EdgeId, CrosserClass)> {
    let Ok(classes) = classify_crossers(ctx, e, view) else { return Vec::new() };
    classes.into_iter().filter(|(_, c)| c.is_a_side()).collect()
}

fn has_side_edges(e: &Embedding, ctx: &TriangleCrossingContext) -> bool {
    [Viewpoint::Apex, Viewpoint::Inner]
        .into_iter()
        .any(|v| Frame::of(e, ctx, v).is_some() && !side_edges(e, ctx, v).is_empty())
}

/// A side edge together with the data its recipe needs.
#[derive(Debug, Clone)]
struct SidePlan {
    fr: Frame,
    f: EdgeId,
    class: CrosserClass,
    /// Triangle-crossing edges in order along `{a,b}` away from `f`.
    members: Vec<EdgeId>,
    /// Lead edge from `w` to `{a,c}` for sickles and arrows.
    lead: Option<EdgeId>,
}

/// Crossers of `h` in order from `from`, restricted to the span strictly
/// between the crossings with `x` and `y`.
fn strictly_between(e: &Embedding, h: EdgeId, x: EdgeId, y: EdgeId) -> Vec<EdgeId> {
    let (i, j) = (e.crossing_index(h, x).expect("crosses"), e.crossing_index(h, y).expect("crosses"));
    let (lo, hi) = (i.min(j), i.max(j));
    e.crossings[h][lo + 1..hi].iter().map(|c| c.other).collect()
}

/// Crossers of `h` strictly between two anchors.
pub(super) fn span_crossers(e: &Embedding, h: EdgeId, x: Anchor, y: Anchor) -> Vec<EdgeId> {
    let (i, j) = (pos(e, h, x), pos(e, h, y));
    let (lo, hi) = (i.min(j), i.max(j));
    ((lo + 1)..hi).map(|k| e.crossings[h][k as usize].other).collect()
}

/// The rightmost side edge from one viewpoint, if its recipe applies: all
/// triangle-crossing edges cross `{a,b}` beyond it and nothing else crosses
/// the stretches of `{a,b}` and `{a,c}` that the rerouted edges run along.
fn side_plan(e: &Embedding, ctx: &TriangleCrossingContext, view: Viewpoint) -> Option<SidePlan> {
    let fr = Frame::of(e, ctx, view)?;
    let sides = side_edges(e, ctx, view);
    let on_ab = crate::classify::crossed_from(e, fr.ab, fr.a);
    let rank = |g: EdgeId| on_ab.iter().position(|&x| x == g);
    let &(f, class) = sides.iter().max_by_key(|(g, _)| rank(*g))?;
    let rf = rank(f)?;
    let tri = &ctx.crossing_edges;
    let mut members: Vec<EdgeId> = tri.clone();
    members.sort_by_key(|&g| rank(g));
    if members.iter().any(|&g| rank(g).is_none_or(|r| r < rf)) {
        return None;
    }
    let last = *members.last()?;
    if strictly_between(e, fr.ab, f, last).iter().any(|g| !members.contains(g)) {
        return None;
    }
    let mut stretches = Vec::new();
    let lead = if class == CrosserClass::AHook {
        stretches.push((f, Anchor::Vertex(fr.w), Anchor::Cross(fr.ab)));
        None
    } else {
        // The crosser of {a,c} next to f on the side away from a.
        let on_ac = crate::classify::crossed_from(e, fr.ac, fr.a);
        let pf = on_ac.iter().position(|&x| x == f)?;
        let lead = *on_ac.get(pf + 1)?;
        if !e.graph.incident(lead, fr.w) || !(tri.contains(&lead) || covered_by(e, lead, fr.c)) {
            return None;
        }
        stretches.push((lead, Anchor::Vertex(fr.w), Anchor::Cross(fr.ac)));
        stretches.push((f, Anchor::Cross(fr.ac), Anchor::Cross(fr.ab)));
        Some(lead)
    };
    // A rerouted edge must not meet an edge adjacent to it.
    for (h, x, y) in stretches {
        let crossers = span_crossers(e, h, x, y);
        if members.iter().any(|&g| crossers.iter().any(|&x| x != g && e.graph.adjacent(x, g))) {
            return None;
        }
    }
    Some(SidePlan { fr, f, class, members, lead })
}

fn applicable_side(e: &Embedding, ctx: &TriangleCrossingContext) -> Option<SidePlan> {
    [Viewpoint::Apex, Viewpoint::Inner].into_iter().find_map(|v| side_plan(e, ctx, v))
}

/// Lemma on side edges: the triangle-crossing edges are rerouted along the
/// rightmost a-hook, a-sickle or a-arrow.
pub fn eliminate_with_side_edge(
    e: &Embedding,
    ctx: &TriangleCrossingContext,
) -> Result<(Embedding, TraceStep), RerouteError> {
    require_normalized(ctx)?;
    if ctx.direction != Direction::Cw {
        return Err(precondition("side-edge rerouting needs clockwise triangle-crossing edges"));
    }
    if !has_side_edges(e, ctx) {
        return Err(precondition("no a-hook, a-arrow or a-sickle"));
    }
    let plan = applicable_side(e, ctx).ok_or_else(|| precondition("side edge obstructed"))?;
    let lemma = match plan.class {
        CrosserClass::AHook => Lemma::SideHook,
        CrosserClass::ASickle => Lemma::SideSickle,
        _ => Lemma::SideArrow,
    };
    let mut b = Builder::new(e, lemma, target(ctx), Some(plan.fr.view));
    match plan.lead {
        None => hook(&mut b, &plan)?,
        Some(lead) => corner(&mut b, &plan, lead)?,
    }
    Ok(b.finish())
}

/// Triangle-crossing edges are led along the outside of the hook `f`,
/// pass `{a,b}` next to it and continue inside along `{a,b}`.
fn hook(b: &mut Builder, plan: &SidePlan) -> Result<(), RerouteError> {
    let fr = plan.fr;
    let mut prev = plan.f;
    for &g in &plan.members {
        let e = &b.e;
        let s = side_of(e, prev, fr.ab, fr.b, leaves_tail(e, prev, fr.w));
        let inward = heads_toward(e, fr.ab, Anchor::Cross(prev), Anchor::Cross(g));
        let route = vec![
            follow(prev, Anchor::Vertex(fr.w), Anchor::Cross(fr.ab), s),
            RouteDirective::Pierce {
                guide: fr.ab,
                at: Anchor::Cross(prev),
                toward_head: inward,
                sign: sign_from(e, fr.ab, prev, fr.w).expect("crosses ab"),
            },
            follow(fr.ab, Anchor::Cross(prev), Anchor::Cross(g), side_of(e, fr.ab, prev, fr.w, inward).flip()),
            rest_of(e, g, fr.ab, fr.w),
        ];
        b.reroute(g, route)?;
        prev = g;
    }
    Ok(())
}

/// Sickle and arrow recipe: each triangle-crossing edge follows the lead
/// to `{a,c}`, runs outside along `{a,c}` to the side edge `f`, passes
/// `{a,c}` next to it, follows `f` inside the triangle to `{a,b}` and then
/// `{a,b}` to its old course.
fn corner(b: &mut Builder, plan: &SidePlan, lead: EdgeId) -> Result<(), RerouteError> {
    let fr = plan.fr;
    let f = plan.f;
    let ac_first = {
        let seq = crate::classify::crossed_from(&b.e, f, fr.w);
        seq.iter().position(|&x| x == fr.ac) < seq.iter().position(|&x| x == fr.ab)
    };
    for &g in &plan.members {
        let e = &b.e;
        let mut route = Vec::new();
        if lead == g {
            route.push(follow(g, Anchor::Vertex(fr.w), Anchor::Cross(fr.ac), Side::Left));
        } else {
            let s = side_of(e, lead, fr.ac, fr.a, leaves_tail(e, lead, fr.w));
            route.push(follow(lead, Anchor::Vertex(fr.w), Anchor::Cross(fr.ac), s));
        }
        let d1 = heads_toward(e, fr.ac, Anchor::Cross(lead), Anchor::Cross(f));
        route.push(follow(fr.ac, Anchor::Cross(lead), Anchor::Cross(f), side_of(e, fr.ac, lead, fr.w, d1)));
        route.push(RouteDirective::Pierce {
            guide: fr.ac,
            at: Anchor::Cross(f),
            toward_head: !d1,
            sign: sign_from(e, fr.ac, lead, fr.w).expect("crosses ac"),
        });
        let d2 = heads_toward(e, f, Anchor::Cross(fr.ac), Anchor::Cross(fr.ab));
        route.push(follow(f, Anchor::Cross(fr.ac), Anchor::Cross(fr.ab), side_of(e, f, fr.ac, fr.a, d2).flip()));
        let d3 = heads_toward(e, fr.ab, Anchor::Cross(f), Anchor::Cross(g));
        let origin = side_of(e, fr.ab, f, fr.w, d3);
        route.push(follow(fr.ab, Anchor::Cross(f), Anchor::Cross(g), if ac_first { origin } else { origin.flip() }));
        route.push(rest_of(e, g, fr.ab, fr.w));
        b.reroute(g, route)?;
    }
    Ok(())
}

/// Needles from the apex that cross `{a,c}` between `a` and the guide `f`
/// and are covered by `c` are led along `f` and `{a,c}` first.
pub fn preroute_covered_needles(
    e: &Embedding,
    ctx: &TriangleCrossingContext,
) -> Result<(Embedding, TraceStep), RerouteError> {
    require_normalized(ctx)?;
    let fr = Frame::of(e, ctx, Viewpoint::Apex).expect("apex frame");
    let f = base_guide(e, ctx, fr)?;
    let mut b = Builder::new(e, Lemma::NeedlePreroute, target(ctx), Some(fr.view));
    needles(&mut b, ctx, fr, f)?;
    Ok(b.finish())
}

fn needles(b: &mut Builder, ctx: &TriangleCrossingContext, fr: Frame, f: EdgeId) -> Result<(), RerouteError> {
    let e0 = b.e.clone();
    // From p1 toward a.
    let mut seq = crate::classify::crossed_from(&e0, fr.ac, fr.a);
    seq.reverse();
    let Some(p1) = seq.iter().position(|&g| g == f) else {
        return Err(precondition("guide does not cross ac"));
    };
    let between: Vec<EdgeId> = seq[p1 + 1..]
        .iter()
        .copied()
        .filter(|&g| e0.graph.incident(g, fr.w) && !ctx.crossing_edges.contains(&g))
        .collect();
    let Some(last) = between.iter().rposition(|&g| covered_by(&e0, g, fr.c)) else {
        return Ok(());
    };
    let mut prev = f;
    for &n in &between[..=last] {
        let e = &b.e;
        let s = side_of(e, prev, fr.ac, fr.a, leaves_tail(e, prev, fr.w));
        let dir = heads_toward(e, fr.ac, Anchor::Cross(prev), Anchor::Cross(n));
        let route = vec![
            follow(prev, Anchor::Vertex(fr.w), Anchor::Cross(fr.ac), s),
            follow(fr.ac, Anchor::Cross(prev), Anchor::Cross(n), side_of(e, fr.ac, prev, fr.w, dir)),
            RouteDirective::Pierce {
                guide: fr.ac,
                at: Anchor::Cross(n),
                toward_head: !dir,
                sign: sign_from(e, fr.ac, n, fr.w).expect("crosses ac"),
            },
            rest_of(e, n, fr.ac, fr.w),
        ];
        b.reroute(n, route)?;
        prev = n;
    }
    Ok(())
}

/// `{w,b}` when present, else the crosser of both `{a,c}` and `{b,c}`
/// from `w` whose crossing with `{b,c}` is nearest to `b`.
fn base_guide(e: &Embedding, ctx: &TriangleCrossingContext, fr: Frame) -> Result<EdgeId, RerouteError> {
    if let Some(f) = e.graph.find_edge(fr.w, fr.b) {
        if e.crosses(f, fr.ac) {
            return Ok(f);
        }
        return Err(precondition("edge wb does not cross ac"));
    }
    let _ = ctx;
    crate::classify::crossed_from(e, fr.bc, fr.b)
        .into_iter()
        .find(|&g| e.graph.incident(g, fr.w) && e.crosses(g, fr.ac))
        .ok_or_else(|| precondition("no guide crossing ac and bc"))
}

fn far_ends(e: &Embedding, ctx: &TriangleCrossingContext, w: Vertex) -> Vec<Vertex> {
    ctx.crossing_edges.iter().map(|&g| e.graph.other_end(g, w)).collect()
}

/// Lemma on base rerouting: `{a,b}` is led along `{a,c}`, the guide and
/// `{b,c}`; seen from the inner vertex the same recipe reroutes `{a,c}`.
pub fn reroute_base(
    e: &Embedding,
    ctx: &TriangleCrossingContext,
) -> Result<(Vec<TraceStep>, Embedding), RerouteError> {
    require_normalized(ctx)?;
    if ctx.direction != Direction::Cw {
        return Err(precondition("base rerouting needs clockwise triangle-crossing edges"));
    }
    if applicable_side(e, ctx).is_some() {
        return Err(precondition("side-edge rerouting applies"));
    }
    let fr = base_frame(e, ctx).ok_or_else(|| precondition("triangle edges covered from both sides"))?;
    let view = fr.view;
    {
        let f = base_guide(e, ctx, fr)?;
        let mut steps = Vec::new();
        let mut cur = e.clone();
        let mut pre = Builder::new(&cur, Lemma::NeedlePreroute, target(ctx), Some(view));
        needles(&mut pre, ctx, fr, f)?;
        if !pre.step.surgeries.is_empty() {
            let (next, step) = pre.finish();
            cur = next;
            steps.push(step);
        }
        let mut b = Builder::new(&cur, Lemma::BaseReroute, target(ctx), Some(view));
        let route = base_route(&cur, fr, f);
        b.reroute(fr.ab, route)?;
        let (out, step) = b.finish();
        steps.push(step);
        Ok((steps, out))
    }
}

/// First viewpoint from which the rerouted edges are not covered.
fn base_frame(e: &Embedding, ctx: &TriangleCrossingContext) -> Option<Frame> {
    [Viewpoint::Apex, Viewpoint::Inner].into_iter().find_map(|view| {
        let fr = Frame::of(e, ctx, view)?;
        let others = match view {
            Viewpoint::Apex => far_ends(e, ctx, fr.w),
            Viewpoint::Inner => vec![ctx.apex?],
        };
        let free = !others.iter().any(|&x| covered_by(e, fr.ac, x) || covered_by(e, fr.bc, x));
        free.then_some(fr)
    })
}

fn base_route(e: &Embedding, fr: Frame, f: EdgeId) -> Vec<RouteDirective> {
    let mut route = Vec::new();
    let d1 = heads_toward(e, fr.ac, Anchor::Vertex(fr.a), Anchor::Cross(f));
    route.push(follow(fr.ac, Anchor::Vertex(fr.a), Anchor::Cross(f), side_of(e, fr.ac, f, fr.w, d1).flip()));
    let direct = e.graph.incident(f, fr.b);
    let to = if direct { Anchor::Vertex(fr.b) } else { Anchor::Cross(fr.bc) };
    let d2 = heads_toward(e, f, Anchor::Cross(fr.ac), to);
    route.push(follow(f, Anchor::Cross(fr.ac), to, side_of(e, f, fr.ac, fr.a, d2)));
    if !direct {
        let d3 = heads_toward(e, fr.bc, Anchor::Cross(f), Anchor::Vertex(fr.b));
        route.push(follow(fr.bc, Anchor::Cross(f), Anchor::Vertex(fr.b), side_of(e, fr.bc, f, fr.w, d3)));
    }
    route
}

/// Lemma on triangle-crossing edges in both directions.
pub fn eliminate_bidirectional(
    e: &Embedding,
    ctx: &TriangleCrossingContext,
) -> Result<(Embedding, TraceStep), RerouteError> {
    if ctx.direction != Direction::Both {
        return Err(precondition("triangle is not crossed in both directions"));
    }
    super::bidir::run(e, ctx)
}

/// Number of (triangle, triangle-crossing edge) pairs.
fn incidences(e: &Embedding) -> usize {
    triangle_crossings_direct(e).iter().map(|c| c.crossing_edges.len()).sum()
}

fn crossed_triangles(e: &Embedding) -> BTreeSet<[Vertex; 3]> {
    triangle_crossings_direct(e).iter().map(|c| c.triangle()).collect()
}

/// Remove all triangle-crossings; the output is a fan-crossing embedding of
/// the same graph.
pub fn make_fan_crossing(e: &Embedding) -> Result<(Embedding, RerouteTrace), RerouteError> {
    if !is_adjacency_crossing(e) {
        return Err(RerouteError::NotAdjacencyCrossing);
    }
    let mut cur = e.clone();
    let mut trace = RerouteTrace::default();
    loop {
        let contexts = triangle_crossings_direct(&cur);
        if contexts.is_empty() {
            break;
        }
        let before: BTreeSet<[Vertex; 3]> = contexts.iter().map(|c| c.triangle()).collect();
        let normal: Vec<TriangleCrossingContext> = contexts.iter().map(|c| normalize_triangle(&cur, c).1).collect();
        let has_side = |c: &TriangleCrossingContext| c.direction == Direction::Cw && applicable_side(&cur, c).is_some();
        let pick = normal
            .iter()
            .position(|c| c.direction == Direction::Both)
            .or_else(|| normal.iter().position(has_side))
            .or_else(|| normal.iter().position(|c| c.direction == Direction::Cw && base_frame(&cur, c).is_some()))
            .ok_or_else(|| precondition("no rerouting lemma applies to any crossed triangle"))?;
        let ctx = &normal[pick];
        if ctx.relabeled != contexts[pick].relabeled {
            let raw = &contexts[pick];
            trace.steps.push(TraceStep {
                lemma: Lemma::Normalize,
                target: target(raw),
                view: None,
                relabel: Some(([raw.a, raw.b, raw.c], [ctx.a, ctx.b, ctx.c])),
                surgeries: Vec::new(),
                changes: Vec::new(),
                crossing_delta: 0,
            });
        }
        let (next, steps) = if ctx.direction == Direction::Both {
            let (n, s) = eliminate_bidirectional(&cur, ctx)?;
            (n, vec![s])
        } else if has_side(ctx) {
            let (n, s) = eliminate_with_side_edge(&cur, ctx)?;
            (n, vec![s])
        } else {
            let (s, n) = reroute_base(&cur, ctx)?;
            (n, s)
        };
        let lemma = steps.last().map(|s| s.lemma).unwrap_or(Lemma::BaseReroute);
        let after = crossed_triangles(&next);
        let shrunk = after.len() < before.len() || incidences(&next) < incidences(&cur);
        if !is_adjacency_crossing(&next) || !after.is_subset(&before) || !shrunk {
            return Err(RerouteError::NoProgress { lemma });
        }
        trace.steps.extend(steps);
        cur = next;
    }
    Ok((cur, trace))
}
