use super::triangle::{precondition, rest_of, span_crossers};
use super::{heads_toward, leaves_tail, side_of, Builder, Lemma, RerouteError, Target, TraceStep};
use crate::classify::{crossed_from, sign_from, TriangleCrossingContext};
use crate::embedding::{Anchor, EdgeId, Embedding, RouteDirective, Vertex};

/// Each triangle-crossing edge `g` is led along a neighbour `h` on the last
/// triangle edge `L` it crosses: along `h` from the apex to `L`, across `L`
/// next to `h` if `h` arrives from outside, then inside along `L` to the old
/// course of `g`. The neighbour is chosen so that the new course crosses a
/// single triangle edge. Edges without such a neighbour keep their course.
pub(crate) fn run(e: &Embedding, ctx: &TriangleCrossingContext) -> Result<(Embedding, TraceStep), RerouteError> {
    let u = ctx.apex.ok_or_else(|| precondition("no common apex"))?;
    let tri = [ctx.ac, ctx.bc, ctx.ab];
    let mut b = Builder::new(e, Lemma::Bidirectional, Target::Triangle { a: ctx.a, b: ctx.b, c: ctx.c }, None);
    loop {
        let pending: Vec<EdgeId> = ctx
            .crossing_edges
            .iter()
            .copied()
            .filter(|&g| tri.iter().all(|&t| b.e.crosses(g, t)))
            .collect();
        let Some((g, route)) = pending.iter().find_map(|&g| neighbour_route(&b.e, u, tri, g).map(|r| (g, r))) else {
            break;
        };
        b.reroute(g, route)?;
    }
    if b.step.surgeries.is_empty() {
        return Err(precondition("no triangle-crossing edge has a usable neighbour"));
    }
    Ok(b.finish())
}

fn neighbour_route(e: &Embedding, u: Vertex, tri: [EdgeId; 3], g: EdgeId) -> Option<Vec<RouteDirective>> {
    let seq = crossed_from(e, g, u);
    let last = *seq.iter().rev().find(|x| tri.contains(x))?;
    let on_last: Vec<EdgeId> = e.crossers(last).collect();
    let i = on_last.iter().position(|&x| x == g)?;
    let candidates = [i.checked_sub(1), Some(i + 1)];
    candidates.into_iter().flatten().filter_map(|j| on_last.get(j).copied()).find_map(|h| {
        if !e.graph.incident(h, u) || e.graph.adjacent(h, g) && e.graph.common_vertex(h, g) != Some(u) {
            return None;
        }
        let before: Vec<EdgeId> =
            crossed_from(e, h, u).into_iter().take_while(|&x| x != last).filter(|x| tri.contains(x)).collect();
        if before.len() > 1 {
            return None;
        }
        if span_crossers(e, h, Anchor::Vertex(u), Anchor::Cross(last))
            .iter()
            .any(|&x| !tri.contains(&x) && e.graph.adjacent(x, g))
        {
            return None;
        }
        let toward_head = heads_toward(e, last, Anchor::Cross(h), Anchor::Cross(g));
        let (t, hd) = e.graph.edges[last];
        let z = if toward_head { hd } else { t };
        let mut route = vec![RouteDirective::Follow {
            guide: h,
            from: Anchor::Vertex(u),
            to: Anchor::Cross(last),
            side: side_of(e, h, last, z, leaves_tail(e, h, u)),
        }];
        if before.is_empty() {
            route.push(RouteDirective::Pierce {
                guide: last,
                at: Anchor::Cross(h),
                toward_head,
                sign: sign_from(e, last, h, u).expect("crosses"),
            });
        }
        route.push(RouteDirective::Follow {
            guide: last,
            from: Anchor::Cross(h),
            to: Anchor::Cross(g),
            side: side_of(e, last, g, u, toward_head).flip(),
        });
        route.push(rest_of(e, g, last, u));
        Some(route)
    })
}
