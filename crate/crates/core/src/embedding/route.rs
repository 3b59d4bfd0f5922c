use serde::Serialize;

use super::{EdgeId, Embedding, Sign, Vertex};

/// A position along a guide edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Anchor {
    /// An endpoint of the guide.
    Vertex(Vertex),
    /// The point where the guide crosses the given edge.
    Cross(EdgeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One leg of a route for a rerouted edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RouteDirective {
    /// Run alongside `guide` from one anchor to another, on the given side
    /// relative to the direction of travel, crossing every edge that crosses
    /// the guide strictly inside the span. With `guide` equal to the
    /// rerouted edge itself the new course coincides with the old one.
    Follow { guide: EdgeId, from: Anchor, to: Anchor, side: Side },
    /// Cross `guide` immediately next to `at`, on the part of the guide
    /// toward its head (`toward_head`) or tail. `sign` is the record stored
    /// on the guide, taken in the direction of travel.
    Pierce { guide: EdgeId, at: Anchor, toward_head: bool, sign: Sign },
}

/// A crossing of the new course, in travel order, with its insertion gap on
/// the host computed in coordinates of the embedding without the rerouted edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Step {
    pub host: EdgeId,
    pub gap: usize,
    /// Sign recorded on the host, relative to the direction of travel.
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Compiled {
    pub start: Vertex,
    pub end: Vertex,
    pub steps: Vec<Step>,
    /// Rotation position at the start and end vertex, as (edge, place after it).
    pub start_slot: SlotSpec,
    pub end_slot: SlotSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SlotSpec {
    /// Keep the rerouted edge where it was.
    Keep,
    /// Immediately counterclockwise after the given edge.
    After(EdgeId),
    /// Immediately counterclockwise before the given edge.
    Before(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RouteError {
    Empty,
    BadAnchor(EdgeId, Anchor),
    Discontinuous(usize),
    Endpoints,
}

/// Position of an anchor on edge `h` in the crossing list of `e`; tail is
/// -1 and head is the list length.
fn position(e: &Embedding, h: EdgeId, a: Anchor) -> Option<isize> {
    let (t, hd) = e.graph.edges[h];
    match a {
        Anchor::Vertex(v) if v == t => Some(-1),
        Anchor::Vertex(v) if v == hd => Some(e.crossings[h].len() as isize),
        Anchor::Vertex(_) => None,
        Anchor::Cross(x) => e.crossing_index(h, x).map(|i| i as isize),
    }
}

/// Convert an insertion gap on `host` from coordinates with `g` present to
/// coordinates with `g` removed.
fn without(e: &Embedding, g: EdgeId, host: EdgeId, gap: usize) -> usize {
    match e.crossing_index(host, g) {
        Some(i) if i < gap => gap - 1,
        _ => gap,
    }
}

pub(crate) fn compile(e: &Embedding, g: EdgeId, route: &[RouteDirective]) -> Result<Compiled, RouteError> {
    let (gt, gh) = e.graph.edges[g];
    let first = route.first().ok_or(RouteError::Empty)?;
    let last = route.last().ok_or(RouteError::Empty)?;
    let start = match *first {
        RouteDirective::Follow { from: Anchor::Vertex(v), .. } => v,
        _ => return Err(RouteError::Endpoints),
    };
    let end = match *last {
        RouteDirective::Follow { to: Anchor::Vertex(v), .. } => v,
        _ => return Err(RouteError::Endpoints),
    };
    if !((start == gt && end == gh) || (start == gh && end == gt)) {
        return Err(RouteError::Endpoints);
    }
    let reversed = start == gh;
    let mut steps = Vec::new();
    for (k, dir) in route.iter().enumerate() {
        match *dir {
            RouteDirective::Follow { guide, from, to, side } => {
                let pf = position(e, guide, from).ok_or(RouteError::BadAnchor(guide, from))?;
                let pt = position(e, guide, to).ok_or(RouteError::BadAnchor(guide, to))?;
                if (k > 0 && matches!(from, Anchor::Vertex(_)))
                    || (k + 1 < route.len() && matches!(to, Anchor::Vertex(_)))
                {
                    return Err(RouteError::Discontinuous(k));
                }
                let forward = pt > pf;
                let range: Vec<usize> = if forward {
                    ((pf + 1)..pt).map(|i| i as usize).collect()
                } else {
                    ((pt + 1)..pf).rev().map(|i| i as usize).collect()
                };
                for i in range {
                    let c = e.crossings[guide][i];
                    if c.other == g {
                        continue;
                    }
                    let x = c.other;
                    if guide == g {
                        // Adopt the old crossing at its old place.
                        let j = e.crossing_index(x, g).expect("reciprocal record");
                        let old = e.crossings[x][j].sign;
                        steps.push(Step { host: x, gap: j, sign: if reversed { old.flip() } else { old } });
                        continue;
                    }
                    let on_left = (side == Side::Left) == forward;
                    let tail_part = on_left == (c.sign == Sign::LR);
                    let j = e.crossing_index(x, guide).expect("reciprocal record");
                    let gap = if tail_part { j } else { j + 1 };
                    let sign = if (c.sign == Sign::LR) == forward { Sign::RL } else { Sign::LR };
                    steps.push(Step { host: x, gap: without(e, g, x, gap), sign });
                }
            }
            RouteDirective::Pierce { guide, at, toward_head, sign } => {
                let p = position(e, guide, at).ok_or(RouteError::BadAnchor(guide, at))?;
                let gap = if toward_head { p + 1 } else { p.max(0) } as usize;
                let gap = gap.min(e.crossings[guide].len());
                steps.push(Step { host: guide, gap: without(e, g, guide, gap), sign });
            }
        }
    }
    let slot = |d: &RouteDirective, at_start: bool| -> SlotSpec {
        match *d {
            RouteDirective::Follow { guide, .. } if guide == g => SlotSpec::Keep,
            RouteDirective::Follow { guide, side, .. } => match (at_start, side) {
                (true, Side::Left) => SlotSpec::After(guide),
                (true, Side::Right) => SlotSpec::Before(guide),
                (false, Side::Left) => SlotSpec::Before(guide),
                (false, Side::Right) => SlotSpec::After(guide),
            },
            RouteDirective::Pierce { .. } => SlotSpec::Keep,
        }
    };
    Ok(Compiled { start, end, steps, start_slot: slot(first, true), end_slot: slot(last, false) })
}
