//! Edge rerouting: removal of triangle-crossings and of configuration II.

mod bidir;
mod config2;
mod triangle;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{sign_from, Viewpoint};
use crate::embedding::{Crossing, EdgeId, Embedding, RouteDirective, Side, Slot, SurgeryError, Vertex};

pub use config2::{augment_apex, fan_planarize, reroute_left_curves, reroute_via_semicovered};
pub use triangle::{
    eliminate_bidirectional, eliminate_with_side_edge, make_fan_crossing, normalize_triangle, preroute_covered_needles,
    reroute_base,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RerouteError {
    #[error("embedding is not adjacency-crossing")]
    NotAdjacencyCrossing,
    #[error("embedding is not fan-crossing")]
    NotFanCrossing,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{lemma:?} made no progress")]
    NoProgress { lemma: Lemma },
    #[error("no replacement edge for base {0}")]
    NoReplacement(EdgeId),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    Normalize,
    Bidirectional,
    SideHook,
    SideSickle,
    SideArrow,
    NeedlePreroute,
    BaseReroute,
    AugmentApex,
    LeftCurves,
    SemiCovered,
    BaseReplacement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Triangle { a: Vertex, b: Vertex, c: Vertex },
    Base { edge: EdgeId, u: Vertex, v: Vertex, apex: Vertex },
}

/// A replayable edit of the embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Surgery {
    Reroute { edge: EdgeId, route: Vec<RouteDirective> },
    Delete { edge: EdgeId },
    Insert { u: Vertex, v: Vertex, face: usize, slots: (Slot, Slot) },
    /// Add a new edge along a route.
    Add { u: Vertex, v: Vertex, route: Vec<RouteDirective> },
    /// Swap an edge for an uncrossed edge with the same id.
    Replace { edge: EdgeId, a: Vertex, b: Vertex, slots: (Slot, Slot) },
}

impl Surgery {
    pub fn apply(&self, e: &Embedding) -> Result<Embedding, SurgeryError> {
        match self {
            Surgery::Reroute { edge, route } => e.reroute_along(*edge, route),
            Surgery::Delete { edge } => e.delete_edge(*edge),
            Surgery::Insert { u, v, face, slots } => e.insert_edge_in_face(*u, *v, *face, *slots),
            Surgery::Add { u, v, route } => e.add_edge_along(*u, *v, route),
            Surgery::Replace { edge, a, b, slots } => e.replace_edge(*edge, *a, *b, *slots),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeChange {
    pub edge: EdgeId,
    pub endpoints: (Vertex, Vertex),
    pub old: Vec<Crossing>,
    pub new: Vec<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub lemma: Lemma,
    pub target: Target,
    pub view: Option<Viewpoint>,
    /// Triangle labels (a, b, c) before and after a normalization.
    pub relabel: Option<([Vertex; 3], [Vertex; 3])>,
    pub surgeries: Vec<Surgery>,
    pub changes: Vec<EdgeChange>,
    pub crossing_delta: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RerouteTrace {
    pub steps: Vec<TraceStep>,
}

impl RerouteTrace {
    /// Apply the recorded surgeries to `input` in order.
    pub fn replay(&self, input: &Embedding) -> Result<Embedding, SurgeryError> {
        let mut e = input.clone();
        for s in self.steps.iter().flat_map(|s| &s.surgeries) {
            e = s.apply(&e)?;
        }
        Ok(e)
    }

    pub fn surgery_count(&self) -> usize {
        self.steps.iter().map(|s| s.surgeries.len()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }
}

/// Accumulates the surgeries of one lemma application.
pub(crate) struct Builder {
    pub e: Embedding,
    start: usize,
    pub step: TraceStep,
}

impl Builder {
    pub fn new(e: &Embedding, lemma: Lemma, target: Target, view: Option<Viewpoint>) -> Builder {
        Builder {
            e: e.clone(),
            start: e.crossing_count(),
            step: TraceStep {
                lemma,
                target,
                view,
                relabel: None,
                surgeries: Vec::new(),
                changes: Vec::new(),
                crossing_delta: 0,
            },
        }
    }

    pub fn reroute(&mut self, edge: EdgeId, route: Vec<RouteDirective>) -> Result<(), RerouteError> {
        let old = self.e.crossings[edge].clone();
        let s = Surgery::Reroute { edge, route };
        self.e = s.apply(&self.e)?;
        self.step.changes.push(EdgeChange {
            edge,
            endpoints: self.e.graph.edges[edge],
            old,
            new: self.e.crossings[edge].clone(),
        });
        self.step.surgeries.push(s);
        Ok(())
    }

    pub fn add_along(&mut self, u: Vertex, v: Vertex, route: Vec<RouteDirective>) -> Result<EdgeId, RerouteError> {
        let s = Surgery::Add { u, v, route };
        self.e = s.apply(&self.e)?;
        let edge = self.e.m() - 1;
        self.step.changes.push(EdgeChange {
            edge,
            endpoints: self.e.graph.edges[edge],
            old: Vec::new(),
            new: self.e.crossings[edge].clone(),
        });
        self.step.surgeries.push(s);
        Ok(edge)
    }

    pub fn replace(&mut self, edge: EdgeId, a: Vertex, b: Vertex, slots: (Slot, Slot)) -> Result<(), RerouteError> {
        let old = self.e.crossings[edge].clone();
        let s = Surgery::Replace { edge, a, b, slots };
        self.e = s.apply(&self.e)?;
        self.step.changes.push(EdgeChange { edge, endpoints: self.e.graph.edges[edge], old, new: Vec::new() });
        self.step.surgeries.push(s);
        Ok(())
    }

    pub fn finish(mut self) -> (Embedding, TraceStep) {
        self.step.crossing_delta = self.e.crossing_count() as i64 - self.start as i64;
        (self.e, self.step)
    }
}

/// Side of `host`, relative to travel along it (toward its head when
/// `toward_head`), on which the endpoint `from` of `crosser` lies next to
/// their crossing.
pub(crate) fn side_of(e: &Embedding, host: EdgeId, crosser: EdgeId, from: Vertex, toward_head: bool) -> Side {
    let s = sign_from(e, host, crosser, from).expect("edges cross");
    // LR: the crosser leaves the host's left side.
    let side = if s == crate::Sign::LR { Side::Left } else { Side::Right };
    if toward_head {
        side
    } else {
        side.flip()
    }
}

/// Whether travel from `from` along `h` runs toward its head.
pub(crate) fn leaves_tail(e: &Embedding, h: EdgeId, from: Vertex) -> bool {
    e.graph.edges[h].0 == from
}

/// Whether travel along `h` from the crossing with `x` to the crossing with
/// `y` (or an endpoint) runs toward its head.
pub(crate) fn heads_toward(e: &Embedding, h: EdgeId, from: crate::embedding::Anchor, to: crate::embedding::Anchor) -> bool {
    pos(e, h, to) > pos(e, h, from)
}

pub(crate) fn pos(e: &Embedding, h: EdgeId, a: crate::embedding::Anchor) -> isize {
    use crate::embedding::Anchor;
    match a {
        Anchor::Vertex(v) if e.graph.edges[h].0 == v => -1,
        Anchor::Vertex(_) => e.crossings[h].len() as isize,
        Anchor::Cross(x) => e.crossing_index(h, x).expect("edges cross") as isize,
    }
}

#[cfg(test)]
mod tests;
