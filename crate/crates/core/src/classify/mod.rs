//! Crossing-pattern predicates and the taxonomy of edges crossing a triangle.

mod config2;
pub(crate) mod region;
mod triangle;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{EdgeId, Embedding, Sign, Vertex};

pub use config2::{config_ii_instances, CurveSide, ConfigIIInstance};
pub(crate) use triangle::refresh;
pub use triangle::{
    classify_crossers, triangle_crossing_edges, triangle_crossings_direct, triangle_crossings_via_cover, CrosserClass,
    Direction, TriangleCrossingContext, TriangleEdge, Viewpoint,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("embedding has independent crossings")]
    NotAdjacencyCrossing,
    #[error("context is not in standard configuration")]
    NotNormalized,
    #[error("viewpoint {0:?} is not available for this context")]
    Viewpoint(Viewpoint),
}

/// Edges incident to `v` that cross `target`, in crossing order along it.
pub fn fan_of(e: &Embedding, v: Vertex, target: EdgeId) -> Vec<EdgeId> {
    e.crossers(target).filter(|&f| e.graph.incident(f, v)).collect()
}

/// Edges crossed by at least two edges incident to `v`.
pub fn cover_of(e: &Embedding, v: Vertex) -> Vec<EdgeId> {
    (0..e.m()).filter(|&h| covered_by(e, h, v)).collect()
}

pub fn covered_by(e: &Embedding, h: EdgeId, v: Vertex) -> bool {
    e.crossers(h).filter(|&f| e.graph.incident(f, v)).count() >= 2
}

/// An edge crossed by two edges without a common endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndependentCrossing {
    pub host: EdgeId,
    pub first: EdgeId,
    pub second: EdgeId,
}

pub fn independent_crossings(e: &Embedding) -> Vec<IndependentCrossing> {
    let mut out = Vec::new();
    for host in 0..e.m() {
        let xs: Vec<EdgeId> = e.crossers(host).collect();
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let (f, g) = (xs[i].min(xs[j]), xs[i].max(xs[j]));
                if !e.graph.adjacent(f, g) {
                    out.push(IndependentCrossing { host, first: f, second: g });
                }
            }
        }
    }
    out
}

pub fn is_adjacency_crossing(e: &Embedding) -> bool {
    (0..e.m()).all(|h| {
        let xs: Vec<EdgeId> = e.crossers(h).collect();
        xs.iter().enumerate().all(|(i, &f)| xs[i + 1..].iter().all(|&g| e.graph.adjacent(f, g)))
    })
}

/// Common endpoint of all crossers of `h`, when there are at least two.
pub fn fan_apex(e: &Embedding, h: EdgeId) -> Option<Vertex> {
    let mut it = e.crossers(h);
    let first = it.next()?;
    let (a, b) = e.graph.edges[first];
    let mut cand = vec![a, b];
    let mut count = 1;
    for f in it {
        count += 1;
        cand.retain(|&v| e.graph.incident(f, v));
    }
    if count < 2 {
        return None;
    }
    cand.first().copied()
}

pub fn is_fan_crossing(e: &Embedding) -> bool {
    (0..e.m()).all(|h| e.crossings[h].len() < 2 || fan_apex(e, h).is_some())
}

pub fn is_one_planar(e: &Embedding) -> bool {
    e.crossings.iter().all(|l| l.len() <= 1)
}

/// No edge is crossed by two adjacent edges.
pub fn is_fan_crossing_free(e: &Embedding) -> bool {
    (0..e.m()).all(|h| {
        let xs: Vec<EdgeId> = e.crossers(h).collect();
        xs.iter().enumerate().all(|(i, &f)| xs[i + 1..].iter().all(|&g| !e.graph.adjacent(f, g)))
    })
}

/// Sign of `crosser` on `host`, taken with `crosser` oriented away from `from`.
pub fn sign_from(e: &Embedding, host: EdgeId, crosser: EdgeId, from: Vertex) -> Option<Sign> {
    let s = e.sign(host, crosser)?;
    Some(if e.graph.edges[crosser].0 == from { s } else { s.flip() })
}

/// Crossers of `g` in order of travel starting at endpoint `from`.
pub fn crossed_from(e: &Embedding, g: EdgeId, from: Vertex) -> Vec<EdgeId> {
    let mut xs: Vec<EdgeId> = e.crossers(g).collect();
    if e.graph.edges[g].1 == from {
        xs.reverse();
    }
    xs
}

/// Named embedding classes, usable as enumeration filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AdjacencyCrossing,
    FanCrossing,
    FanPlanar,
    FanCrossingFree,
    OnePlanar,
    TriangleCrossing,
    ConfigIi,
}

impl Verdict {
    pub const ALL: [Verdict; 7] = [
        Verdict::AdjacencyCrossing,
        Verdict::FanCrossing,
        Verdict::FanPlanar,
        Verdict::FanCrossingFree,
        Verdict::OnePlanar,
        Verdict::TriangleCrossing,
        Verdict::ConfigIi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verdict::AdjacencyCrossing => "adjacency-crossing",
            Verdict::FanCrossing => "fan-crossing",
            Verdict::FanPlanar => "fan-planar",
            Verdict::FanCrossingFree => "fan-crossing-free",
            Verdict::OnePlanar => "1-planar",
            Verdict::TriangleCrossing => "triangle-crossing",
            Verdict::ConfigIi => "config-ii",
        }
    }

    pub fn from_name(s: &str) -> Option<Verdict> {
        Verdict::ALL.into_iter().find(|v| v.name() == s)
    }

    /// Classes closed under deleting edges, so a drawn prefix outside the
    /// class can be pruned.
    pub fn monotone(self) -> bool {
        matches!(
            self,
            Verdict::AdjacencyCrossing | Verdict::FanCrossing | Verdict::FanCrossingFree | Verdict::OnePlanar
        )
    }

    /// Check on a partially drawn embedding; only meaningful for monotone classes.
    pub(crate) fn holds_partial(self, e: &Embedding) -> bool {
        match self {
            Verdict::AdjacencyCrossing => is_adjacency_crossing(e),
            Verdict::FanCrossing => is_fan_crossing(e),
            Verdict::FanCrossingFree => is_fan_crossing_free(e),
            Verdict::OnePlanar => is_one_planar(e),
            _ => true,
        }
    }

    pub fn holds(self, e: &Embedding) -> bool {
        match self {
            Verdict::AdjacencyCrossing => is_adjacency_crossing(e),
            Verdict::FanCrossing => is_fan_crossing(e),
            Verdict::FanCrossingFree => is_fan_crossing_free(e),
            Verdict::OnePlanar => is_one_planar(e),
            Verdict::FanPlanar => is_fan_planar(e),
            Verdict::TriangleCrossing => !triangle_crossing_edges(e).is_empty(),
            Verdict::ConfigIi => config_ii_instances(e).map(|v| !v.is_empty()).unwrap_or(false),
        }
    }
}

pub fn is_fan_planar(e: &Embedding) -> bool {
    is_adjacency_crossing(e) && config_ii_instances(e).map(|v| v.is_empty()).unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Density {
    pub n: usize,
    pub m: usize,
    /// 5n - 10; negative for n < 2.
    pub bound: i64,
    pub within: bool,
}

pub fn density(e: &Embedding) -> Density {
    let bound = 5 * e.n() as i64 - 10;
    Density { n: e.n(), m: e.m(), bound, within: e.n() < 3 || e.m() as i64 <= bound }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    pub adjacency_crossing: bool,
    pub fan_crossing: bool,
    pub fan_planar: bool,
    pub fan_crossing_free: bool,
    pub one_planar: bool,
    pub crossers: Vec<Vec<EdgeId>>,
    pub independent_crossings: Vec<IndependentCrossing>,
    pub triangle_crossings: Vec<TriangleCrossingContext>,
    pub config_ii: Vec<ConfigIIInstance>,
    /// Count of each crosser class over all triangle contexts.
    pub class_histogram: BTreeMap<String, usize>,
    pub density: Density,
}

pub fn verdicts(e: &Embedding) -> PatternReport {
    let independent = independent_crossings(e);
    let adjacency = independent.is_empty();
    let triangles = triangle_crossings_direct(e);
    let config_ii = if adjacency { config_ii_instances(e).unwrap_or_default() } else { Vec::new() };
    let mut hist = BTreeMap::new();
    for ctx in &triangles {
        for (class, _) in ctx.classes.values() {
            *hist.entry(class.name().to_string()).or_insert(0) += 1;
        }
    }
    PatternReport {
        adjacency_crossing: adjacency,
        fan_crossing: is_fan_crossing(e),
        fan_planar: adjacency && config_ii.is_empty(),
        fan_crossing_free: is_fan_crossing_free(e),
        one_planar: is_one_planar(e),
        crossers: (0..e.m()).map(|h| e.crossers(h).collect()).collect(),
        independent_crossings: independent,
        triangle_crossings: triangles,
        config_ii,
        class_histogram: hist,
        density: density(e),
    }
}

#[cfg(test)]
mod tests;
