use thiserror::Error;

use super::{Crossing, Dir, EdgeId, Embedding, Graph, GraphError, OuterDart, Sign, Vertex};

/// A straight-line or polyline drawing used to author embeddings.
#[derive(Debug, Clone, Default)]
pub struct Drawing {
    pub points: Vec<(f64, f64)>,
    /// Edges as endpoints plus interior bend points, listed from the first
    /// endpoint to the second.
    pub edges: Vec<(Vertex, Vertex, Vec<(f64, f64)>)>,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DrawingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edges {0} and {1} touch or overlap")]
    Degenerate(EdgeId, EdgeId),
    #[error("edges {0} and {1} cross more than once")]
    DoubleCrossing(EdgeId, EdgeId),
    #[error("adjacent edges {0} and {1} cross")]
    AdjacentCrossing(EdgeId, EdgeId),
    #[error("the leftmost vertex is not strictly left of every other point")]
    NoOuterVertex,
}

fn cross(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

const EPS: f64 = 1e-9;

impl Drawing {
    pub fn new(points: Vec<(f64, f64)>) -> Self {
        Drawing { points, edges: Vec::new() }
    }

    pub fn line(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.edges.push((u, v, Vec::new()));
        self
    }

    pub fn poly(&mut self, u: Vertex, v: Vertex, bends: &[(f64, f64)]) -> &mut Self {
        self.edges.push((u, v, bends.to_vec()));
        self
    }

    /// Polyline of edge `i`, oriented from its smaller endpoint.
    fn path(&self, i: usize) -> Vec<(f64, f64)> {
        let (u, v, ref bends) = self.edges[i];
        let mut pts = vec![self.points[u]];
        pts.extend(bends.iter().copied());
        pts.push(self.points[v]);
        if u > v {
            pts.reverse();
        }
        pts
    }

    pub fn to_embedding(&self) -> Result<Embedding, DrawingError> {
        let graph = Graph::new(self.points.len(), self.edges.iter().map(|&(u, v, _)| (u, v)))?;
        let m = graph.m();
        let paths: Vec<Vec<(f64, f64)>> = (0..m).map(|i| self.path(i)).collect();
        // (position along edge, other edge, sign recorded on this edge)
        let mut hits: Vec<Vec<(f64, EdgeId, Sign)>> = vec![Vec::new(); m];
        for e in 0..m {
            for f in e + 1..m {
                let mut found = 0;
                for (i, w) in paths[e].windows(2).enumerate() {
                    for (j, x) in paths[f].windows(2).enumerate() {
                        let r = sub(w[1], w[0]);
                        let s = sub(x[1], x[0]);
                        let den = cross(r, s);
                        let q = sub(x[0], w[0]);
                        if den.abs() < EPS {
                            if cross(q, r).abs() < EPS {
                                let rr = r.0 * r.0 + r.1 * r.1;
                                let t0 = (q.0 * r.0 + q.1 * r.1) / rr;
                                let t1 = t0 + (s.0 * r.0 + s.1 * r.1) / rr;
                                let (lo, hi) = (t0.min(t1), t0.max(t1));
                                if hi > EPS && lo < 1.0 - EPS {
                                    return Err(DrawingError::Degenerate(e, f));
                                }
                            }
                            continue;
                        }
                        let t = cross(q, s) / den;
                        let u = cross(q, r) / den;
                        let inside = |x: f64| x > EPS && x < 1.0 - EPS;
                        let touching = |x: f64| x > -EPS && x < 1.0 + EPS;
                        if inside(t) && inside(u) {
                            found += 1;
                            let sign_e = if cross(r, s) < 0.0 { Sign::LR } else { Sign::RL };
                            hits[e].push((i as f64 + t, f, sign_e));
                            hits[f].push((j as f64 + u, e, sign_e.flip()));
                        } else if touching(t) && touching(u) {
                            // Meeting at a shared endpoint is fine; anything else is degenerate.
                            let pt = (w[0].0 + t * r.0, w[0].1 + t * r.1);
                            let shared = graph.common_vertex(e, f).map(|c| {
                                let q = self.points[c];
                                (q.0 - pt.0).abs() < 1e-6 && (q.1 - pt.1).abs() < 1e-6
                            });
                            if shared != Some(true) {
                                return Err(DrawingError::Degenerate(e, f));
                            }
                        }
                    }
                }
                if found > 1 {
                    return Err(DrawingError::DoubleCrossing(e, f));
                }
                if found == 1 && graph.adjacent(e, f) {
                    return Err(DrawingError::AdjacentCrossing(e, f));
                }
            }
        }
        let crossings: Vec<Vec<Crossing>> = hits
            .into_iter()
            .map(|mut h| {
                h.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
                h.into_iter().map(|(_, other, sign)| Crossing { other, sign }).collect()
            })
            .collect();
        let n = graph.n;
        let mut rotations = vec![Vec::new(); n];
        let mut first_angle = vec![Vec::new(); n];
        for e in 0..m {
            let p = &paths[e];
            let (t, h) = graph.edges[e];
            let a_t = (p[1].1 - p[0].1).atan2(p[1].0 - p[0].0);
            let k = p.len();
            let a_h = (p[k - 2].1 - p[k - 1].1).atan2(p[k - 2].0 - p[k - 1].0);
            first_angle[t].push((a_t, e));
            first_angle[h].push((a_h, e));
        }
        for v in 0..n {
            first_angle[v].sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
            rotations[v] = first_angle[v].iter().map(|&(_, e)| e).collect();
        }
        // Outer face: the wedge facing west at the leftmost vertex.
        let lv = (0..n)
            .filter(|&v| !rotations[v].is_empty())
            .min_by(|&a, &b| self.points[a].0.partial_cmp(&self.points[b].0).expect("finite"))
            .ok_or(DrawingError::NoOuterVertex)?;
        let lx = self.points[lv].0;
        let others = paths.iter().flatten().filter(|p| **p != self.points[lv]);
        if others.into_iter().any(|p| p.0 <= lx + EPS) {
            return Err(DrawingError::NoOuterVertex);
        }
        let &(_, e_out) = first_angle[lv].last().expect("vertex has edges");
        let (t, _) = graph.edges[e_out];
        let outer = if t == lv {
            OuterDart { edge: e_out, segment: 0, dir: Dir::Fwd }
        } else {
            OuterDart { edge: e_out, segment: crossings[e_out].len(), dir: Dir::Rev }
        };
        Ok(Embedding { graph, crossings, rotations, outer })
    }
}
