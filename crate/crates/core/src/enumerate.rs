//! Exhaustive enumeration of simple topological embeddings of small graphs.
//!
//! Edges are inserted one at a time in an order where every new edge touches
//! an already drawn vertex. Each insertion walks a pen from the start corner
//! through the current planarization, crossing one face boundary segment at
//! a time, and closes at a corner of the other endpoint (or drops a new
//! vertex in the current face). Every sphere embedding within the crossing
//! budget is produced exactly once; the outer face of emitted embeddings is
//! the face to the left of the first segment of edge 0.

use std::collections::HashSet;

use thiserror::Error;

use crate::classify::{self, Verdict};
use crate::embedding::{canonical_code, Crossing, Dir, EdgeId, Embedding, Graph, OuterDart, Planarization, Sign};

pub const DEFAULT_CEILING: u128 = 100_000_000;
pub const CEILING_ENV: &str = "FANCROSS_ENUM_CEILING";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedupe {
    None,
    Isomorphism,
}

#[derive(Debug, Clone)]
pub struct EnumSpec {
    pub graph: Graph,
    pub max_crossings: usize,
    pub dedupe: Dedupe,
    pub filter: Option<Verdict>,
    /// Overrides the environment and the default ceiling.
    pub ceiling: Option<u128>,
}

impl EnumSpec {
    pub fn new(graph: Graph, max_crossings: usize) -> Self {
        EnumSpec { graph, max_crossings, dedupe: Dedupe::None, filter: None, ceiling: None }
    }

    pub fn deduped(mut self) -> Self {
        self.dedupe = Dedupe::Isomorphism;
        self
    }

    pub fn filtered(mut self, v: Verdict) -> Self {
        self.filter = Some(v);
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("search space estimate {estimate} exceeds the ceiling {ceiling}")]
    Infeasible { estimate: u128, ceiling: u128 },
    #[error("graph must be connected with at least one edge")]
    Disconnected,
}

/// Raw candidate count: sum over j <= k of C(p, j) * 4^j, with p the number
/// of non-adjacent edge pairs (a crossing set, two orders and two signs per
/// crossing).
pub fn search_estimate(g: &Graph, k: usize) -> u128 {
    let m = g.m();
    let mut p: u128 = 0;
    for e in 0..m {
        for f in e + 1..m {
            if !g.adjacent(e, f) {
                p += 1;
            }
        }
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow: u128 = 1;
    for j in 0..=k as u128 {
        if j > p {
            break;
        }
        total = total.saturating_add(binom.saturating_mul(pow));
        binom = binom.saturating_mul(p - j) / (j + 1);
        pow = pow.saturating_mul(4);
    }
    total
}

fn ceiling(spec: &EnumSpec) -> u128 {
    spec.ceiling
        .or_else(|| std::env::var(CEILING_ENV).ok().and_then(|s| s.trim().parse().ok()))
        .unwrap_or(DEFAULT_CEILING)
}

fn guard(spec: &EnumSpec) -> Result<Vec<EdgeId>, EnumError> {
    let estimate = search_estimate(&spec.graph, spec.max_crossings);
    let ceiling = ceiling(spec);
    if estimate > ceiling {
        return Err(EnumError::Infeasible { estimate, ceiling });
    }
    insertion_order(&spec.graph).ok_or(EnumError::Disconnected)
}

/// Smallest-id edge touching the drawn part, repeatedly.
fn insertion_order(g: &Graph) -> Option<Vec<EdgeId>> {
    let m = g.m();
    if m == 0 {
        return None;
    }
    let mut seen = vec![false; g.n];
    let mut used = vec![false; m];
    let mut order = vec![0];
    used[0] = true;
    seen[g.edges[0].0] = true;
    seen[g.edges[0].1] = true;
    while order.len() < m {
        let next = (0..m).find(|&e| !used[e] && (seen[g.edges[e].0] || seen[g.edges[e].1]))?;
        used[next] = true;
        seen[g.edges[next].0] = true;
        seen[g.edges[next].1] = true;
        order.push(next);
    }
    if seen.iter().any(|&s| !s) {
        return None;
    }
    Some(order)
}

struct Search<'a> {
    graph: &'a Graph,
    order: Vec<EdgeId>,
    max: usize,
    prune: Option<Verdict>,
}

/// A drawn prefix: edges are numbered in insertion order.
#[derive(Clone)]
struct Partial {
    emb: Embedding,
    crossings: usize,
}

impl Search<'_> {
    fn root(&self) -> Partial {
        let (a, b) = self.graph.edges[self.order[0]];
        let n = self.graph.n;
        let mut rotations = vec![Vec::new(); n];
        rotations[a].push(0);
        rotations[b].push(0);
        Partial {
            emb: Embedding {
                graph: Graph { n, edges: vec![(a, b)] },
                crossings: vec![Vec::new()],
                rotations,
                outer: OuterDart { edge: 0, segment: 0, dir: Dir::Fwd },
            },
            crossings: 0,
        }
    }

    /// Every way to draw the next edge into `st`.
    fn children(&self, st: &Partial) -> Vec<Partial> {
        let k = st.emb.m();
        let (a, b) = self.graph.edges[self.order[k]];
        let drawn = |v: usize| !st.emb.rotations[v].is_empty();
        let (s, t) = if drawn(a) { (a, b) } else { (b, a) };
        let t_drawn = drawn(t);
        let n = self.graph.n;
        let mut out = Vec::new();
        let deg = st.emb.rotations[s].len();
        for corner in 0..deg {
            let mut emb = st.emb.clone();
            emb.graph.n = n + 1;
            emb.graph.edges.push((s, n));
            emb.crossings.push(Vec::new());
            emb.rotations[s].insert(corner + 1, k);
            emb.rotations.push(vec![k]);
            self.walk(emb, st.crossings, s, t, t_drawn, &mut out);
        }
        out
    }

    fn walk(&self, emb: Embedding, used: usize, s: usize, t: usize, t_drawn: bool, out: &mut Vec<Partial>) {
        let n = self.graph.n;
        let k = emb.m() - 1;
        let p = Planarization::build(&emb);
        let pen_dart = p.dart_from_vertex(&emb, n, k);
        let face = p.left_face(pen_dart);
        if t_drawn {
            for &d in p.face_darts(face) {
                if p.origin[d] == t {
                    let (h, _, _) = p.dart_edge(d);
                    let mut done = emb.clone();
                    let i = done.rotations[t].iter().position(|&x| x == h).expect("edge at t");
                    done.rotations[t].insert(i + 1, k);
                    out.push(self.close(done, used, s, t));
                }
            }
        } else {
            let mut done = emb.clone();
            done.rotations[t] = vec![k];
            out.push(self.close(done, used, s, t));
        }
        if used >= self.max {
            return;
        }
        for &d in p.face_darts(face) {
            let (h, seg, dir) = p.dart_edge(d);
            if h == k || emb.crosses(k, h) {
                continue;
            }
            let (x, y) = emb.graph.edges[h];
            if x == s || y == s || x == t || y == t {
                continue;
            }
            let mut next = emb.clone();
            // Crossing from the left of the dart to its right.
            let sign = if dir == Dir::Fwd { Sign::LR } else { Sign::RL };
            next.crossings[h].insert(seg, Crossing { other: k, sign });
            next.crossings[k].push(Crossing { other: h, sign: sign.flip() });
            self.walk(next, used + 1, s, t, t_drawn, out);
        }
    }

    /// Replace the pen by `t`, restore orientation and drop the pen vertex.
    fn close(&self, mut emb: Embedding, used: usize, s: usize, t: usize) -> Partial {
        let n = self.graph.n;
        let k = emb.m() - 1;
        emb.rotations.truncate(n);
        emb.graph.n = n;
        if s > t {
            emb.graph.edges[k] = (t, s);
            emb.crossings[k].reverse();
            for c in emb.crossings[k].iter_mut() {
                c.sign = c.sign.flip();
            }
            for h in 0..k {
                for c in emb.crossings[h].iter_mut() {
                    if c.other == k {
                        c.sign = c.sign.flip();
                    }
                }
            }
        } else {
            emb.graph.edges[k] = (s, t);
        }
        Partial { emb, crossings: used }
    }

    fn keep(&self, st: &Partial) -> bool {
        match self.prune {
            Some(v) if v.monotone() => v.holds_partial(&st.emb),
            _ => true,
        }
    }

    /// Map a complete prefix back to the graph's edge ids.
    fn finish(&self, st: &Partial) -> Embedding {
        let m = self.graph.m();
        let mut new_id = vec![0; m];
        for (i, &e) in self.order.iter().enumerate() {
            new_id[i] = e;
        }
        let perm: Vec<usize> = (0..self.graph.n).collect();
        let mut e = st.emb.reindex(&perm, &new_id);
        e.outer = OuterDart { edge: 0, segment: 0, dir: Dir::Fwd };
        e
    }

    fn expand(&self, st: Partial, depth: usize) -> Vec<Embedding> {
        if st.emb.m() == self.graph.m() {
            return vec![self.finish(&st)];
        }
        let kids: Vec<Partial> = self.children(&st).into_iter().filter(|c| self.keep(c)).collect();
        self.expand_all(kids, depth + 1)
    }

    #[cfg(feature = "parallel")]
    fn expand_all(&self, kids: Vec<Partial>, depth: usize) -> Vec<Embedding> {
        use rayon::prelude::*;
        if depth <= 3 {
            kids.into_par_iter().map(|c| self.expand(c, depth)).flatten().collect()
        } else {
            kids.into_iter().flat_map(|c| self.expand(c, depth)).collect()
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn expand_all(&self, kids: Vec<Partial>, depth: usize) -> Vec<Embedding> {
        kids.into_iter().flat_map(|c| self.expand(c, depth)).collect()
    }

    fn expand_seq(&self, st: Partial) -> Vec<Embedding> {
        if st.emb.m() == self.graph.m() {
            return vec![self.finish(&st)];
        }
        self.children(&st)
            .into_iter()
            .filter(|c| self.keep(c))
            .flat_map(|c| self.expand_seq(c))
            .collect()
    }
}

fn post(spec: &EnumSpec, raw: Vec<Embedding>, parallel: bool) -> Vec<Embedding> {
    let filtered: Vec<Embedding> = match spec.filter {
        Some(v) => raw.into_iter().filter(|e| v.holds(e)).collect(),
        None => raw,
    };
    match spec.dedupe {
        Dedupe::None => filtered,
        Dedupe::Isomorphism => {
            let codes = codes_of(&filtered, parallel);
            let mut seen = HashSet::new();
            filtered
                .into_iter()
                .zip(codes)
                .filter_map(|(e, c)| seen.insert(c).then_some(e))
                .collect()
        }
    }
}

#[cfg(feature = "parallel")]
fn codes_of(list: &[Embedding], parallel: bool) -> Vec<crate::embedding::CanonicalCode> {
    use rayon::prelude::*;
    if parallel {
        list.par_iter().map(canonical_code).collect()
    } else {
        list.iter().map(canonical_code).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn codes_of(list: &[Embedding], _parallel: bool) -> Vec<crate::embedding::CanonicalCode> {
    list.iter().map(canonical_code).collect()
}

/// All embeddings of `spec.graph` with at most `spec.max_crossings`
/// crossings, in a deterministic order. Uses the parallel search when the
/// `parallel` feature is enabled.
pub fn enumerate_embeddings(spec: &EnumSpec) -> Result<Vec<Embedding>, EnumError> {
    let order = guard(spec)?;
    let search = Search { graph: &spec.graph, order, max: spec.max_crossings, prune: spec.filter };
    let raw = search.expand(search.root(), 0);
    Ok(post(spec, raw, cfg!(feature = "parallel")))
}

/// Single-threaded search; emits the same sequence as `enumerate_embeddings`.
pub fn enumerate_sequential(spec: &EnumSpec) -> Result<Vec<Embedding>, EnumError> {
    let order = guard(spec)?;
    let search = Search { graph: &spec.graph, order, max: spec.max_crossings, prune: spec.filter };
    let raw = search.expand_seq(search.root());
    Ok(post(spec, raw, false))
}

/// First embedding (in emission order) satisfying `pred`.
pub fn find_embedding(spec: &EnumSpec, pred: impl Fn(&Embedding) -> bool) -> Result<Option<Embedding>, EnumError> {
    Ok(enumerate_embeddings(spec)?.into_iter().find(|e| pred(e)))
}

/// Verdict names accepted by `enumerate --filter`.
pub fn parse_filter(name: &str) -> Option<Verdict> {
    classify::Verdict::from_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_one_plane_embedding() {
        let spec = EnumSpec::new(Graph::complete(3), 0).deduped();
        let all = enumerate_embeddings(&spec).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_valid());
    }

    #[test]
    fn k4_one_crossing_budget() {
        let all = enumerate_embeddings(&EnumSpec::new(Graph::complete(4), 1).deduped()).unwrap();
        assert!(all.iter().any(|e| e.crossing_count() == 0));
        assert!(all.iter().any(|e| e.crossing_count() == 1));
        assert!(all.iter().all(|e| e.is_valid()));
    }

    #[test]
    fn sequential_matches_parallel() {
        let spec = EnumSpec::new(Graph::wheel(4), 2);
        let a = enumerate_embeddings(&spec).unwrap();
        let b = enumerate_sequential(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn labelled_embeddings_are_distinct() {
        let all = enumerate_embeddings(&EnumSpec::new(Graph::complete(4), 1)).unwrap();
        let set: HashSet<_> = all.iter().map(|e| (e.crossings.clone(), e.rotations.clone())).collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn estimate_matches_formula() {
        // K5 has 15 disjoint edge pairs.
        let expected: u128 = [1u128, 60, 1680, 29120, 349440, 3075072].iter().sum();
        assert_eq!(search_estimate(&Graph::complete(5), 5), expected);
    }

    #[test]
    fn guard_rejects_large_specs() {
        let mut spec = EnumSpec::new(Graph::complete(6), 8);
        spec.ceiling = Some(1000);
        assert!(matches!(enumerate_embeddings(&spec), Err(EnumError::Infeasible { .. })));
    }

    #[test]
    fn triangle_cannot_cross() {
        let spec = EnumSpec::new(Graph::complete(3), 0);
        assert!(find_embedding(&spec, |e| e.crossing_count() > 0).unwrap().is_none());
    }
}
