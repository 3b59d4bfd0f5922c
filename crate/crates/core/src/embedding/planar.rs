use super::{Dir, EdgeId, Embedding, Sign, Vertex};

pub type Dart = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Real(Vertex),
    /// Crossing of two edges, stored with the smaller edge id first.
    Cross(EdgeId, EdgeId),
}

/// Planar map with every crossing promoted to a degree-4 node.
///
/// Nodes `0..n` are the real vertices, crossing nodes follow. Segment `s`
/// owns darts `2s` (forward, tail to head) and `2s + 1` (reverse).
#[derive(Debug, Clone)]
pub struct Planarization {
    pub n: usize,
    pub nodes: Vec<NodeKind>,
    /// Per edge, the first global segment id; edge `e` owns
    /// `seg_start[e] .. seg_start[e] + crossings[e].len() + 1`.
    pub seg_start: Vec<usize>,
    pub seg_edge: Vec<EdgeId>,
    pub seg_index: Vec<usize>,
    pub origin: Vec<usize>,
    pub rot_next: Vec<Dart>,
    pub rot_prev: Vec<Dart>,
    /// Darts leaving each node in counterclockwise order.
    pub node_darts: Vec<Vec<Dart>>,
    pub face: Vec<usize>,
    pub faces: Vec<Vec<Dart>>,
    pub outer_face: usize,
}

impl Planarization {
    /// Builds the map without validating; callers guarantee consistency
    /// of indices. Face data is meaningful only for valid embeddings.
    pub fn build(e: &Embedding) -> Planarization {
        let n = e.n();
        let m = e.m();
        let mut nodes: Vec<NodeKind> = (0..n).map(NodeKind::Real).collect();
        // Node id of the i-th crossing point on each edge.
        let mut cross_node: Vec<Vec<usize>> = e.crossings.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        for a in 0..m {
            for i in 0..e.crossings[a].len() {
                let b = e.crossings[a][i].other;
                if a < b && b < m {
                    if let Some(j) = e.crossing_index(b, a) {
                        let id = nodes.len();
                        nodes.push(NodeKind::Cross(a, b));
                        cross_node[a][i] = id;
                        cross_node[b][j] = id;
                    }
                }
            }
        }
        let mut seg_start = Vec::with_capacity(m);
        let mut seg_edge = Vec::new();
        let mut seg_index = Vec::new();
        for ed in 0..m {
            seg_start.push(seg_edge.len());
            for s in 0..=e.crossings[ed].len() {
                seg_edge.push(ed);
                seg_index.push(s);
            }
        }
        let segs = seg_edge.len();
        let mut origin = vec![0; 2 * segs];
        for ed in 0..m {
            let (t, h) = e.graph.edges[ed];
            let k = e.crossings[ed].len();
            let point = |i: usize| -> usize {
                if i == 0 {
                    t
                } else if i == k + 1 {
                    h
                } else {
                    cross_node[ed][i - 1]
                }
            };
            for s in 0..=k {
                let g = seg_start[ed] + s;
                origin[2 * g] = point(s);
                origin[2 * g + 1] = point(s + 1);
            }
        }
        let mut node_darts: Vec<Vec<Dart>> = vec![Vec::new(); nodes.len()];
        for v in 0..n {
            for &ed in &e.rotations[v] {
                if ed >= m {
                    continue;
                }
                let (t, _) = e.graph.edges[ed];
                let k = e.crossings[ed].len();
                let d = if t == v { 2 * seg_start[ed] } else { 2 * (seg_start[ed] + k) + 1 };
                node_darts[v].push(d);
            }
        }
        for a in 0..m {
            for (i, c) in e.crossings[a].iter().enumerate() {
                let b = c.other;
                if a > b || b >= m {
                    continue;
                }
                let Some(j) = e.crossing_index(b, a) else { continue };
                let x = cross_node[a][i];
                let a_head = 2 * (seg_start[a] + i + 1);
                let a_tail = 2 * (seg_start[a] + i) + 1;
                let b_head = 2 * (seg_start[b] + j + 1);
                let b_tail = 2 * (seg_start[b] + j) + 1;
                node_darts[x] = match c.sign {
                    Sign::LR => vec![a_head, b_tail, a_tail, b_head],
                    Sign::RL => vec![a_head, b_head, a_tail, b_tail],
                };
            }
        }
        let mut rot_next = vec![usize::MAX; 2 * segs];
        let mut rot_prev = vec![usize::MAX; 2 * segs];
        for darts in &node_darts {
            let k = darts.len();
            for i in 0..k {
                rot_next[darts[i]] = darts[(i + 1) % k];
                rot_prev[darts[(i + 1) % k]] = darts[i];
            }
        }
        let mut face = vec![usize::MAX; 2 * segs];
        let mut faces = Vec::new();
        for d0 in 0..2 * segs {
            if face[d0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = d0;
            loop {
                if face[d] != usize::MAX {
                    break;
                }
                face[d] = id;
                cycle.push(d);
                let p = rot_prev[d ^ 1];
                if p == usize::MAX {
                    break;
                }
                d = p;
            }
            faces.push(cycle);
        }
        let mut p = Planarization {
            n,
            nodes,
            seg_start,
            seg_edge,
            seg_index,
            origin,
            rot_next,
            rot_prev,
            node_darts,
            face,
            faces,
            outer_face: 0,
        };
        if e.outer.edge < m && e.outer.segment <= e.crossings[e.outer.edge].len() {
            let d = p.dart_of(e.outer.edge, e.outer.segment, e.outer.dir);
            p.outer_face = p.face[d];
        }
        p
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn segment_count(&self) -> usize {
        self.seg_edge.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn crossing_nodes(&self) -> usize {
        self.nodes.len() - self.n
    }

    pub fn dart_of(&self, edge: EdgeId, segment: usize, dir: Dir) -> Dart {
        let g = self.seg_start[edge] + segment;
        match dir {
            Dir::Fwd => 2 * g,
            Dir::Rev => 2 * g + 1,
        }
    }

    pub fn dart_edge(&self, d: Dart) -> (EdgeId, usize, Dir) {
        let g = d / 2;
        let dir = if d.is_multiple_of(2) { Dir::Fwd } else { Dir::Rev };
        (self.seg_edge[g], self.seg_index[g], dir)
    }

    pub fn twin(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn target(&self, d: Dart) -> usize {
        self.origin[d ^ 1]
    }

    /// Next dart along the face to the left of `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_prev[d ^ 1]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face[d]
    }

    pub fn face_darts(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn left_face(&self, d: Dart) -> usize {
        self.face[d]
    }

    pub fn right_face(&self, d: Dart) -> usize {
        self.face[d ^ 1]
    }

    /// Dart leaving real vertex `v` along edge `e`.
    pub fn dart_from_vertex(&self, e: &Embedding, v: Vertex, edge: EdgeId) -> Dart {
        let (t, _) = e.graph.edges[edge];
        if t == v {
            2 * self.seg_start[edge]
        } else {
            2 * (self.seg_start[edge] + e.crossings[edge].len()) + 1
        }
    }

    /// Real vertices on the boundary of face `f`.
    pub fn face_vertices(&self, f: usize) -> Vec<Vertex> {
        self.faces[f]
            .iter()
            .filter_map(|&d| match self.nodes[self.origin[d]] {
                NodeKind::Real(v) => Some(v),
                NodeKind::Cross(..) => None,
            })
            .collect()
    }

    /// Faces incident to node `x` (one per wedge, in rotation order).
    pub fn node_faces(&self, x: usize) -> Vec<usize> {
        self.node_darts[x].iter().map(|&d| self.face[d]).collect()
    }

    /// Euler characteristic V - E + F of the traced map.
    pub fn euler(&self) -> isize {
        self.node_count() as isize - self.segment_count() as isize + self.face_count() as isize
    }

    /// Connected components of the map (isolated nodes included).
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.node_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for s in 0..self.segment_count() {
            let a = find(&mut parent, self.origin[2 * s]);
            let b = find(&mut parent, self.origin[2 * s + 1]);
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.node_count()).filter(|&x| find(&mut parent, x) == x).count()
    }
}
