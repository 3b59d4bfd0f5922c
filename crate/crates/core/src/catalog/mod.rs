//! Named embeddings and the fat-edge connectivity check.

pub mod search;
pub mod splice;

use crate::embedding::{from_json, Embedding, Planarization};

pub use splice::m;

const K5: [&str; 5] = [
    include_str!("data/k5-a.json"),
    include_str!("data/k5-b.json"),
    include_str!("data/k5-c.json"),
    include_str!("data/k5-d.json"),
    include_str!("data/k5-e.json"),
];

const K7: [&str; 3] = [
    include_str!("data/k7-a.json"),
    include_str!("data/k7-b.json"),
    include_str!("data/k7-c.json"),
];

const GADGET: &str = include_str!("data/k7-gadget.json");
const GRAPH_M: &str = include_str!("data/graph-m.json");

/// The vertices of the gadget that become the ends of a fat edge.
pub const GADGET_ENDS: (crate::Vertex, crate::Vertex) = (5, 6);

fn load(doc: &str) -> Embedding {
    from_json(doc).expect("catalog documents parse")
}

/// The five embeddings of K5, labelled a to e.
pub fn k5_embeddings() -> Vec<Embedding> {
    K5.iter().map(|d| load(d)).collect()
}

/// Fan-crossing embeddings of K7 extending K5 (a), (b) and (c) by two
/// vertices 5 and 6 in the outer face.
pub fn k7_embeddings() -> Vec<Embedding> {
    K7.iter().map(|d| load(d)).collect()
}

/// The K7 embedding used for fat edges; its ends are [`GADGET_ENDS`] and it
/// faces the rest of the graph through its outer face.
pub fn k7_gadget() -> Embedding {
    load(GADGET)
}

/// Graph M. Vertices `0..15` are named in [`m::NAMES`], edges `0..24` are
/// the fat edges in the order of [`m::FAT`] and edges `24..33` the ordinary
/// edges in the order of [`m::ORDINARY`].
pub fn graph_m() -> Embedding {
    load(GRAPH_M)
}

/// A named catalog entry.
pub struct Entry {
    pub name: &'static str,
    pub about: &'static str,
    pub build: fn() -> Embedding,
}

pub fn entries() -> Vec<Entry> {
    fn k5(i: usize) -> Embedding {
        k5_embeddings().swap_remove(i)
    }
    fn k7(i: usize) -> Embedding {
        k7_embeddings().swap_remove(i)
    }
    vec![
        Entry { name: "k5-a", about: "K5, 1-planar and fan-crossing free", build: || k5(0) },
        Entry { name: "k5-b", about: "K5, fan-planar, five crossings", build: || k5(1) },
        Entry { name: "k5-c", about: "K5, fan-planar, three crossings", build: || k5(2) },
        Entry { name: "k5-d", about: "K5, fan-planar, three crossings, not extendable to K7", build: || k5(3) },
        Entry { name: "k5-e", about: "K5, adjacency-crossing with a triangle-crossing", build: || k5(4) },
        Entry { name: "k7-a", about: "K7 from k5-a plus two outer vertices", build: || k7(0) },
        Entry { name: "k7-b", about: "K7 from k5-b plus two outer vertices", build: || k7(1) },
        Entry { name: "k7-c", about: "K7 from k5-c plus two outer vertices", build: || k7(2) },
        Entry { name: "k7-gadget", about: "fat edge: k7-a with ends 5 and 6 on the outer face", build: k7_gadget },
        Entry { name: "graph-m", about: "fan-crossing graph with an unavoidable configuration II", build: graph_m },
    ]
}

pub fn entry(name: &str) -> Option<Embedding> {
    entries().into_iter().find(|x| x.name == name).map(|x| (x.build)())
}

/// True iff every two vertices are joined by a path of segments of crossed
/// edges in the planarization.
pub fn fat_edge_connectivity(e: &Embedding) -> bool {
    let p = Planarization::build(e);
    let mut parent: Vec<usize> = (0..p.node_count()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in 0..p.segment_count() {
        if e.crossings[p.seg_edge[s]].is_empty() {
            continue;
        }
        let (a, b) = (root(&mut parent, p.origin[2 * s]), root(&mut parent, p.origin[2 * s + 1]));
        parent[a] = b;
    }
    let r = (e.n() > 0).then(|| root(&mut parent, 0));
    (0..e.n()).all(|v| Some(root(&mut parent, v)) == r)
}

#[cfg(test)]
mod tests;
