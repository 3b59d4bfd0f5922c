use super::splice::{build_graph_m, m, m_skeleton, splice_fat_edge, SpliceError};
use super::*;
use crate::classify::*;
use crate::embedding::{canonical_code, map_isomorphic, Drawing};
use crate::reroute::augment_apex;
use crate::Graph;

#[test]
fn every_entry_validates() {
    for x in entries() {
        let e = (x.build)();
        assert!(e.is_valid(), "{}", x.name);
        assert!(density(&e).within, "{}", x.name);
    }
    assert!(entry("k5-c").is_some());
    assert!(entry("k5-f").is_none());
}

#[test]
fn k5_verdicts() {
    let k5 = k5_embeddings();
    assert_eq!(k5.len(), 5);
    for e in &k5 {
        assert_eq!(e.graph, Graph::complete(5));
        assert!(is_adjacency_crossing(e));
    }
    assert!(is_one_planar(&k5[0]) && is_fan_crossing_free(&k5[0]));
    for e in &k5[1..] {
        assert!(!is_one_planar(e) && !is_fan_crossing_free(e));
    }
    for e in &k5[1..4] {
        assert!(is_fan_planar(e));
        assert!(triangle_crossing_edges(e).is_empty());
    }
    let tri = triangle_crossings_direct(&k5[4]);
    assert_eq!(tri.len(), 1);
    assert_eq!(tri[0].crossing_edges.len(), 1);
    assert!(!is_fan_crossing(&k5[4]));
}

#[test]
fn k5_pairwise_distinct() {
    let codes: Vec<_> = k5_embeddings().iter().map(canonical_code).collect();
    for i in 0..5 {
        for j in i + 1..5 {
            assert_ne!(codes[i], codes[j]);
        }
    }
}

#[test]
fn k7_extend_k5() {
    let k5 = k5_embeddings();
    for (i, e) in k7_embeddings().iter().enumerate() {
        assert_eq!(e.graph, Graph::complete(7));
        assert!(is_fan_crossing(e));
        assert!(density(e).within && density(e).bound == 25);
        assert!(map_isomorphic(&e.induced(&[0, 1, 2, 3, 4]), &k5[i]));
        assert!(fat_edge_connectivity(e));
    }
    assert!(map_isomorphic(&k7_gadget(), &k7_embeddings()[0]));
}

#[test]
fn connectivity_small_cases() {
    let mut tri = Drawing::new(vec![(0.0, 0.0), (1.0, -0.5), (1.0, 0.5)]);
    tri.line(0, 1).line(1, 2).line(0, 2);
    assert!(!fat_edge_connectivity(&tri.to_embedding().unwrap()));
    // Square with crossing diagonals: the diagonals reach all four corners.
    let mut k4 = Drawing::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.1, 1.0)]);
    k4.line(0, 1).line(1, 2).line(2, 3).line(0, 3).line(0, 2).line(1, 3);
    let k4 = k4.to_embedding().unwrap();
    assert_eq!(k4.crossing_count(), 1);
    assert!(fat_edge_connectivity(&k4));
}

#[test]
fn m_document_matches_construction() {
    assert_eq!(build_graph_m(&k7_gadget(), GADGET_ENDS).unwrap(), graph_m());
}

#[test]
fn skeleton_fat_edges_uncrossed() {
    let sk = m_skeleton();
    for (i, &(a, b)) in m::FAT.iter().enumerate() {
        assert_eq!(sk.graph.edges[i], (a.min(b), a.max(b)));
        assert!(sk.crossings[i].is_empty());
    }
    let tx = sk.graph.find_edge(m::T, m::X).unwrap();
    assert_eq!(splice_fat_edge(&sk, tx, &k7_gadget(), GADGET_ENDS), Err(SpliceError::Crossed(tx)));
}

#[test]
fn m_gadgets_are_fat() {
    let e = graph_m();
    let gadget = k7_gadget();
    for (k, &(a, b)) in m::FAT.iter().enumerate() {
        let mut keep = vec![a.min(b), a.max(b)];
        keep.extend(15 + 5 * k..20 + 5 * k);
        let sub = e.induced(&keep);
        let mut edges = sub.graph.edges.clone();
        edges.sort_unstable();
        assert_eq!(edges, Graph::complete(7).edges);
        assert!(map_isomorphic(&sub, &gadget));
        assert!(fat_edge_connectivity(&sub));
    }
}

#[test]
fn m_has_configuration_ii() {
    let e = graph_m();
    assert!(e.is_valid());
    assert!(is_fan_crossing(&e));
    assert!(!is_fan_planar(&e));
    let base = e.graph.find_edge(m::U, m::V).unwrap();
    let tx = e.graph.find_edge(m::T, m::X).unwrap();
    let ty = e.graph.find_edge(m::T, m::Y).unwrap();
    let inst = config_ii_instances(&e).unwrap();
    let c = inst.iter().find(|c| c.base == base).expect("instance on {u,v}");
    assert_eq!(c.apex, m::T);
    let mut want = vec![tx, ty];
    want.sort_unstable();
    assert_eq!(c.crossers(), want);
    assert_ne!(sign_from(&e, base, tx, m::T), sign_from(&e, base, ty, m::T));
    let wv = e.graph.find_edge(m::W, m::V).unwrap();
    let zv = e.graph.find_edge(m::Z, m::V).unwrap();
    assert!(e.crosses(ty, wv) && e.crosses(ty, zv));
    for (u, w) in [(m::U, m::A), (m::U, m::B), (m::U, m::V), (m::U, m::W)] {
        assert!(e.crosses(tx, e.graph.find_edge(u, w).unwrap()));
    }
    let (aug, step) = augment_apex(&e, c).unwrap();
    assert_eq!(aug, e);
    assert!(step.surgeries.is_empty());
}
