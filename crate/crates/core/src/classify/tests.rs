use super::*;
use crate::catalog;
use crate::embedding::{Drawing, Graph};
use crate::enumerate::{enumerate_embeddings, find_embedding, EnumSpec};
use crate::reroute::normalize_triangle;

fn k5(i: usize) -> Embedding {
    catalog::k5_embeddings().swap_remove(i)
}

fn star_over_edge() -> Embedding {
    let mut d = Drawing::new(vec![(0.0, 0.0), (10.0, 0.0), (5.0, 5.0), (3.0, -5.0), (5.0, -5.0), (7.0, -5.0)]);
    d.line(0, 1).line(2, 3).line(2, 4).line(2, 5);
    d.to_embedding().unwrap()
}

fn sweep(g: Graph, k: usize) -> Vec<Embedding> {
    enumerate_embeddings(&EnumSpec::new(g, k)).unwrap()
}

#[test]
fn plane_triangle_is_everything() {
    let mut d = Drawing::new(vec![(0.0, 0.0), (2.0, 0.5), (1.0, 2.0)]);
    d.line(0, 1).line(1, 2).line(0, 2);
    let e = d.to_embedding().unwrap();
    let r = verdicts(&e);
    assert!(r.adjacency_crossing && r.fan_crossing && r.fan_planar && r.one_planar && r.fan_crossing_free);
    assert!(independent_crossings(&e).is_empty());
    assert!(triangle_crossings_via_cover(&e).unwrap().is_empty());
    assert!(fan_of(&e, 0, 1).is_empty());
}

#[test]
fn star_fan_in_crossing_order() {
    let e = star_over_edge();
    assert_eq!(fan_of(&e, 2, 0), vec![1, 2, 3]);
    assert_eq!(cover_of(&e, 2), vec![0]);
    assert!(is_fan_crossing(&e) && !is_fan_crossing_free(&e) && !is_one_planar(&e));
    // A fan from one side of the edge: no configuration II.
    assert!(config_ii_instances(&e).unwrap().is_empty());
    assert!(is_fan_planar(&e));
}

#[test]
fn single_crossings_cover_nothing() {
    let e = k5(0);
    for v in 0..e.n() {
        assert!(cover_of(&e, v).is_empty());
    }
}

#[test]
fn independent_witness() {
    // A single crossing is no witness; an edge crossed by two independent
    // edges is.
    let mut d = Drawing::new(vec![(0.0, 0.0), (10.0, 0.0), (3.0, 2.0), (3.0, -2.0), (6.0, 2.0), (6.0, -2.0)]);
    d.line(0, 1).line(2, 3);
    assert!(independent_crossings(&d.to_embedding().unwrap()).is_empty());
    d.line(4, 5);
    let e = d.to_embedding().unwrap();
    let w = independent_crossings(&e);
    assert_eq!(w, vec![IndependentCrossing { host: 0, first: 1, second: 2 }]);
    assert!(!is_adjacency_crossing(&e) && !is_fan_crossing(&e) && !is_fan_planar(&e));
    assert_eq!(triangle_crossings_via_cover(&e), Err(ClassifyError::NotAdjacencyCrossing));
}

#[test]
fn k5_catalog_contexts() {
    for i in 0..5 {
        assert!(independent_crossings(&k5(i)).is_empty());
    }
    for i in 0..4 {
        assert!(triangle_crossings_direct(&k5(i)).is_empty());
        assert!(triangle_crossings_via_cover(&k5(i)).unwrap().is_empty());
    }
    let e = k5(4);
    let ctx = triangle_crossings_direct(&e);
    assert_eq!(ctx.len(), 1);
    let [h] = ctx[0].crossing_edges[..] else { panic!("one crossing edge") };
    assert_eq!(triangle_crossings_via_cover(&e).unwrap(), vec![h]);
    for x in ctx[0].triangle() {
        assert!(cover_of(&e, x).contains(&h));
    }
    let a = ctx[0].a;
    let mut fan = fan_of(&e, a, h);
    fan.sort_unstable();
    let mut want = vec![ctx[0].ab, ctx[0].ac];
    want.sort_unstable();
    assert_eq!(fan, want);
    // Configuration II comes with the triangle-crossing.
    assert!(!config_ii_instances(&e).unwrap().is_empty());
}

#[test]
fn mirror_swaps_directions_and_keeps_verdicts() {
    let e = k5(4);
    let c = &triangle_crossings_direct(&e)[0];
    let m = &triangle_crossings_direct(&e.mirror())[0];
    assert_eq!(c.direction, Direction::Cw);
    assert_eq!(m.direction, Direction::Ccw);
    assert_eq!(c.clockwise, m.counterclockwise);
    assert_eq!(c.class_of(c.crossing_edges[0]), Some(CrosserClass::Cw));
    assert_eq!(m.class_of(m.crossing_edges[0]), Some(CrosserClass::Ccw));
    for x in catalog::entries() {
        let e = (x.build)();
        let (a, b) = (verdicts(&e), verdicts(&e.mirror()));
        assert_eq!(
            (a.adjacency_crossing, a.fan_crossing, a.fan_planar, a.fan_crossing_free, a.one_planar),
            (b.adjacency_crossing, b.fan_crossing, b.fan_planar, b.fan_crossing_free, b.one_planar),
            "{}",
            x.name
        );
    }
}

#[test]
fn classify_requires_normalized_context() {
    let e = k5(4).mirror();
    let raw = triangle_crossings_direct(&e).remove(0);
    assert!(!raw.normalized);
    assert_eq!(classify_crossers(&raw, &e, Viewpoint::Apex), Err(ClassifyError::NotNormalized));
    let (ne, n) = normalize_triangle(&e, &raw);
    let classes = classify_crossers(&n, &ne, Viewpoint::Apex).unwrap();
    assert_eq!(classes[&n.crossing_edges[0]], CrosserClass::Cw);
    assert!(classify_crossers(&n, &ne, Viewpoint::Inner).is_ok());
}

#[test]
fn lone_cw_edge_has_no_other_triangle_crossers() {
    let e = k5(4);
    let c = &triangle_crossings_direct(&e)[0];
    assert_eq!(c.members(|x| x.is_clockwise(), Viewpoint::Apex), c.crossing_edges);
    assert!(c.members(|x| x.is_counterclockwise(), Viewpoint::Apex).is_empty());
}

/// Sequences of triangle edges crossed from the apex.
fn row(class: CrosserClass) -> Option<Vec<Vec<TriangleEdge>>> {
    use TriangleEdge::*;
    let rot = |s: [TriangleEdge; 3]| (0..3).map(|r| (0..3).map(|i| s[(i + r) % 3]).collect()).collect();
    Some(match class {
        c if c.is_needle() => vec![vec![Ac]],
        CrosserClass::AHook => vec![vec![Ab]],
        CrosserClass::CHook => vec![vec![Bc]],
        CrosserClass::AArrow => vec![vec![Ac, Ab]],
        CrosserClass::CArrow => vec![vec![Ac, Bc]],
        CrosserClass::ASickle => vec![vec![Ab, Ac]],
        CrosserClass::CSickle => vec![vec![Bc, Ac]],
        c if c.is_clockwise() => rot([Ac, Bc, Ab]),
        c if c.is_counterclockwise() => rot([Ac, Ab, Bc]),
        _ => return None,
    })
}

#[test]
fn classes_match_table_rows() {
    let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (3, 0), (3, 1), (4, 5)]).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for e in sweep(g, 5) {
        if !is_adjacency_crossing(&e) {
            continue;
        }
        for raw in triangle_crossings_direct(&e) {
            let (ne, n) = normalize_triangle(&e, &raw);
            let Some(u) = n.apex else { continue };
            for (g, class) in classify_crossers(&n, &ne, Viewpoint::Apex).unwrap() {
                if !ne.graph.incident(g, u) {
                    continue;
                }
                let seq: Vec<TriangleEdge> = crossed_from(&ne, g, u)
                    .into_iter()
                    .filter_map(|h| {
                        [(n.ac, TriangleEdge::Ac), (n.bc, TriangleEdge::Bc), (n.ab, TriangleEdge::Ab)]
                            .iter()
                            .find(|x| x.0 == h)
                            .map(|x| x.1)
                    })
                    .collect();
                let rows = row(class).unwrap_or_else(|| panic!("class {class:?} outside the table"));
                assert!(rows.contains(&seq), "{class:?} read {seq:?}");
                seen.insert(class);
            }
        }
    }
    assert!(seen.iter().any(|c| c.is_clockwise()));
    assert!(seen.iter().any(|c| c.is_needle()));
}

#[test]
fn two_direction_instance() {
    // Apex 3 with two edges through the triangle 0,1,2, turning opposite ways.
    let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (3, 5), (0, 3)]).unwrap();
    let e = find_embedding(&EnumSpec::new(g, 6), |e| {
        triangle_crossings_direct(e).iter().any(|c| c.direction == Direction::Both)
    })
    .unwrap()
    .expect("an embedding with both directions");
    let c = triangle_crossings_direct(&e).into_iter().find(|c| c.direction == Direction::Both).unwrap();
    assert_eq!(c.apex, Some(3));
    assert!(!c.clockwise.is_empty() && !c.counterclockwise.is_empty());
    assert!(c.chosen.is_some());
}

#[test]
fn verdict_chain_and_characterizations() {
    for (g, k) in [(Graph::complete(4), 4), (Graph::wheel(4), 4), (Graph::complete(5), 4)] {
        for e in sweep(g, k) {
            let r = verdicts(&e);
            assert!(!r.fan_planar || r.fan_crossing);
            assert!(!r.fan_crossing || r.adjacency_crossing);
            assert_eq!(r.one_planar, (0..e.m()).all(|h| e.crossings[h].len() <= 1));
            if !r.adjacency_crossing {
                continue;
            }
            let direct = triangle_crossing_edges(&e);
            let via: std::collections::BTreeSet<EdgeId> = triangle_crossings_via_cover(&e).unwrap().into_iter().collect();
            assert_eq!(direct, via);
            assert_eq!(r.fan_crossing, direct.is_empty());
            for c in &r.config_ii {
                assert!(!c.straight.is_empty() && !c.curved.is_empty());
                for g in c.crossers() {
                    assert_eq!(e.crossings[c.base].iter().filter(|x| x.other == g).count(), 1);
                }
            }
        }
    }
}
