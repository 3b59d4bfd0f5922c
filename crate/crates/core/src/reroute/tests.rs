use super::*;
use crate::catalog::{self, m};
use crate::classify::*;
use crate::embedding::{map_isomorphic, Drawing, Graph};
use crate::enumerate::{enumerate_embeddings, EnumSpec};

fn k5(i: usize) -> Embedding {
    catalog::k5_embeddings().swap_remove(i)
}

fn sweep(g: Graph, k: usize) -> Vec<Embedding> {
    enumerate_embeddings(&EnumSpec::new(g, k).deduped()).unwrap()
}

fn small_sweeps() -> Vec<Embedding> {
    [Graph::complete(4), Graph::wheel(4), Graph::complete(5)].into_iter().flat_map(|g| sweep(g, 4)).collect()
}

#[test]
fn normalize_keeps_standard_context() {
    let e = k5(4);
    let raw = triangle_crossings_direct(&e).remove(0);
    assert_eq!(raw.direction, Direction::Cw);
    let (ne, n) = normalize_triangle(&e, &raw);
    assert_eq!(ne, e);
    assert_eq!(n, raw);
    assert!(n.normalized);
}

#[test]
fn normalize_mirrored_context() {
    let e = k5(4).mirror();
    let raw = triangle_crossings_direct(&e).remove(0);
    assert_eq!(raw.direction, Direction::Ccw);
    let (ne, n) = normalize_triangle(&e, &raw);
    assert_eq!(ne, e);
    assert!(n.normalized);
    assert_eq!(n.direction, Direction::Cw);
    assert_eq!((n.a, n.b, n.c), (raw.c, raw.b, raw.a));
    assert_eq!(n.crossing_edges, raw.crossing_edges);
    let again = normalize_triangle(&ne, &n).1;
    assert_eq!(again, n);
}

#[test]
fn side_and_base_lemmas_need_normalized_context() {
    let e = k5(4).mirror();
    let raw = triangle_crossings_direct(&e).remove(0);
    assert!(matches!(eliminate_with_side_edge(&e, &raw), Err(RerouteError::Precondition(_))));
    assert!(matches!(reroute_base(&e, &raw), Err(RerouteError::Precondition(_))));
    assert!(matches!(preroute_covered_needles(&e, &raw), Err(RerouteError::Precondition(_))));
}

#[test]
fn bidirectional_needs_both_directions() {
    let e = k5(4);
    let ctx = triangle_crossings_direct(&e).remove(0);
    assert!(matches!(eliminate_bidirectional(&e, &ctx), Err(RerouteError::Precondition(_))));
}

#[test]
fn k5_e_becomes_k5_c() {
    let e = k5(4);
    let (out, trace) = make_fan_crossing(&e).unwrap();
    assert!(out.is_valid());
    assert_eq!(out.graph, e.graph);
    assert!(is_fan_crossing(&out));
    assert!(map_isomorphic(&out, &k5(2)));
    for i in [0, 1, 3, 4] {
        assert!(!map_isomorphic(&out, &k5(i)));
    }
    assert!(trace.surgery_count() > 0);
    assert_eq!(trace.replay(&e).unwrap(), out);
    let (mirrored, _) = make_fan_crossing(&e.mirror()).unwrap();
    assert!(map_isomorphic(&mirrored, &k5(2)));
}

#[test]
fn fan_crossing_input_is_kept() {
    for e in catalog::k5_embeddings().into_iter().take(4).chain(catalog::k7_embeddings()) {
        let (out, trace) = make_fan_crossing(&e).unwrap();
        assert_eq!(out, e);
        assert!(trace.steps.is_empty());
    }
}

#[test]
fn make_fan_crossing_is_idempotent() {
    let (once, _) = make_fan_crossing(&k5(4)).unwrap();
    let (twice, trace) = make_fan_crossing(&once).unwrap();
    assert_eq!(twice, once);
    assert!(trace.steps.is_empty());
}

#[test]
fn independent_crossing_is_refused() {
    let mut d = Drawing::new(vec![(0.0, 0.0), (10.0, 0.0), (3.0, 2.0), (3.0, -2.0), (6.0, 2.0), (6.0, -2.0)]);
    d.line(0, 1).line(2, 3).line(4, 5);
    let e = d.to_embedding().unwrap();
    assert_eq!(make_fan_crossing(&e), Err(RerouteError::NotAdjacencyCrossing));
    assert_eq!(fan_planarize(&e), Err(RerouteError::NotFanCrossing));
}

#[test]
fn sweep_outputs_are_fan_crossing_and_replayable() {
    let mut fixed = 0;
    for e in small_sweeps() {
        if !is_adjacency_crossing(&e) {
            continue;
        }
        let (out, trace) = make_fan_crossing(&e).unwrap();
        assert!(out.is_valid());
        assert_eq!(out.graph, e.graph);
        assert!(is_fan_crossing(&out));
        assert_eq!(trace.replay(&e).unwrap(), out);
        for s in &trace.steps {
            if s.lemma == Lemma::Normalize {
                assert!(s.surgeries.is_empty() && s.relabel.is_some());
            }
        }
        fixed += usize::from(!trace.steps.is_empty());
    }
    assert!(fixed > 0);
}

#[test]
fn fan_planar_input_is_kept() {
    for e in catalog::k5_embeddings().into_iter().take(4).chain(catalog::k7_embeddings()) {
        assert!(is_fan_planar(&e));
        let (out, trace) = fan_planarize(&e).unwrap();
        assert_eq!(out, e);
        assert!(trace.steps.is_empty());
    }
}

#[test]
fn graph_m_is_fan_planarized() {
    let e = catalog::graph_m();
    let base = e.graph.find_edge(m::U, m::V).unwrap();
    let (out, trace) = fan_planarize(&e).unwrap();
    assert!(out.is_valid());
    assert!(is_fan_planar(&out));
    assert_eq!((out.n(), out.m()), (e.n(), e.m()));
    assert_eq!(trace.replay(&e).unwrap(), out);
    assert!(trace.steps.iter().any(|s| s.lemma == Lemma::BaseReplacement));
    let (a, b) = out.graph.edges[base];
    assert_ne!((a, b), (m::U.min(m::V), m::U.max(m::V)));
    assert!(out.crossings[base].is_empty());
    let (again, t2) = fan_planarize(&out).unwrap();
    assert_eq!(again, out);
    assert!(t2.steps.is_empty());
}

#[test]
fn configuration_ii_lemmas_on_sweeps() {
    // Base {0,1} with three edges from the apex 2.
    let fan = Graph::new(6, [(0, 1), (2, 3), (2, 4), (2, 5), (0, 3), (1, 4), (1, 5), (0, 2)]).unwrap();
    let mut runs = [0; 2];
    for e in small_sweeps().into_iter().chain(sweep(fan, 4)) {
        if !is_fan_crossing(&e) {
            continue;
        }
        for inst in config_ii_instances(&e).unwrap() {
            let present = e.graph.find_edge(inst.apex, inst.u).is_some() && e.graph.find_edge(inst.apex, inst.v).is_some();
            match augment_apex(&e, &inst) {
                Ok((aug, step)) => {
                    assert!(aug.is_valid());
                    assert!(is_fan_crossing(&aug));
                    assert!(aug.graph.find_edge(inst.apex, inst.u).is_some());
                    assert!(aug.graph.find_edge(inst.apex, inst.v).is_some());
                    if present {
                        assert_eq!(aug, e);
                        assert!(step.surgeries.is_empty());
                    }
                }
                Err(err) => assert!(!present && matches!(err, RerouteError::Precondition(_)), "{err}"),
            }
            for (i, lemma) in [reroute_left_curves, reroute_via_semicovered].into_iter().enumerate() {
                match lemma(&e, &inst) {
                    Ok((out, _)) => {
                        assert!(out.is_valid());
                        assert_eq!(out.graph, e.graph);
                        assert!(is_fan_crossing(&out));
                        assert!(out.crossings[inst.base].len() < e.crossings[inst.base].len());
                        runs[i] += 1;
                    }
                    Err(err) => assert!(matches!(err, RerouteError::Precondition(_)), "{err}"),
                }
            }
        }
        let (out, trace) = fan_planarize(&e).unwrap();
        assert!(out.is_valid() && is_fan_planar(&out));
        assert_eq!((out.n(), out.m()), (e.n(), e.m()));
        assert_eq!(trace.replay(&e).unwrap(), out);
    }
    assert!(runs[0] > 0 && runs[1] > 0, "{runs:?}");
}

#[test]
fn semicovered_precondition_on_graph_m() {
    let e = catalog::graph_m();
    let inst = config_ii_instances(&e).unwrap().remove(0);
    if inst.semi_covered.is_empty() {
        assert!(matches!(reroute_via_semicovered(&e, &inst), Err(RerouteError::Precondition(_))));
    }
}

#[test]
fn trace_serializes() {
    let (_, trace) = make_fan_crossing(&k5(4)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&trace.to_json()).unwrap();
    assert_eq!(v["steps"].as_array().unwrap().len(), trace.steps.len());
}
