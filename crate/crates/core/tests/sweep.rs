use std::collections::BTreeSet;

use fancross::catalog;
use fancross::classify::*;
use fancross::embedding::{canonical_code, map_isomorphic};
use fancross::enumerate::{enumerate_embeddings, enumerate_sequential, parse_filter, EnumSpec};
use fancross::Graph;

#[test]
fn k5_classes_are_the_catalog() {
    let all = enumerate_embeddings(&EnumSpec::new(Graph::complete(5), 5).deduped()).unwrap();
    let catalog = catalog::k5_embeddings();
    for (i, c) in catalog.iter().enumerate() {
        assert_eq!(all.iter().filter(|e| map_isomorphic(e, c)).count(), 1, "entry {i}");
    }
    assert!(all.iter().all(|e| catalog.iter().any(|c| map_isomorphic(e, c))));
}

#[test]
fn parallel_matches_sequential() {
    for (g, k) in [(Graph::complete(4), 4), (Graph::wheel(4), 3), (Graph::prism(), 3)] {
        for spec in [EnumSpec::new(g.clone(), k), EnumSpec::new(g.clone(), k).deduped()] {
            assert_eq!(enumerate_embeddings(&spec).unwrap(), enumerate_sequential(&spec).unwrap());
        }
    }
}

#[test]
fn dedupe_keeps_one_per_class() {
    let spec = EnumSpec::new(Graph::wheel(4), 3);
    let all = enumerate_embeddings(&spec).unwrap();
    let classes: BTreeSet<_> = all.iter().map(canonical_code).collect();
    let kept = enumerate_embeddings(&spec.deduped()).unwrap();
    assert_eq!(kept.len(), classes.len());
    assert!(all.iter().all(|e| e.is_valid() && e.crossing_count() <= 3));
}

#[test]
fn filter_matches_verdicts() {
    let g = Graph::complete(5);
    let all = enumerate_embeddings(&EnumSpec::new(g.clone(), 4)).unwrap();
    for name in ["fan-crossing", "fan-planar", "adjacency-crossing", "1-planar"] {
        let v = parse_filter(name).unwrap();
        let got = enumerate_embeddings(&EnumSpec::new(g.clone(), 4).filtered(v)).unwrap();
        let want: Vec<_> = all.iter().filter(|e| v.holds(e)).cloned().collect();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn fan_crossing_sweeps_respect_density() {
    for (g, k) in [(Graph::complete(5), 5), (Graph::prism(), 4)] {
        for e in enumerate_embeddings(&EnumSpec::new(g, k).deduped()).unwrap() {
            if is_fan_crossing(&e) {
                assert!(density(&e).within);
            }
        }
    }
}
