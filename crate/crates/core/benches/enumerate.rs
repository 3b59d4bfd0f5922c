use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fancross::enumerate::{enumerate_embeddings, enumerate_sequential, EnumSpec};
use fancross::Graph;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, graph, k) in [("k4", Graph::complete(4), 4), ("w4", Graph::wheel(4), 4), ("k5", Graph::complete(5), 4)] {
        let spec = EnumSpec::new(graph, k).deduped();
        group.bench_with_input(BenchmarkId::new("parallel", name), &spec, |b, s| {
            b.iter(|| enumerate_embeddings(s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), &spec, |b, s| {
            b.iter(|| enumerate_sequential(s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
