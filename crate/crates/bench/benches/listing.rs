use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trilist::analysis::default_k_ladder;
use trilist::sparse::default_threshold;
use trilist::{AdjacencyMatrix, Algorithm};
use trilist_bench::{dense_er, hub_graph, powerlaw_ladder};

fn sparse_listers(c: &mut Criterion) {
    let mut group = c.benchmark_group("powerlaw");
    group.sample_size(10);
    for (n, mut g) in powerlaw_ladder() {
        let k = default_threshold(g.m());
        for algo in [Algorithm::EdgeIterator, Algorithm::Forward, Algorithm::CompactForward, Algorithm::NewListing] {
            group.bench_with_input(BenchmarkId::new(algo.name(), n), &n, |b, _| {
                b.iter(|| algo.list_in_place(&mut g, None, k).unwrap().count())
            });
        }
    }
    group.finish();
}

fn matrix_methods(c: &mut Criterion) {
    let g = dense_er();
    let a = AdjacencyMatrix::new(&g).unwrap();
    let k = default_threshold(g.m());
    let mut group = c.benchmark_group("dense-er");
    group.sample_size(10);
    for algo in [
        Algorithm::VertexIterator,
        Algorithm::TreeListing,
        Algorithm::AyzListing,
        Algorithm::Matrix,
        Algorithm::AyzPseudoListing,
        Algorithm::CompactForward,
    ] {
        group.bench_function(algo.name(), |b| b.iter(|| algo.report(&g, Some(&a), k).unwrap().total));
    }
    group.finish();
}

fn k_sweep(c: &mut Criterion) {
    let g = hub_graph();
    let mut group = c.benchmark_group("new-listing-k");
    group.sample_size(10);
    for k in default_k_ladder(&g) {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| Algorithm::NewListing.list(&g, None, black_box(k)).unwrap().count())
        });
    }
    group.finish();
}

criterion_group!(benches, sparse_listers, matrix_methods, k_sweep);
criterion_main!(benches);
