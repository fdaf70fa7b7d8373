use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use richardson_bench::{example_diagram, longest_diagram};
use richardson_core::harness::{verify, VerifyConfig};
use richardson_core::minors::rng;
use richardson_core::{eval_minor, pds, ExactMatrix, IndexSet, IngermansonSeed, LeclercSeed, MinorIndex};

fn constructions(c: &mut Criterion) {
    let d = example_diagram();
    c.bench_function("pds example", |b| b.iter(|| pds(black_box(d.v()), black_box(d.word()))));
    c.bench_function("ingermanson example", |b| b.iter(|| IngermansonSeed::new(black_box(&d))));
    c.bench_function("leclerc example", |b| b.iter(|| LeclercSeed::new(black_box(&d))));
    let top = longest_diagram(5);
    c.bench_function("ingermanson longest n=5", |b| b.iter(|| IngermansonSeed::new(black_box(&top))));
    c.bench_function("leclerc longest n=5", |b| b.iter(|| LeclercSeed::new(black_box(&top))));
}

fn minors(c: &mut Criterion) {
    let x = ExactMatrix::random_unitriangular(7, &mut rng(1));
    let m = MinorIndex::new(IndexSet::new([1, 3, 4]), IndexSet::new([2, 3, 7]));
    c.bench_function("minor 3x3 in n=7", |b| b.iter(|| eval_minor(black_box(&x), black_box(&m))));
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let config = VerifyConfig { n: 3, trials: 10, ..VerifyConfig::default() };
    g.bench_function("all checks n<=3", |b| b.iter(|| verify(black_box(&config))));
    g.finish();
}

criterion_group!(benches, constructions, minors, suite);
criterion_main!(benches);
