use criterion::{criterion_group, criterion_main, Criterion};

use og4_bench::fixtures;
use og4_core::classify::classify_independent;
use og4_core::pair::{check_og4, pair_isomorphic, IsoOptions};
use og4_core::quotient::cyclic_quotient_census;
use og4_core::PermGroup;

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure");
    for (name, pair) in fixtures() {
        g.bench_function(&name, |b| {
            let (n, gens) = (pair.graph().n(), pair.group().generators().to_vec());
            b.iter(|| PermGroup::new(n, gens.clone()).unwrap().elements().unwrap().len())
        });
    }
    g.finish();
}

fn membership(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_og4");
    for (name, pair) in fixtures() {
        g.bench_function(&name, |b| b.iter(|| check_og4(&pair).unwrap().member()));
    }
    g.finish();
}

fn normal_subgroups(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_subgroups");
    g.sample_size(10);
    for (name, pair) in fixtures() {
        g.bench_function(&name, |b| b.iter(|| pair.group().normal_subgroups().unwrap().len()));
    }
    g.finish();
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    for (name, pair) in fixtures() {
        g.bench_function(&name, |b| b.iter(|| cyclic_quotient_census(&pair, 10_000).unwrap().len()));
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut g = c.benchmark_group("reversal_iso");
    g.sample_size(10);
    for (name, pair) in fixtures() {
        let rev = pair.with_reversed_delta();
        g.bench_function(&name, |b| b.iter(|| pair_isomorphic(&pair, &rev, IsoOptions { strict_delta: true }).unwrap().is_some()));
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for (name, pair) in fixtures().into_iter().take(4) {
        g.bench_function(&name, |b| b.iter(|| classify_independent(&pair, 10_000).unwrap().table_line));
    }
    g.finish();
}

criterion_group!(benches, closure, membership, normal_subgroups, census, isomorphism, classification);
criterion_main!(benches);
