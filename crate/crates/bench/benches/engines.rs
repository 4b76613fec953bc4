use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qpv_core::recurrence::{gkd_prop_recurrence, lemma_run, transform_chain};
use qpv_core::{builtin_case, verify_case, PartitionSystem, Product, Variables};

fn expansion(c: &mut Criterion) {
    let product = Product::parse("(-aq;q^2)_inf (-dq;q^2)_inf / (q;q)_inf / (cq;q^2)_inf").unwrap();
    let vars = Variables::acd();
    c.bench_function("expand theorem product, q^30", |b| {
        b.iter(|| product.expand_in(&vars, black_box(30)).unwrap())
    });
    let partitions = Product::parse("1/(q;q)_inf").unwrap();
    c.bench_function("expand 1/(q;q)_inf, q^200", |b| {
        b.iter(|| partitions.expand(black_box(200)).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let sys = PartitionSystem::primc();
    let vars = Variables::acd();
    c.bench_function("generating series by largest part, q^25", |b| {
        b.iter(|| sys.generating_series(&vars, black_box(25)).unwrap())
    });
    c.bench_function("explicit enumeration of weight 12", |b| {
        b.iter(|| sys.enumerate_exact(black_box(12)).len())
    });
}

fn engines(c: &mut Criterion) {
    c.bench_function("lemma recurrence, k <= 12, q^20", |b| {
        b.iter(|| lemma_run(black_box(12), 20))
    });
    c.bench_function("order-3 recurrence, k <= 12, q^20", |b| {
        b.iter(|| gkd_prop_recurrence(black_box(12), 20))
    });
    c.bench_function("transform chain, x^10, q^20", |b| {
        b.iter(|| transform_chain(black_box(12), 10, 20))
    });
}

fn verification(c: &mut Criterion) {
    let case = builtin_case("cor2").unwrap();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("cor2 at n = 16", |b| {
        b.iter(|| verify_case(&case, black_box(16), 16).unwrap())
    });
    group.finish();
}

criterion_group!(benches, expansion, enumeration, engines, verification);
criterion_main!(benches);
