use std::hint::black_box;

use apwidth::{check_lemma, reduce, WidthBudget, WidthSearch, Word};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_width(c: &mut Criterion) {
    let budget = WidthBudget {
        gen_len: 6,
        max_c: 4,
        ball_cap: 20_000_000,
    };
    let target = reduce(&"abaabbaaabbb".parse::<Word>().unwrap());
    let mut group = c.benchmark_group("width");
    group.sample_size(10);
    group.bench_function("witness3_m1_fresh", |b| {
        b.iter(|| {
            let mut s = WidthSearch::new(1, 2, budget).unwrap();
            s.search(black_box(&target)).found_c()
        })
    });
    let mut warm = WidthSearch::new(1, 2, budget).unwrap();
    warm.search(&target);
    group.bench_function("witness3_m1_cached_forward", |b| {
        b.iter(|| warm.search(black_box(&target)).found_c())
    });
    group.finish();
}

fn bench_lemma(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("check_lemma_n5_10k", |b| {
        b.iter(|| {
            check_lemma(2, 5, 50, 10_000, black_box(0))
                .unwrap()
                .observed_max
        })
    });
    group.finish();
}

criterion_group!(benches, bench_width, bench_lemma);
criterion_main!(benches);
