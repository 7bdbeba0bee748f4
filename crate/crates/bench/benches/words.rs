use std::hint::black_box;

use apwidth::sample::random_mixed_word;
use apwidth::{delta, enumerate_aps, reduce, witness, ApConfig, Word};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn words(len: usize, count: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..count)
        .map(|_| random_mixed_word(2, len, &mut rng))
        .collect()
}

fn bench_reduce(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for len in [16, 64, 256] {
        let input = words(len, 256);
        group.bench_with_input(BenchmarkId::from_parameter(len), &input, |b, input| {
            b.iter(|| {
                input
                    .iter()
                    .map(|w| reduce(black_box(w)).syllable_count())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn bench_delta(c: &mut Criterion) {
    let input = words(64, 256);
    c.bench_function("delta/random_64", |b| {
        b.iter(|| input.iter().map(|w| delta(black_box(w))).sum::<i64>())
    });
    c.bench_function("delta/witness_1000", |b| {
        b.iter(|| apwidth::delta_reduced(&witness(black_box(1000)).unwrap()))
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let cfg = ApConfig::new(2, 1, 10).unwrap();
    c.bench_function("enumerate_aps/rank2_m1_len10", |b| {
        b.iter(|| enumerate_aps(&cfg, black_box(10)).unwrap().count())
    });
}

criterion_group!(benches, bench_reduce, bench_delta, bench_enumerate);
criterion_main!(benches);
