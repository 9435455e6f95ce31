use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use stingray_bench::{bounded_partitions, enumeration_triples};
use stingray_core::alcove_index::verify_wall_crossings;
use stingray_core::patterns::{count_block_weights, enumerate_block_weights, enumerate_block_weights_par};
use stingray_core::runner_removal::verify_shi_stability;
use stingray_core::RunnerInsertion;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for t in enumeration_triples() {
        group.bench_with_input(BenchmarkId::new("serial", t), &t, |b, &t| {
            b.iter(|| enumerate_block_weights(black_box(t)).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("parallel", t), &t, |b, &t| {
            b.iter(|| enumerate_block_weights_par(black_box(t)).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("count", t), &t, |b, &t| {
            b.iter(|| count_block_weights(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn wall_crossing(c: &mut Criterion) {
    c.bench_function("wall-crossing r=3 w=6 e=8", |b| {
        b.iter(|| verify_wall_crossings(3, black_box(6), 8, false).unwrap().passed())
    });
}

fn shi_stability(c: &mut Criterion) {
    let partitions = bounded_partitions(4, 6);
    c.bench_function("shi-stability 4x6 box e=4", |b| {
        b.iter(|| {
            let mut ok = true;
            for lam in &partitions {
                for k in 0..4 {
                    let ins = RunnerInsertion::new(4, 4, k).unwrap();
                    ok &= verify_shi_stability(lam, ins).unwrap().passed();
                }
            }
            ok
        })
    });
}

criterion_group!(benches, enumeration, wall_crossing, shi_stability);
criterion_main!(benches);
