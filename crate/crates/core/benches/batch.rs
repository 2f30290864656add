use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use knotcert_core::batch::{analyze_source, BatchOptions};
use knotcert_core::corpus::random_braid;
use rand::SeedableRng;

fn corpus(records: usize) -> String {
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    (0..records)
        .map(|_| random_braid(&mut rng, 5, 24, false).to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify-batch");
    for records in [64, 512] {
        let text = corpus(records);
        group.throughput(Throughput::Elements(records as u64));
        for (label, jobs) in [
            ("sequential", Some(1)),
            ("parallel", None),
            ("parallel-4", Some(4)),
        ] {
            let opts = BatchOptions {
                jobs,
                ..BatchOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(label, records), &text, |b, text| {
                b.iter(|| analyze_source(black_box(text), &opts))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
