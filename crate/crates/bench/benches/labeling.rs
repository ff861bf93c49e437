use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use powerlabel::generators::generate_powerlaw_graph;
use powerlabel::labeling::{predicted_threshold, sweep_thresholds};
use powerlabel::realize::havel_hakimi;
use powerlabel::{encode, Mode};

fn bench_encode(c: &mut Criterion) {
    let mut group = c.benchmark_group("encode");
    for n in [10_000usize, 100_000] {
        let g = generate_powerlaw_graph(n, 2.2, 1).unwrap().graph;
        let t = predicted_threshold(n, 2.2).unwrap();
        for mode in [Mode::Concat, Mode::Bitstring] {
            group.bench_with_input(BenchmarkId::new(mode.to_string(), n), &g, |b, g| {
                b.iter(|| encode(black_box(g), t, mode))
            });
        }
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let g = generate_powerlaw_graph(100_000, 2.2, 2).unwrap().graph;
    c.bench_function("sweep/concat/100000", |b| {
        b.iter(|| sweep_thresholds(black_box(&g), Mode::Concat))
    });
}

fn bench_havel_hakimi(c: &mut Criterion) {
    let pg = generate_powerlaw_graph(100_000, 2.4, 3).unwrap();
    c.bench_function("havel_hakimi/100000", |b| {
        b.iter(|| havel_hakimi(black_box(&pg.repaired)).unwrap())
    });
}

criterion_group!(benches, bench_encode, bench_sweep, bench_havel_hakimi);
criterion_main!(benches);
