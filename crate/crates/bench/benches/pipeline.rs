use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use randnet::param_gen::{generate_hidden_params, PlacementContext};
use randnet::slfn::{fit_output_weights, hidden_matrix};
use randnet::GenConfig;
use randnet_bench::{hidden, surface};

fn generate(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate_hidden_params");
    for &(m, n) in &[(700, 2), (600, 21)] {
        let cfg = GenConfig::new(m, n).with_angles(29.0, 90.0);
        g.bench_with_input(BenchmarkId::from_parameter(format!("m{m}_n{n}")), &cfg, |b, cfg| {
            b.iter(|| generate_hidden_params(black_box(cfg), &PlacementContext::unit()).unwrap())
        });
    }
    g.finish();
}

fn hidden_layer(c: &mut Criterion) {
    let ds = surface(5000);
    let p = hidden(700, 2);
    c.bench_function("hidden_matrix/5000x700", |b| b.iter(|| hidden_matrix(black_box(&ds.x), &p).unwrap()));
}

fn readout(c: &mut Criterion) {
    let mut g = c.benchmark_group("fit_output_weights");
    g.sample_size(10);
    for &(rows, m) in &[(1000, 100), (4500, 700)] {
        let ds = surface(rows);
        let h = hidden_matrix(&ds.x, &hidden(m, 2)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(format!("{rows}x{m}")), &h, |b, h| {
            b.iter(|| fit_output_weights(black_box(h), &ds.y).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, generate, hidden_layer, readout);
criterion_main!(benches);
