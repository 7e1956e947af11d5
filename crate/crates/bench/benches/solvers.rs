use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use dsl_core::stabilizers::solver::{default_delta_cap, default_tau_cap};
use dsl_core::stabilizers::{lq_basis, ls_basis, stab_delta_y_basis, stab_tau_basis};

fn stabilizers(c: &mut Criterion) {
    let mut g = c.benchmark_group("stabilizers");
    g.sample_size(10);
    for (m, n) in [(7u32, 1u32), (8, 2), (9, 3)] {
        g.bench_function(BenchmarkId::new("stab_delta_y", format!("{m},{n}")), |b| {
            b.iter(|| black_box(stab_delta_y_basis(m, n, default_delta_cap(m))))
        });
        g.bench_function(BenchmarkId::new("ls_conditions", format!("{m},{n}")), |b| {
            b.iter(|| black_box(ls_basis(m, n)))
        });
    }
    for (m, n) in [(4u32, 2u32), (5, 2), (5, 3)] {
        g.bench_function(BenchmarkId::new("stab_tau", format!("{m},{n}")), |b| {
            b.iter(|| black_box(stab_tau_basis(m, n, default_tau_cap(m))))
        });
        g.bench_function(BenchmarkId::new("lq_conditions", format!("{m},{n}")), |b| {
            b.iter(|| black_box(lq_basis(m, n)))
        });
    }
    g.finish();
}

criterion_group!(benches, stabilizers);
criterion_main!(benches);
