use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use srmult_core::bounds::bound_report;
use srmult_core::generators::{
    cross_polytope_boundary, cycle, cyclic_polytope_boundary, torus_seven,
};
use srmult_core::hochster::betti_table;
use srmult_core::homology::{boundary_matrix, reduced_betti};
use srmult_core::sweep::{run_sweep, SweepConfig};
use srmult_core::FieldSpec;

fn betti_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    group.sample_size(10);
    let complexes = [
        ("cycle(12)", cycle(12).unwrap()),
        ("cross(6)", cross_polytope_boundary(6).unwrap()),
        ("cyclic(4,12)", cyclic_polytope_boundary(4, 12).unwrap()),
        ("cycle(14)", cycle(14).unwrap()),
    ];
    for (name, complex) in &complexes {
        for field in [FieldSpec::GF2, FieldSpec::GF3] {
            group.bench_with_input(BenchmarkId::new(*name, field), complex, |b, cx| {
                b.iter(|| betti_table(black_box(cx), field).unwrap())
            });
        }
    }
    group.finish();
}

fn ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("boundary_rank");
    let complex = cyclic_polytope_boundary(6, 14).unwrap();
    let matrix = boundary_matrix(&complex, 3);
    for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals] {
        group.bench_function(BenchmarkId::new("cyclic(6,14) d3", field), |b| {
            b.iter(|| black_box(&matrix).rank(field))
        });
    }
    let torus = torus_seven();
    group.bench_function("torus7 reduced homology over Q", |b| {
        b.iter(|| reduced_betti(black_box(&torus), FieldSpec::Rationals))
    });
    group.finish();
}

fn bounds_and_sweep(c: &mut Criterion) {
    let complex = cyclic_polytope_boundary(4, 10).unwrap();
    c.bench_function("bound_report cyclic(4,10)", |b| {
        b.iter(|| bound_report(black_box(&complex), FieldSpec::GF2).unwrap())
    });
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let config = SweepConfig {
        count: 50,
        ..SweepConfig::default()
    };
    group.bench_function("50 random complexes", |b| {
        b.iter(|| run_sweep(black_box(&config)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, betti_tables, ranks, bounds_and_sweep);
criterion_main!(benches);
