use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rdelta::builtins;
use rdelta::groebner::Monomial;
use rdelta::homology::serre_condition_with;
use rdelta::par::Exec;
use rdelta::resolutions::{module_betti_over_gamma_with, FlagRing, SweepOptions};
use rdelta::FieldSpec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn serre(c: &mut Criterion) {
    let mut group = c.benchmark_group("serre_condition");
    let cases = [
        ("rp2_f2", builtins::rp2_flag(), 3, FieldSpec::of(2)),
        ("glued_3_3_q", builtins::glued_cross_polytopes(3, 3).unwrap(), 3, FieldSpec::RATIONALS),
        ("cross_5_q", builtins::cross_polytope_boundary(5).unwrap(), 5, FieldSpec::RATIONALS),
    ];
    for (name, delta, r, spec) in &cases {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), delta, |b, d| {
                b.iter(|| serre_condition_with(exec, black_box(d), *r, *spec))
            });
        }
    }
    group.finish();
}

fn tor_sweep(c: &mut Criterion) {
    let labels = ["x1", "x2", "x3", "y1", "y2", "y3"].map(String::from).to_vec();
    let ring = FlagRing::from_nonedges(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    let gens: Vec<Monomial> = [[0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 2, 2], [0, 0, 0, 0, 0, 4]]
        .iter()
        .map(|e| Monomial::from_exponents(e.to_vec()))
        .collect();
    let mut group = c.benchmark_group("module_betti_over_gamma");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let opts = SweepOptions { exec, ..SweepOptions::default() };
        group.bench_function(BenchmarkId::new(mode, "echo_imax5"), |b| {
            b.iter(|| module_betti_over_gamma_with(&ring, black_box(&gens), 5, FieldSpec::RATIONALS, opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, serre, tor_sweep);
criterion_main!(benches);
