use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nchamil::bialgebra::check_bialgebra_axioms;
use nchamil::ce::TruncationProfile;
use nchamil::graded::normalize_word;
use nchamil::obstruction::{hochschild_cohomology, kunneth_check};
use nchamil::par::Execution;
use nchamil::rational::q;
use nchamil::{Hamiltonian, SymplecticSpace};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn axioms(c: &mut Criterion) {
    let s = SymplecticSpace::standard_2d();
    let mut g = c.benchmark_group("axiom_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 5), &exec, |b, &e| {
            b.iter(|| black_box(check_bialgebra_axioms(&s, 5, 0, 0, e).passed()))
        });
    }
    g.finish();
}

fn hochschild(c: &mut Criterion) {
    let s = SymplecticSpace::standard_2d();
    let mut h = Hamiltonian::zero();
    h.add_letters(&s, &[0, 0], q(1)).unwrap();
    let mut g = c.benchmark_group("hochschild_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 6), &exec, |b, &e| {
            b.iter(|| black_box(hochschild_cohomology(&s, &h, 6, e).unwrap().total()))
        });
    }
    g.finish();
}

fn kunneth(c: &mut Criterion) {
    let s = SymplecticSpace::one_dim(q(1)).unwrap();
    let t3 = normalize_word(&s, &[0, 0, 0]).unwrap().unwrap().0;
    let h = Hamiltonian::from_word(t3);
    let p = TruncationProfile::new(7, 3, 1, 1, 10).unwrap();
    let mut g = c.benchmark_group("kunneth_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 7), &exec, |b, &e| {
            b.iter(|| black_box(kunneth_check(&s, &h, &p, e).unwrap().agree()))
        });
    }
    g.finish();
}

criterion_group!(benches, axioms, hochschild, kunneth);
criterion_main!(benches);
