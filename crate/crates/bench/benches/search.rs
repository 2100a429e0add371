use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use twistroots::homology::{enumerate_orthogonal, find_square_root, psi_twist_a1, psi_twist_b};
use twistroots::{
    caseb_census, enumerate_classes, max_degree_bruteforce, max_degree_closed_form,
    solve_composite_system, DataSetType, GenusQuery,
};

fn congruences(c: &mut Criterion) {
    c.bench_function("composite system 45 x 81", |b| {
        b.iter(|| solve_composite_system(black_box(45), black_box(81)))
    });
}

fn max_degree(c: &mut Criterion) {
    let mut g = c.benchmark_group("max degree");
    g.bench_function("closed form A 496", |b| {
        b.iter(|| max_degree_closed_form(DataSetType::A, black_box(496)))
    });
    g.bench_function("search A 496", |b| {
        b.iter(|| max_degree_bruteforce(DataSetType::A, black_box(496)))
    });
    g.bench_function("search B 448", |b| {
        b.iter(|| max_degree_bruteforce(DataSetType::B, black_box(448)))
    });
    g.sample_size(10);
    g.bench_function("census B 500", |b| b.iter(|| caseb_census(black_box(500))));
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("classes B 12", |b| {
        b.iter(|| enumerate_classes(GenusQuery::new(DataSetType::B, black_box(12))))
    });
}

fn homology(c: &mut Criterion) {
    let mut g = c.benchmark_group("orthogonal group");
    g.sample_size(10);
    g.bench_function("enumerate O_6", |b| b.iter(|| enumerate_orthogonal(6).unwrap().count()));
    let a6 = psi_twist_a1(6).unwrap();
    g.bench_function("square root of psi(t_a1), g = 6", |b| b.iter(|| find_square_root(black_box(&a6))));
    let b6 = psi_twist_b(6).unwrap();
    g.bench_function("square root of psi(t_b), g = 6", |b| b.iter(|| find_square_root(black_box(&b6))));
    g.finish();
}

criterion_group!(benches, congruences, max_degree, enumeration, homology);
criterion_main!(benches);
