use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use linesramsey::{klein_form, quadric_through_skew_triple, transversal_system, Line3};
use linesramsey_bench::skew_lines;

fn lines() -> Vec<Line3> {
    skew_lines(8, 3).lines().expect("lines").to_vec()
}

fn kernel(c: &mut Criterion) {
    let ls = lines();
    c.bench_function("klein-form", |b| {
        b.iter(|| klein_form(black_box(&ls[0]), black_box(&ls[1])))
    });
    c.bench_function("quadric-through-skew-triple", |b| {
        b.iter(|| quadric_through_skew_triple(black_box(&ls[0]), &ls[1], &ls[2]))
    });
    c.bench_function("transversal-system", |b| {
        b.iter(|| transversal_system(black_box(&ls[..4])))
    });
}

criterion_group!(benches, kernel);
criterion_main!(benches);
