use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linesramsey::ramsey::{extract, ExtractParams};
use linesramsey::{LineMode, Relation};
use linesramsey_bench::{planes_grid, random_lines, ruled_reguli, skew_lines};

fn intersection(c: &mut Criterion) {
    let mut g = c.benchmark_group("extract-intersection");
    for n in [50, 100, 200] {
        let cfg = random_lines(n, 1, 6);
        let rel = Relation::LineIntersection(LineMode::Affine);
        g.bench_with_input(BenchmarkId::from_parameter(n), &cfg, |b, cfg| {
            b.iter(|| extract(&rel, cfg, &ExtractParams::default()).unwrap())
        });
    }
    g.finish();
}

fn reguli(c: &mut Criterion) {
    let mut g = c.benchmark_group("extract-co-regulus");
    g.sample_size(10);
    for k in [2, 3] {
        let cfg = ruled_reguli(k);
        g.bench_with_input(BenchmarkId::from_parameter(k), &cfg, |b, cfg| {
            b.iter(|| extract(&Relation::CoRegulusLines, cfg, &ExtractParams::default()).unwrap())
        });
    }
    g.finish();
}

fn stabbed(c: &mut Criterion) {
    let mut g = c.benchmark_group("extract-stabbed");
    g.sample_size(10);
    for (name, cfg) in [
        ("planes-grid-3", planes_grid(3)),
        ("skew-15", skew_lines(15, 2)),
    ] {
        g.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| extract(&Relation::StabbedLines, cfg, &ExtractParams::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, intersection, reguli, stabbed);
criterion_main!(benches);
