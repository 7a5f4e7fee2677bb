//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use linesramsey::generators::rng::derive_rng;
use linesramsey::generators::{
    gen_parallel_planes_grid, gen_random_lines, gen_random_points, gen_ruled_reguli, LineFlags,
};
use linesramsey::hypergraph::Hypergraph;
use linesramsey::ramsey::{
    brute_alpha, brute_edges, brute_omega, extract, spencer_is, turan_is, verify_certificate,
    Certificate, ExtractParams,
};
use linesramsey::{
    build_degeneracy_hypergraph, klein_form, witness_map, Config, Graph, HPoint3, HyperplaneSet,
    Line3, LineMode, Point2, Relation, Scalar,
};
use linesramsey_cli::report::{header, report_row};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

const KERNEL_PAIRS: usize = 10_000;
const KERNEL_LIMIT: Duration = Duration::from_secs(10);
const KLEIN_LINES: usize = 10_000;
const REGULI_LIMIT: Duration = Duration::from_secs(120);
const PLANES_LIMIT: Duration = Duration::from_secs(60);
const GRAPHS: usize = 1_000;
const HYPERGRAPHS: usize = 500;
const GUARANTEE_LIMIT: Duration = Duration::from_secs(120);
const SANDWICH_SEEDS: u64 = 30;
const SANDWICH_MIN: usize = 200;
const LEMMA_POINT_SETS: u64 = 100;
const LEMMA_LINE_SETS: u64 = 50;
const END_TO_END: u64 = 100;
const END_TO_END_N: usize = 100;
const END_TO_END_RANGE: i64 = 20;
const END_TO_END_LIMIT: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
    /// Deterministic transcript, compared across reruns.
    report: String,
}

/// Certificates produced along the way and how many failed to verify.
#[derive(Default)]
struct Certs {
    checked: usize,
    failed: Vec<String>,
}

impl Certs {
    fn check(&mut self, label: &str, cert: &Certificate, cfg: &Config) -> bool {
        self.checked += 1;
        let ok = verify_certificate(cert, cfg);
        if !ok {
            self.failed.push(label.to_string());
        }
        ok
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.pass = false;
        let _ = write!(out.detail, "; took {took:.1?}, limit {limit:?}");
    } else {
        let _ = write!(out.detail, "; {took:.1?}");
    }
    out
}

fn det4(m: [[i128; 4]; 4]) -> i128 {
    let det3 = |r: [usize; 3], c: [usize; 3]| -> i128 {
        m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
            - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
            + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
    };
    (0..4)
        .map(|j| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
            let minor = det3([1, 2, 3], [cols[0], cols[1], cols[2]]);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * minor
        })
        .sum()
}

fn random_point(rng: &mut impl Rng, range: i64) -> [i64; 3] {
    [0; 3].map(|_| rng.gen_range(-range..=range))
}

fn criterion_1() -> Outcome {
    let mut rng = derive_rng(1, "acceptance-kernel", 0);
    let (mut mismatches, mut meeting, mut done) = (0usize, 0usize, 0usize);
    while done < KERNEL_PAIRS {
        let a = random_point(&mut rng, 6);
        let b = random_point(&mut rng, 6);
        let (c, d) = match done % 3 {
            // Through a point of the first line.
            0 => {
                let s = rng.gen_range(-2..=2);
                let c = [0, 1, 2].map(|i| a[i] + s * (b[i] - a[i]));
                (c, random_point(&mut rng, 6))
            }
            // Parallel to the first line.
            1 => {
                let c = random_point(&mut rng, 6);
                (c, [0, 1, 2].map(|i| c[i] + b[i] - a[i]))
            }
            _ => (random_point(&mut rng, 6), random_point(&mut rng, 6)),
        };
        let (Ok(l), Ok(m)) = (Line3::through_affine(a, b), Line3::through_affine(c, d)) else {
            continue;
        };
        let row = |p: [i64; 3]| [p[0] as i128, p[1] as i128, p[2] as i128, 1];
        let zero_det = det4([row(a), row(b), row(c), row(d)]) == 0;
        if zero_det {
            meeting += 1;
        }
        if klein_form(&l, &m).is_zero() != zero_det {
            mismatches += 1;
        }
        done += 1;
    }
    Outcome {
        pass: mismatches == 0,
        detail: format!("{done} pairs, {meeting} coplanar, {mismatches} mismatches"),
        report: format!("{done} {meeting} {mismatches}\n"),
    }
}

fn criterion_2() -> Outcome {
    let mut rng = derive_rng(2, "acceptance-klein", 0);
    let (mut failures, mut done) = (0usize, 0usize);
    while done < KLEIN_LINES {
        let range = [3, 50, 10_000][done % 3];
        let (a, b) = (random_point(&mut rng, range), random_point(&mut rng, range));
        let Ok(l) = Line3::through_affine(a, b) else {
            continue;
        };
        let p = l.plucker();
        if !(&p[0] * &p[5] - &p[1] * &p[4] + &p[3] * &p[2]).is_zero() {
            failures += 1;
        }
        done += 1;
    }
    Outcome {
        pass: failures == 0,
        detail: format!("{done} lines, {failures} failures"),
        report: format!("{done} {failures}\n"),
    }
}

fn criterion_3(certs: &mut Certs) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let mut report = String::new();
    for k in 2..=4usize {
        let cfg = Config::Lines3(gen_ruled_reguli(k, k as u64).unwrap());
        let rel = Relation::CoRegulusLines;
        let top = witness_map(&rel, &cfg).unwrap().max_size();
        pass &= top == k * k;
        let ex = extract(&rel, &cfg, &ExtractParams::default()).unwrap();
        pass &= certs.check(&format!("reguli k={k}"), &ex.certificate, &cfg);
        let _ = writeln!(
            report,
            "k={k} n={} top={top} cert={:?}",
            cfg.len(),
            ex.certificate.outcome
        );
        detail.push(format!("k={k}: max regulus {top}"));
        if k == 2 {
            let omega = brute_omega(&rel, &cfg).unwrap().size;
            let alpha = brute_alpha(&brute_edges(&rel, &cfg).unwrap()).unwrap();
            pass &= omega == 4 && alpha == 3 * k;
            let _ = writeln!(report, "k=2 omega={omega} alpha={alpha}");
            detail.push(format!("brute omega {omega}, max 4-free {alpha}"));
        }
    }
    Outcome {
        pass,
        detail: detail.join(", "),
        report,
    }
}

/// The height of the horizontal plane holding `l`, if any.
fn horizontal_height(l: &Line3) -> Option<Scalar> {
    let zs: Vec<Scalar> = l
        .sample_points()
        .iter()
        .filter_map(|c| HPoint3::from_ints(c.clone()).ok()?.to_affine())
        .map(|[_, _, z]| z)
        .collect();
    (zs.len() >= 2 && zs.iter().all(|z| *z == zs[0])).then(|| zs[0].clone())
}

fn criterion_4(certs: &mut Certs) -> Outcome {
    let mut pass = true;
    let mut report = String::new();
    let mut sizes = Vec::new();
    for seed in 0..5u64 {
        let lines = gen_parallel_planes_grid(3, seed).unwrap();
        let cfg = Config::Lines3(lines.clone());
        let rel = Relation::StabbedLines;
        let brute = brute_omega(&rel, &cfg).unwrap();
        let computed = witness_map(&rel, &cfg).unwrap().max_size();
        let mut planes: BTreeMap<Scalar, usize> = BTreeMap::new();
        for l in &lines {
            match horizontal_height(l) {
                Some(z) => *planes.entry(z).or_default() += 1,
                None => pass = false,
            }
        }
        let widest = planes.values().copied().max().unwrap_or(0);
        pass &= brute.size <= 7 && widest <= 3 && computed == brute.size;
        let ex = extract(
            &rel,
            &cfg,
            &ExtractParams {
                seed,
                ..ExtractParams::default()
            },
        )
        .unwrap();
        pass &= certs.check(&format!("planes grid seed {seed}"), &ex.certificate, &cfg);
        let _ = writeln!(
            report,
            "seed={seed} brute={} computed={computed} widest={widest} cert={:?}",
            brute.size, ex.certificate.outcome
        );
        sizes.push(brute.size);
    }
    Outcome {
        pass,
        detail: format!("max stabbed per seed {sizes:?} (bound 7), within-plane <= 3"),
        report,
    }
}

fn random_graph(rng: &mut impl Rng) -> Graph {
    let n = rng.gen_range(1..=200);
    let p: f64 = rng.gen_range(0.0..0.5);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn random_hypergraph(rng: &mut impl Rng) -> Hypergraph {
    let t = [3, 4, 6][rng.gen_range(0..3)];
    let n = rng.gen_range(t..=60);
    let m = match rng.gen_range(0..3) {
        0 => rng.gen_range(0..=n / t),
        _ => rng.gen_range(0..=4 * n),
    };
    let all: Vec<usize> = (0..n).collect();
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let mut e: Vec<usize> = all.choose_multiple(rng, t).copied().collect();
            e.sort_unstable();
            e
        })
        .collect();
    Hypergraph::new(n, t, edges)
}

fn independent_in(edges: &[Vec<usize>], n: usize, set: &[usize]) -> bool {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n || inside[v] {
            return false;
        }
        inside[v] = true;
    }
    edges.iter().all(|e| !e.iter().all(|&v| inside[v]))
}

/// `s >= ((t-1)/t^(t/(t-1))) n (n/m)^(1/(t-1))`, or the sparse and empty cases.
fn meets_spencer_oracle(s: usize, n: usize, m: usize, t: usize) -> bool {
    if m == 0 {
        return s == n;
    }
    if m * t < n {
        return 2 * s > n;
    }
    let t32 = t as u32;
    let lhs = BigInt::from(s).pow(t32 - 1) * BigInt::from(t).pow(t32) * BigInt::from(m);
    let rhs = BigInt::from(t - 1).pow(t32 - 1) * BigInt::from(n).pow(t32);
    lhs >= rhs
}

fn criterion_5() -> Outcome {
    let mut rng = derive_rng(5, "acceptance-guarantees", 0);
    let mut violations = 0usize;
    let mut report = String::new();
    for _ in 0..GRAPHS {
        let g = random_graph(&mut rng);
        let (n, m) = (g.n, g.m());
        let s = turan_is(&g);
        let edges: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
        let bound_ceil = (n * n).div_ceil(2 * m + n);
        if !independent_in(&edges, n, &s) || s.len() < bound_ceil {
            violations += 1;
        }
        let _ = writeln!(report, "g {n} {m} {}", s.len());
    }
    for i in 0..HYPERGRAPHS {
        let h = random_hypergraph(&mut rng);
        let s = spencer_is(&h, i as u64, 10_000).unwrap();
        if !independent_in(&h.edges, h.n, &s) || !meets_spencer_oracle(s.len(), h.n, h.m(), h.t) {
            violations += 1;
        }
        let _ = writeln!(report, "h {} {} {} {}", h.n, h.t, h.m(), s.len());
    }
    Outcome {
        pass: violations == 0,
        detail: format!("{GRAPHS} graphs, {HYPERGRAPHS} hypergraphs, {violations} violations"),
        report,
    }
}

fn points2(n: usize, seed: u64, range: i64) -> Config {
    let pts = gen_random_points(n, 2, seed, range, None, None).unwrap();
    Config::Points2(
        pts.iter()
            .map(|p| {
                let [x, y, _] = p.to_affine().unwrap();
                Point2::new(x, y)
            })
            .collect(),
    )
}

fn hyperplane_instance(n: usize, seed: u64) -> (Relation, Config) {
    let pts = gen_random_points(n, 3, seed, 2, None, None).unwrap();
    let points: Vec<Vec<Scalar>> = pts
        .iter()
        .map(|p| p.to_affine().unwrap().to_vec())
        .collect();
    let int = |v: i64| Scalar::from_integer(v.into());
    let hs = vec![
        vec![int(0), int(0), int(0), int(1)],
        vec![int(-1), int(1), int(1), int(0)],
        vec![int(1), int(0), int(1), int(-1)],
    ];
    let rel = Relation::PointsOnGivenHyperplanes(HyperplaneSet::new(3, &hs).unwrap());
    (rel, Config::PointsD { dim: 3, points })
}

/// Pairwise skew lines: rulings of two reguli topped up with random lines.
fn skew_lines(seed: u64, total: usize) -> Config {
    let mut ls: Vec<Line3> = gen_ruled_reguli(2, seed)
        .unwrap()
        .into_iter()
        .take(6)
        .collect();
    let pool = gen_random_lines(60, seed, 6, LineFlags::default()).unwrap();
    for l in pool {
        if ls.len() >= total {
            break;
        }
        if ls.iter().all(|m| !klein_form(&l, m).is_zero()) {
            ls.push(l);
        }
    }
    Config::Lines3(ls)
}

fn sandwich_instances(seed: u64) -> Vec<(Relation, Config)> {
    let n = 5 + (seed % 5) as usize;
    let lines = Config::Lines3(gen_random_lines(n, seed, 1, LineFlags::default()).unwrap());
    vec![
        (
            Relation::CollinearPoints3D,
            Config::Points3(gen_random_points(n, 3, seed, 1, None, None).unwrap()),
        ),
        hyperplane_instance(n, seed),
        (Relation::LineIntersection(LineMode::Affine), lines.clone()),
        (
            Relation::LineIntersection(LineMode::Projective),
            lines.clone(),
        ),
        (Relation::ConcurrentLines, lines.clone()),
        (
            Relation::StabbedLines,
            if seed.is_multiple_of(2) {
                lines
            } else {
                Config::Lines3(gen_parallel_planes_grid(3, seed).unwrap())
            },
        ),
        (Relation::CoRegulusLines, skew_lines(seed, n)),
        (Relation::ConcyclicPoints2D, points2(n, seed, 2)),
    ]
}

fn criterion_6(certs: &mut Certs) -> Outcome {
    let (mut instances, mut edge_bad, mut omega_bad) = (0usize, Vec::new(), Vec::new());
    let mut report = String::new();
    for seed in 0..SANDWICH_SEEDS {
        for (rel, cfg) in sandwich_instances(seed) {
            instances += 1;
            let label = format!("{rel} seed {seed}");
            let ours = build_degeneracy_hypergraph(&rel, &cfg).unwrap();
            let brute = brute_edges(&rel, &cfg).unwrap();
            if ours.edges != brute.edges {
                edge_bad.push(label.clone());
            }
            let ex = extract(
                &rel,
                &cfg,
                &ExtractParams {
                    seed,
                    ..ExtractParams::default()
                },
            )
            .unwrap();
            certs.check(&label, &ex.certificate, &cfg);
            let omega = brute_omega(&rel, &cfg).unwrap().size;
            let floor = if rel == Relation::StabbedLines {
                4
            } else {
                rel.t()
            };
            let agrees = if omega >= floor {
                ex.report.omega_witness == omega
            } else {
                ex.report.omega_witness <= omega && !ex.certificate.is_clique()
            };
            if !agrees {
                omega_bad.push(label);
            }
            let _ = writeln!(
                report,
                "{rel} {seed} n={} m={} omega={omega} phase1={} out={:?}",
                cfg.len(),
                brute.m(),
                ex.report.omega_witness,
                ex.certificate.outcome
            );
        }
    }
    Outcome {
        pass: instances >= SANDWICH_MIN && edge_bad.is_empty() && omega_bad.is_empty(),
        detail: format!(
            "{instances} instances, edge mismatches {edge_bad:?}, clique mismatches {omega_bad:?}"
        ),
        report,
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn criterion_7() -> Outcome {
    let mut violations = Vec::new();
    let mut report = String::new();
    let mut check = |label: String, rel: Relation, cfg: Config| {
        let t = rel.t();
        let direct = brute_edges(&rel, &cfg).unwrap().m() as u128;
        let summed: u128 = witness_map(&rel, &cfg)
            .unwrap()
            .entries
            .iter()
            .map(|e| binomial(e.members.len(), t))
            .sum();
        if direct != summed {
            violations.push(label.clone());
        }
        let _ = writeln!(report, "{label} m={direct} sum={summed}");
    };
    for seed in 0..LEMMA_POINT_SETS {
        let n = 8 + (seed % 8) as usize;
        let pts = gen_random_points(n, 3, seed, 1 + (seed % 2) as i64, None, None).unwrap();
        check(
            format!("points {seed}"),
            Relation::CollinearPoints3D,
            Config::Points3(pts),
        );
    }
    for seed in 0..LEMMA_LINE_SETS {
        let cfg = if seed % 2 == 0 {
            Config::Lines3(gen_ruled_reguli(2, seed).unwrap())
        } else {
            skew_lines(seed, 10)
        };
        check(format!("lines {seed}"), Relation::CoRegulusLines, cfg);
    }
    Outcome {
        pass: violations.is_empty(),
        detail: format!(
            "{LEMMA_POINT_SETS} point sets, {LEMMA_LINE_SETS} line sets, violations {violations:?}"
        ),
        report,
    }
}

fn run_cli(args: &[&str], dir: &Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_linesramsey"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("cli runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn exit_code_checks() -> Vec<String> {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let mut bad = Vec::new();
    let mut expect = |what: &str, args: &[&str], code: i32| {
        let (got, _) = run_cli(args, p);
        if got != code {
            bad.push(format!("{what}: exit {got}, expected {code}"));
        }
    };
    expect(
        "gen grid",
        &["gen", "grid", "--a", "3", "--b", "3", "-o", "grid.json"],
        0,
    );
    expect(
        "gen lines",
        &["gen", "skew-lines", "--n", "6", "-o", "lines.json"],
        0,
    );
    expect(
        "extract",
        &[
            "extract",
            "grid.json",
            "-r",
            "collinear",
            "--cert",
            "c.json",
        ],
        0,
    );
    expect("verify", &["verify", "grid.json", "c.json"], 0);
    std::fs::write(p.join("bad.json"), "{ not json").unwrap();
    expect("bad config", &["extract", "bad.json", "-r", "collinear"], 2);
    expect(
        "relation mismatch",
        &["extract", "lines.json", "-r", "collinear"],
        3,
    );
    let cert = std::fs::read_to_string(p.join("c.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&cert).unwrap();
    v["members"] = serde_json::json!([0, 1, 4]);
    std::fs::write(p.join("t.json"), v.to_string()).unwrap();
    expect(
        "tampered certificate",
        &["verify", "grid.json", "t.json"],
        4,
    );
    expect("missing file", &["verify", "nope.json", "c.json"], 2);
    bad
}

fn criterion_8(certs: &Certs) -> Outcome {
    let exit = exit_code_checks();
    Outcome {
        pass: certs.failed.is_empty() && certs.checked > 0 && exit.is_empty(),
        detail: format!(
            "{} certificates, failed {:?}, exit code problems {exit:?}",
            certs.checked, certs.failed
        ),
        report: String::new(),
    }
}

fn criterion_9(certs: &mut Certs) -> Outcome {
    let rel = Relation::LineIntersection(LineMode::Affine);
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(header(false)).unwrap();
    let mut ratios = Vec::new();
    let mut pass = true;
    for seed in 0..END_TO_END {
        let lines =
            gen_random_lines(END_TO_END_N, seed, END_TO_END_RANGE, LineFlags::default()).unwrap();
        let cfg = Config::Lines3(lines);
        let ex = extract(
            &rel,
            &cfg,
            &ExtractParams {
                seed,
                ..ExtractParams::default()
            },
        )
        .unwrap();
        pass &= certs.check(&format!("end-to-end seed {seed}"), &ex.certificate, &cfg);
        ratios.push(ex.report.achieved as f64 / (END_TO_END_N as f64).cbrt());
        let row = report_row(&format!("e2e-{seed}"), &rel, &cfg, &ex, None, None);
        csv.write_record(row).unwrap();
    }
    let report = String::from_utf8(csv.into_inner().unwrap()).unwrap();
    let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let below = ratios.iter().filter(|&&r| r < 1.0).count();
    Outcome {
        pass,
        detail: format!(
            "{END_TO_END} instances, achieved/n^(1/3) min {min:.3} mean {mean:.3}, {below} below 1 (reported only)"
        ),
        report,
    }
}

fn experiment_bytes(threads: &str) -> Result<Vec<u8>, String> {
    let dir = tempfile::tempdir().unwrap();
    let manifest = serde_json::json!({
        "version": 1,
        "seed": 9,
        "lemma1": true,
        "instances": [
            {"id": "pts", "gen": {"kind": "random-points", "n": 14, "dim": 3, "seed": 1, "range": 2},
             "repeat": 3, "relations": ["collinear"]},
            {"id": "lines", "gen": {"kind": "random-lines", "n": 20, "seed": 4, "range": 3},
             "relations": ["intersection", "intersection-projective", "concurrent"]},
            {"id": "reguli", "gen": {"kind": "ruled-reguli", "k": 2, "seed": 0},
             "relations": ["co-regulus", "stabbed"]}
        ]
    });
    std::fs::write(dir.path().join("m.json"), manifest.to_string()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_linesramsey"))
        .args(["experiment", "m.json", "-o", "r.csv"])
        .env("LINESRAMSEY_THREADS", threads)
        .current_dir(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    std::fs::read(dir.path().join("r.csv")).map_err(|e| e.to_string())
}

fn criterion_10(first: &[(usize, String)]) -> Outcome {
    let mut scratch = Certs::default();
    let mut differing = Vec::new();
    for (id, report) in first {
        let again = match id {
            1 => criterion_1().report,
            2 => criterion_2().report,
            3 => criterion_3(&mut scratch).report,
            4 => criterion_4(&mut scratch).report,
            5 => criterion_5().report,
            6 => criterion_6(&mut scratch).report,
            7 => criterion_7().report,
            9 => criterion_9(&mut scratch).report,
            _ => continue,
        };
        if &again != report {
            differing.push(id.to_string());
        }
    }
    let runs: Vec<Result<Vec<u8>, String>> = ["1", "1", "4"]
        .iter()
        .map(|t| experiment_bytes(t))
        .collect();
    let cli_ok = match (&runs[0], &runs[1], &runs[2]) {
        (Ok(a), Ok(b), Ok(c)) => a == b && a == c && !a.is_empty(),
        _ => false,
    };
    if !cli_ok {
        differing.push("experiment".into());
    }
    Outcome {
        pass: differing.is_empty(),
        detail: format!(
            "{} criterion reports and the experiment CSV rerun, differing {differing:?}",
            first.len()
        ),
        report: String::new(),
    }
}

fn main() {
    let mut certs = Certs::default();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    results.push((
        1,
        "kernel oracle equivalence",
        timed(KERNEL_LIMIT, criterion_1),
    ));
    results.push((
        2,
        "klein quadric membership",
        timed(Duration::MAX, criterion_2),
    ));
    results.push((
        3,
        "ruled reguli construction",
        timed(REGULI_LIMIT, || criterion_3(&mut certs)),
    ));
    results.push((
        4,
        "parallel planes grid",
        timed(PLANES_LIMIT, || criterion_4(&mut certs)),
    ));
    results.push((
        5,
        "turan and spencer guarantees",
        timed(GUARANTEE_LIMIT, criterion_5),
    ));
    results.push((
        6,
        "brute-force sandwich",
        timed(Duration::MAX, || criterion_6(&mut certs)),
    ));
    results.push((7, "edge count identity", timed(Duration::MAX, criterion_7)));
    results.push((
        9,
        "line intersection end to end",
        timed(END_TO_END_LIMIT, || criterion_9(&mut certs)),
    ));
    let c8 = timed(Duration::MAX, || criterion_8(&certs));
    results.insert(7, (8, "certificate closure and exit codes", c8));
    let reports: Vec<(usize, String)> = results
        .iter()
        .map(|(id, _, o)| (*id, o.report.clone()))
        .collect();
    results.push((
        10,
        "determinism",
        timed(Duration::MAX, || criterion_10(&reports)),
    ));

    let mut failed = 0;
    for (id, name, o) in &results {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} {name}: {}", o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    let seen: HashSet<usize> = results.iter().map(|r| r.0).collect();
    assert_eq!(seen, (1..=10).collect::<HashSet<_>>());
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
