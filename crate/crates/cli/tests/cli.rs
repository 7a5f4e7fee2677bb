use std::path::Path;
use std::process::{Command, Output};

use linesramsey::generators::{generate, GenSpec};
use linesramsey::ramsey::{extract, verify_certificate, ExtractParams};
use linesramsey::{Config, LineMode, Relation};
use linesramsey_cli::cert_io::{
    certificate_from_file, certificate_to_file, parse_certificate_file, serialize_certificate,
};
use linesramsey_cli::config_io::{parse_config, parse_rat, serialize_config, Loaded};
use linesramsey_cli::report::{header, COLUMNS};

fn cli(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linesramsey"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn specs() -> Vec<GenSpec> {
    vec![
        GenSpec::RandomPoints {
            n: 12,
            dim: 3,
            seed: 1,
            range: 3,
            max_collinear: None,
            max_coplanar: None,
        },
        GenSpec::RandomPoints {
            n: 9,
            dim: 2,
            seed: 2,
            range: 4,
            max_collinear: None,
            max_coplanar: None,
        },
        GenSpec::RandomLines {
            n: 10,
            seed: 3,
            range: 5,
            pairwise_skew: false,
            no_three_concurrent: false,
            generic_reguli: false,
        },
        GenSpec::GridPoints { a: 3, b: 4 },
        GenSpec::ParallelPlanesGrid { k: 3, seed: 4 },
        GenSpec::RuledReguli { k: 2, seed: 5 },
    ]
}

#[test]
fn configs_round_trip_through_json() {
    for spec in specs() {
        let loaded = Loaded {
            config: generate(&spec).unwrap(),
            hyperplanes: None,
            provenance: Some(spec.clone()),
        };
        let text = serialize_config(&loaded).unwrap();
        let back = parse_config(&text).unwrap();
        assert_eq!(back, loaded, "{spec:?}");
        assert_eq!(serialize_config(&back).unwrap(), text);
    }
}

#[test]
fn rationals_parse_in_lowest_terms() {
    assert_eq!(parse_rat("6/4").unwrap().to_string(), "3/2");
    assert_eq!(parse_rat("-2").unwrap().to_string(), "-2");
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}

#[test]
fn certificates_round_trip_and_still_verify() {
    let cases = [
        (
            Relation::CoRegulusLines,
            GenSpec::RuledReguli { k: 2, seed: 0 },
        ),
        (
            Relation::StabbedLines,
            GenSpec::ParallelPlanesGrid { k: 3, seed: 1 },
        ),
        (
            Relation::LineIntersection(LineMode::Affine),
            GenSpec::ParallelPlanesGrid { k: 3, seed: 1 },
        ),
        (
            Relation::CollinearPoints3D,
            GenSpec::GridPoints { a: 3, b: 3 },
        ),
    ];
    for (rel, spec) in cases {
        let cfg: Config = generate(&spec).unwrap();
        let ex = extract(&rel, &cfg, &ExtractParams::default()).unwrap();
        let text = serialize_certificate(&ex.certificate);
        let file = parse_certificate_file(&text).unwrap();
        let back = certificate_from_file(&file, rel.clone()).unwrap();
        assert_eq!(back, ex.certificate);
        assert_eq!(certificate_to_file(&back), file);
        assert!(verify_certificate(&back, &cfg));
    }
}

#[test]
fn extract_then_verify_on_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&cli(
            p,
            &["gen", "ruled-reguli", "--k", "2", "-o", "r.json"]
        )),
        0
    );
    let out = cli(
        p,
        &[
            "extract",
            "r.json",
            "-r",
            "co-regulus",
            "--cert",
            "c.json",
            "--report",
            "rep.csv",
        ],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = cli(p, &["verify", "r.json", "c.json"]);
    assert_eq!(code(&out), 0);
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(p.join("c.json")).unwrap()).unwrap();
    assert_eq!(cert["outcome"], "clique");
    assert_eq!(cert["members"].as_array().unwrap().len(), 4);

    // A second run appends a row under the same header.
    assert_eq!(
        code(&cli(
            p,
            &[
                "extract",
                "r.json",
                "-r",
                "co-regulus",
                "--report",
                "rep.csv"
            ]
        )),
        0
    );
    let report = std::fs::read_to_string(p.join("rep.csv")).unwrap();
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], COLUMNS.join(","));
    assert_eq!(lines[1], lines[2]);
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    cli(p, &["gen", "grid", "--a", "3", "--b", "3", "-o", "g.json"]);
    cli(p, &["gen", "planes-grid", "--k", "3", "-o", "l.json"]);
    std::fs::write(p.join("broken.json"), "[1, 2").unwrap();
    std::fs::write(
        p.join("v9.json"),
        r#"{"version": 9, "kind": "points3d", "elements": []}"#,
    )
    .unwrap();
    let dup = r#"{"version": 1, "kind": "points3d", "elements": [["0","0","0"], ["0","0","0"]]}"#;
    std::fs::write(p.join("dup.json"), dup).unwrap();

    assert_eq!(
        code(&cli(p, &["extract", "broken.json", "-r", "collinear"])),
        2
    );
    assert_eq!(code(&cli(p, &["extract", "v9.json", "-r", "collinear"])), 2);
    assert_eq!(
        code(&cli(p, &["extract", "dup.json", "-r", "collinear"])),
        2
    );
    assert_eq!(
        code(&cli(p, &["extract", "g.json", "-r", "no-such-relation"])),
        2
    );
    assert_eq!(code(&cli(p, &["extract", "g.json", "-r", "stabbed"])), 3);
    assert_eq!(code(&cli(p, &["extract", "l.json", "-r", "concyclic"])), 3);
    // Co-regulus needs pairwise skew lines; the planes grid has coplanar ones.
    assert_eq!(code(&cli(p, &["extract", "l.json", "-r", "co-regulus"])), 3);

    cli(
        p,
        &["extract", "g.json", "-r", "collinear", "--cert", "c.json"],
    );
    assert_eq!(code(&cli(p, &["verify", "l.json", "c.json"])), 3);
    let mut cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(p.join("c.json")).unwrap()).unwrap();
    cert["members"] = serde_json::json!([0, 4, 5]);
    std::fs::write(p.join("bad.json"), cert.to_string()).unwrap();
    assert_eq!(code(&cli(p, &["verify", "g.json", "bad.json"])), 4);
}

#[test]
fn empty_manifest_writes_only_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("m.json"), r#"{"version": 1, "instances": []}"#).unwrap();
    let out = cli(p, &["experiment", "m.json", "-o", "r.csv"]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(p.join("r.csv")).unwrap();
    assert_eq!(text, format!("{}\n", header(false).join(",")));
}

#[test]
fn experiment_rows_meet_their_guarantees() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    cli(
        p,
        &["gen", "grid", "--a", "4", "--b", "4", "-o", "grid.json"],
    );
    let manifest = serde_json::json!({
        "version": 1,
        "lemma1": true,
        "instances": [
            {"id": "grid", "config": "grid.json", "relations": ["collinear"]},
            {"id": "pts", "gen": {"kind": "random-points", "n": 15, "dim": 3, "seed": 0, "range": 2},
             "repeat": 3, "relations": ["collinear"]},
            {"id": "pg", "gen": {"kind": "parallel-planes-grid", "k": 3, "seed": 1},
             "relations": ["intersection", "concurrent", "stabbed"]},
            {"id": "reg", "gen": {"kind": "ruled-reguli", "k": 2, "seed": 0},
             "relations": ["co-regulus"]}
        ]
    });
    std::fs::write(p.join("m.json"), manifest.to_string()).unwrap();
    let out = cli(p, &["experiment", "m.json", "-o", "r.csv", "--timing"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let mut rdr = csv::Reader::from_path(p.join("r.csv")).unwrap();
    let head: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(head, header(true));
    let col = |name: &str| head.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let ids: Vec<&str> = rows.iter().map(|r| &r[col("instance")]).collect();
    assert_eq!(
        ids,
        ["grid", "pts-0", "pts-1", "pts-2", "pg", "pg", "pg", "reg"]
    );
    for r in &rows {
        assert_eq!(&r[col("guarantee_met")], "true");
        assert_eq!(&r[col("lemma1_equal")], "true", "{r:?}");
        let achieved: usize = r[col("achieved")].parse().unwrap();
        if &r[col("outcome")] == "clique" {
            let target: usize = r[col("target_ceil")].parse().unwrap();
            assert!(achieved >= target);
        } else {
            let floor: usize = r[col("guarantee_ceil")].parse().unwrap();
            assert!(achieved >= floor);
        }
    }
    assert_eq!(&rows[0][col("lemma1_direct")], "44");
    assert_eq!(&rows[7][col("outcome")], "clique");
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let manifest = r#"{"version": 1, "seed": 3, "instances": [
        {"id": "l", "gen": {"kind": "random-lines", "n": 12, "seed": 0, "range": 2},
         "repeat": 4, "relations": ["intersection", "concurrent"]}]}"#;
    std::fs::write(p.join("m.json"), manifest).unwrap();
    let run = |threads: &str, out: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_linesramsey"))
            .args(["experiment", "m.json", "-o", out])
            .env("LINESRAMSEY_THREADS", threads)
            .current_dir(p)
            .output()
            .unwrap();
        assert!(o.status.success());
        std::fs::read(p.join(out)).unwrap()
    };
    assert_eq!(run("1", "a.csv"), run("3", "b.csv"));
}

#[test]
fn oracle_and_bounds_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    cli(p, &["gen", "grid", "--a", "3", "--b", "3", "-o", "g.json"]);
    let out = cli(p, &["oracle", "g.json", "-r", "collinear"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["omega"], 3);
    assert_eq!(v["m"], 8);

    let out = cli(p, &["bounds", "--n", "100,1000"]);
    assert_eq!(code(&out), 0);
    assert!(!out.stdout.is_empty());
}

#[test]
fn report_flags_a_stabbing_line_taken_from_the_input() {
    use linesramsey::Line3;
    use linesramsey_cli::report::report_row;
    let y_axis = Line3::through_affine([0, 0, 0], [0, 1, 0]).unwrap();
    let mut ls: Vec<Line3> = (0..5)
        .map(|c| Line3::through_affine([0, c, 0], [1, c, c]).unwrap())
        .collect();
    ls.push(Line3::through_affine([0, 0, 0], [0, 0, 1]).unwrap());
    let col = COLUMNS.iter().position(|&c| c == "witness_is_input").unwrap();
    for (with_axis, expected) in [(false, "false"), (true, "true")] {
        let mut lines = ls.clone();
        if with_axis {
            lines.push(y_axis.clone());
        }
        let cfg = Config::Lines3(lines);
        let ex = extract(&Relation::StabbedLines, &cfg, &ExtractParams::default()).unwrap();
        assert!(ex.certificate.is_clique());
        let row = report_row("s", &Relation::StabbedLines, &cfg, &ex, None, None);
        assert_eq!(row.len(), COLUMNS.len());
        assert_eq!(row[col], expected);
    }
}
