//! Front end for generating configurations, extracting and verifying
//! certificates, and running experiment manifests.

pub mod cert_io;
pub mod config_io;
pub mod curves;
pub mod experiment;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use linesramsey::generators::{generate, GenError, GenSpec};
use linesramsey::ramsey::{
    brute_alpha, brute_omega, extract, lemma1_identity_check, verify_certificate, ExtractParams,
    RamseyError, DEFAULT_MAX_TRIALS,
};
use linesramsey::{
    build_degeneracy_hypergraph, edge_witnesses, IncidenceError, KernelError, LineMode, Relation,
};

use config_io::{parse_rat, read_config, serialize_config, Loaded};

/// Environment variable holding the worker thread count (default 1).
pub const THREADS_VAR: &str = "LINESRAMSEY_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relation/config mismatch: {0}")]
    Mismatch(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl From<IncidenceError> for CliError {
    fn from(e: IncidenceError) -> Self {
        match e {
            IncidenceError::DuplicatePoints | IncidenceError::DuplicateLines => {
                CliError::Parse(e.to_string())
            }
            IncidenceError::Kernel(KernelError::NotPairwiseSkew)
            | IncidenceError::ConfigMismatch { .. }
            | IncidenceError::DimensionMismatch { .. } => CliError::Mismatch(e.to_string()),
            IncidenceError::Kernel(_) => CliError::Other(e.to_string()),
        }
    }
}

impl From<RamseyError> for CliError {
    fn from(e: RamseyError) -> Self {
        match e {
            RamseyError::Incidence(i) => i.into(),
            RamseyError::VerificationFailed => CliError::Verification(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        match e {
            GenError::InvalidParameter(_) => CliError::Parse(e.to_string()),
            GenError::ResampleBudgetExceeded => CliError::Other(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

pub const RELATION_NAMES: [&str; 8] = [
    "collinear",
    "hyperplanes",
    "intersection",
    "intersection-projective",
    "concurrent",
    "stabbed",
    "co-regulus",
    "concyclic",
];

/// Resolves a relation name against a loaded configuration.
pub fn parse_relation(name: &str, loaded: &Loaded) -> Result<Relation, CliError> {
    let rel = match name {
        "collinear" => Relation::CollinearPoints3D,
        "hyperplanes" => match &loaded.hyperplanes {
            Some(hs) => Relation::PointsOnGivenHyperplanes(hs.clone()),
            None => {
                return Err(CliError::Mismatch(
                    "relation hyperplanes needs a hyperplanes file listing hyperplanes".into(),
                ))
            }
        },
        "intersection" => Relation::LineIntersection(LineMode::Affine),
        "intersection-projective" => Relation::LineIntersection(LineMode::Projective),
        "concurrent" => Relation::ConcurrentLines,
        "stabbed" => Relation::StabbedLines,
        "co-regulus" => Relation::CoRegulusLines,
        "concyclic" => Relation::ConcyclicPoints2D,
        other => {
            return Err(CliError::Parse(format!(
                "unknown relation {other:?}; expected one of {}",
                RELATION_NAMES.join(", ")
            )))
        }
    };
    if rel.expected_kind() != loaded.config.kind() {
        return Err(CliError::Mismatch(format!(
            "relation {} needs a {} configuration, got {}",
            rel.name(),
            rel.expected_kind(),
            loaded.config.kind()
        )));
    }
    Ok(rel)
}

pub fn thread_count() -> Result<usize, CliError> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::Parse(format!("{THREADS_VAR} must be a positive integer"))),
        Err(_) => Ok(1),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "linesramsey",
    version,
    about = "Ramsey-type extraction for points, lines and reguli"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a configuration file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output path (stdout when absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Extract a clique or independent set and print its certificate.
    Extract {
        config: PathBuf,
        #[arg(short, long)]
        relation: String,
        /// Clique threshold factor, a rational `p/q`.
        #[arg(long, default_value = "1")]
        factor: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_TRIALS)]
        max_trials: u64,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Append the report row to this CSV file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Instance label for the report row.
        #[arg(long)]
        instance: Option<String>,
        /// Fill the edge-count identity columns.
        #[arg(long)]
        lemma1: bool,
        /// Add a wall-time column.
        #[arg(long)]
        timing: bool,
    },
    /// Re-check a certificate against a configuration.
    Verify { config: PathBuf, cert: PathBuf },
    /// Run an experiment manifest and write a CSV report.
    Experiment {
        manifest: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Tabulate the reference incidence curves.
    Bounds {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        n: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        m: u64,
        #[arg(long, default_value_t = 0.0)]
        s: f64,
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[arg(long, default_value_t = 5)]
        kmax: u64,
        #[arg(long, default_value_t = 1.0)]
        constant: f64,
        /// Restrict to one curve.
        #[arg(long)]
        curve: Option<String>,
    },
    /// Exhaustive clique and independence numbers of a small instance.
    Oracle {
        config: PathBuf,
        #[arg(short, long)]
        relation: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random integer points.
    RandomPoints {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        range: i64,
        #[arg(long)]
        max_collinear: Option<usize>,
        #[arg(long)]
        max_coplanar: Option<usize>,
    },
    /// Random lines through pairs of integer points.
    RandomLines {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        range: i64,
        #[arg(long)]
        pairwise_skew: bool,
        #[arg(long)]
        no_three_concurrent: bool,
        #[arg(long)]
        generic_reguli: bool,
    },
    /// Random pairwise skew lines.
    SkewLines {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        range: i64,
        #[arg(long)]
        generic_reguli: bool,
    },
    /// The `a x b` integer grid in the plane `z = 0`.
    Grid {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// `k` lines in each of `k` parallel planes.
    PlanesGrid {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// `k^2` ruling lines on each of `k` reguli.
    RuledReguli {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl GenKind {
    pub fn spec(&self) -> GenSpec {
        match *self {
            GenKind::RandomPoints {
                n,
                dim,
                seed,
                range,
                max_collinear,
                max_coplanar,
            } => GenSpec::RandomPoints {
                n,
                dim,
                seed,
                range,
                max_collinear,
                max_coplanar,
            },
            GenKind::RandomLines {
                n,
                seed,
                range,
                pairwise_skew,
                no_three_concurrent,
                generic_reguli,
            } => GenSpec::RandomLines {
                n,
                seed,
                range,
                pairwise_skew,
                no_three_concurrent,
                generic_reguli,
            },
            GenKind::SkewLines {
                n,
                seed,
                range,
                generic_reguli,
            } => GenSpec::RandomLines {
                n,
                seed,
                range,
                pairwise_skew: true,
                no_three_concurrent: false,
                generic_reguli,
            },
            GenKind::Grid { a, b } => GenSpec::GridPoints { a, b },
            GenKind::PlanesGrid { k, seed } => GenSpec::ParallelPlanesGrid { k, seed },
            GenKind::RuledReguli { k, seed } => GenSpec::RuledReguli { k, seed },
        }
    }
}

pub fn generate_file(spec: &GenSpec) -> Result<String, CliError> {
    let loaded = Loaded {
        config: generate(spec)?,
        hyperplanes: None,
        provenance: Some(spec.clone()),
    };
    serialize_config(&loaded)
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn append_report(path: &Path, header: Vec<String>, row: Vec<String>) -> Result<(), CliError> {
    let fresh = std::fs::metadata(path).map_or(true, |m| m.len() == 0);
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let mut w = csv::Writer::from_writer(file);
    if fresh {
        w.write_record(header)?;
    }
    w.write_record(row)?;
    w.flush()?;
    Ok(())
}

/// Runs one command; `out` receives everything destined for stdout.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { kind, output } => {
            let text = generate_file(&kind.spec())?;
            write_or_print(output.as_deref(), &text, out)
        }
        Command::Extract {
            config,
            relation,
            factor,
            seed,
            max_trials,
            cert,
            report,
            instance,
            lemma1,
            timing,
        } => {
            let loaded = read_config(&config)?;
            let rel = parse_relation(&relation, &loaded)?;
            let params = ExtractParams {
                factor: parse_rat(&factor)?,
                seed,
                max_trials,
            };
            let start = Instant::now();
            let ex = extract(&rel, &loaded.config, &params)?;
            let wall = start.elapsed();
            let text = cert_io::serialize_certificate(&ex.certificate);
            write_or_print(cert.as_deref(), &text, out)?;
            let counts = lemma1
                .then(|| lemma1_identity_check(&edge_witnesses(&rel, &ex.witness_map), rel.t()));
            let label = instance.unwrap_or_else(|| config.display().to_string());
            let row = report::report_row(
                &label,
                &rel,
                &loaded.config,
                &ex,
                counts,
                timing.then_some(wall),
            );
            match report {
                Some(p) => append_report(&p, report::header(timing), row)?,
                None => {
                    let mut w = csv::Writer::from_writer(std::io::stderr());
                    w.write_record(report::header(timing))?;
                    w.write_record(row)?;
                    w.flush()?;
                }
            }
            Ok(())
        }
        Command::Verify { config, cert } => {
            let loaded = read_config(&config)?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| CliError::Parse(format!("{}: {e}", cert.display())))?;
            let file = cert_io::parse_certificate_file(&text)?;
            let rel = parse_relation(&file.relation, &loaded)?;
            let c = cert_io::certificate_from_file(&file, rel)?;
            if verify_certificate(&c, &loaded.config) {
                writeln!(out, "ok")?;
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "{} does not verify",
                    cert.display()
                )))
            }
        }
        Command::Experiment {
            manifest,
            output,
            timing,
        } => {
            let threads = thread_count()?;
            match output {
                Some(p) => {
                    let f = std::fs::File::create(&p)?;
                    experiment::run_manifest_file(&manifest, f, timing, threads)
                }
                None => experiment::run_manifest_file(&manifest, out, timing, threads),
            }
        }
        Command::Bounds {
            n,
            m,
            s,
            d,
            kmax,
            constant,
            curve,
        } => {
            let curves: Vec<curves::ReferenceCurve> = match curve {
                Some(c) => vec![c.parse()?],
                None => curves::ALL_CURVES.to_vec(),
            };
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "curve", "formula", "n", "m", "k", "s", "d", "constant", "value",
            ])?;
            for c in curves {
                for &nn in &n {
                    for k in 2..=kmax.max(2) {
                        let p = curves::CurveParams {
                            n: nn as f64,
                            m: m as f64,
                            k: k as f64,
                            s,
                            d: d as f64,
                        };
                        w.write_record([
                            c.name().to_string(),
                            c.formula().to_string(),
                            nn.to_string(),
                            m.to_string(),
                            k.to_string(),
                            curves::sig6(s),
                            d.to_string(),
                            curves::sig6(constant),
                            curves::sig6(c.eval(&p, constant)),
                        ])?;
                    }
                }
            }
            w.flush()?;
            Ok(())
        }
        Command::Oracle { config, relation } => {
            let loaded = read_config(&config)?;
            let rel = parse_relation(&relation, &loaded)?;
            let omega = brute_omega(&rel, &loaded.config)?;
            let h = build_degeneracy_hypergraph(&rel, &loaded.config)?;
            let alpha = brute_alpha(&h)?;
            let v = serde_json::json!({
                "relation": rel.name(),
                "n": loaded.config.len(),
                "t": rel.t(),
                "m": h.m(),
                "omega": omega.size,
                "omega_members": omega.members,
                "alpha": alpha,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializes")
            )?;
            Ok(())
        }
    }
}
