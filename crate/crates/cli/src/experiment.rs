//! Experiment manifests.
//!
//! ```json
//! { "version": 1, "factor": "1", "seed": 0, "lemma1": true,
//!   "instances": [
//!     { "id": "skew", "gen": { "kind": "random-lines", "n": 30, "seed": 0,
//!                              "pairwise_skew": true },
//!       "repeat": 10, "relations": ["stabbed"] },
//!     { "id": "grid", "config": "grid.json", "relations": ["collinear"] } ] }
//! ```
//!
//! `repeat` expands an instance into copies whose generator seeds are
//! `seed, seed + 1, ...`, labelled `id-0, id-1, ...`. Config paths are
//! relative to the manifest. Rows follow manifest order.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use linesramsey::edge_witnesses;
use linesramsey::generators::{generate, GenSpec};
use linesramsey::ramsey::{extract, lemma1_identity_check, ExtractParams, DEFAULT_MAX_TRIALS};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config_io::{parse_rat, read_config, Loaded};
use crate::{parse_relation, report, CliError};

pub const MANIFEST_VERSION: u32 = 1;

fn one() -> String {
    "1".into()
}

fn default_trials() -> u64 {
    DEFAULT_MAX_TRIALS
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: u32,
    #[serde(default = "one")]
    pub factor: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_trials")]
    pub max_trials: u64,
    #[serde(default)]
    pub lemma1: bool,
    #[serde(default)]
    pub instances: Vec<InstanceSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen: Option<GenSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repeat: Option<u64>,
    pub relations: Vec<String>,
}

enum Source {
    Gen(GenSpec),
    File(PathBuf),
}

struct Job {
    instance: String,
    source: Source,
    relation: String,
}

fn expand(m: &Manifest, base: &Path) -> Result<Vec<Job>, CliError> {
    let mut jobs = Vec::new();
    for inst in &m.instances {
        let sources: Vec<(String, Source)> = match (&inst.gen, &inst.config) {
            (Some(g), None) => match inst.repeat {
                Some(r) => {
                    let s0 = g.seed().unwrap_or(0);
                    (0..r)
                        .map(|i| (format!("{}-{i}", inst.id), Source::Gen(g.with_seed(s0 + i))))
                        .collect()
                }
                None => vec![(inst.id.clone(), Source::Gen(g.clone()))],
            },
            (None, Some(p)) if inst.repeat.is_none() => {
                vec![(inst.id.clone(), Source::File(base.join(p)))]
            }
            _ => {
                return Err(CliError::Parse(format!(
                    "instance {}: give exactly one of gen or config (repeat needs gen)",
                    inst.id
                )))
            }
        };
        for (id, src) in sources {
            for rel in &inst.relations {
                let source = match &src {
                    Source::Gen(g) => Source::Gen(g.clone()),
                    Source::File(p) => Source::File(p.clone()),
                };
                jobs.push(Job {
                    instance: id.clone(),
                    source,
                    relation: rel.clone(),
                });
            }
        }
    }
    Ok(jobs)
}

fn run_job(
    job: &Job,
    m: &Manifest,
    params: &ExtractParams,
    timing: bool,
) -> Result<Vec<String>, CliError> {
    let loaded = match &job.source {
        Source::Gen(g) => Loaded {
            config: generate(g)?,
            hyperplanes: None,
            provenance: Some(g.clone()),
        },
        Source::File(p) => read_config(p)?,
    };
    let rel = parse_relation(&job.relation, &loaded)?;
    let start = Instant::now();
    let ex = extract(&rel, &loaded.config, params)?;
    let wall = start.elapsed();
    let counts = m
        .lemma1
        .then(|| lemma1_identity_check(&edge_witnesses(&rel, &ex.witness_map), rel.t()));
    Ok(report::report_row(
        &job.instance,
        &rel,
        &loaded.config,
        &ex,
        counts,
        timing.then_some(wall),
    ))
}

/// Writes the header and one row per (instance, relation). Rows before the
/// first failing job are written and flushed before the error is returned.
pub fn run_manifest<W: Write>(
    m: &Manifest,
    base: &Path,
    out: W,
    timing: bool,
    threads: usize,
) -> Result<(), CliError> {
    if m.version != MANIFEST_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported manifest version {}",
            m.version
        )));
    }
    let params = ExtractParams {
        factor: parse_rat(&m.factor)?,
        seed: m.seed,
        max_trials: m.max_trials,
    };
    let jobs = expand(m, base)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Other(e.to_string()))?;
    let rows: Vec<Result<Vec<String>, CliError>> = pool.install(|| {
        jobs.par_iter()
            .map(|j| run_job(j, m, &params, timing))
            .collect()
    });
    let mut w = csv::Writer::from_writer(out);
    w.write_record(report::header(timing))?;
    for (job, row) in jobs.iter().zip(rows) {
        match row {
            Ok(r) => w.write_record(r)?,
            Err(e) => {
                w.flush()?;
                return Err(match e {
                    CliError::Parse(s) => CliError::Parse(format!("{}: {s}", job.instance)),
                    CliError::Mismatch(s) => CliError::Mismatch(format!("{}: {s}", job.instance)),
                    CliError::Verification(s) => {
                        CliError::Verification(format!("{}: {s}", job.instance))
                    }
                    CliError::Other(s) => CliError::Other(format!("{}: {s}", job.instance)),
                });
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("manifest: {e}")))
}

pub fn run_manifest_file<W: Write>(
    path: &Path,
    out: W,
    timing: bool,
    threads: usize,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let m = parse_manifest(&text)?;
    let base = path.parent().unwrap_or(Path::new("."));
    run_manifest(&m, base, out, timing, threads)
}
