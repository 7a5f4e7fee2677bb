//! Report rows.
//!
//! Columns, in order: `instance, relation, n, t, m, profile, at_least,
//! omega_witness, alpha_extracted, alpha_source, turan_bound, spencer_bound,
//! guarantee_ceil, guarantee_met, target, target_ceil, outcome, achieved,
//! exact, ratio, sqrt_n, cbrt_n, n_2_3, n_log_1_5, max_coplanar,
//! coplanar_condition, lemma1_direct, lemma1_summed, lemma1_equal, curve,
//! curve_values, witness_is_input`, then `wall_ms` when timing is on.
//!
//! `witness_is_input` is filled for line witnesses of line configurations:
//! `true` when the stabbing line is itself one of the input lines.
//!
//! Profiles are `j:count` lists joined by `;`. Exact bounds are rationals
//! (`p/q`) or `(base)^(1/r)`; `ratio`, the four targets and the curve values
//! are six-significant-digit decimals for display.

use std::collections::BTreeMap;
use std::time::Duration;

use linesramsey::ramsey::{EdgeCount, Extraction};
use linesramsey::{enum_plane_witnesses, Config, Relation, Witness};

use crate::curves::{sig6, CurveParams, ReferenceCurve};

pub const COLUMNS: [&str; 32] = [
    "instance",
    "relation",
    "n",
    "t",
    "m",
    "profile",
    "at_least",
    "omega_witness",
    "alpha_extracted",
    "alpha_source",
    "turan_bound",
    "spencer_bound",
    "guarantee_ceil",
    "guarantee_met",
    "target",
    "target_ceil",
    "outcome",
    "achieved",
    "exact",
    "ratio",
    "sqrt_n",
    "cbrt_n",
    "n_2_3",
    "n_log_1_5",
    "max_coplanar",
    "coplanar_condition",
    "lemma1_direct",
    "lemma1_summed",
    "lemma1_equal",
    "curve",
    "curve_values",
    "witness_is_input",
];

pub const TIMING_COLUMN: &str = "wall_ms";

pub fn header(timing: bool) -> Vec<String> {
    let mut h: Vec<String> = COLUMNS.iter().map(|s| s.to_string()).collect();
    if timing {
        h.push(TIMING_COLUMN.into());
    }
    h
}

fn join_profile(p: &BTreeMap<usize, usize>) -> String {
    p.iter()
        .map(|(j, c)| format!("{j}:{c}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// `P_{>=k}` over the witnesses that count as rich points or curves.
fn rich_profile(relation: &Relation, ex: &Extraction) -> BTreeMap<usize, usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &ex.witness_map.entries {
        let counted = match relation {
            Relation::LineIntersection(_) | Relation::ConcurrentLines => {
                matches!(e.witness, Witness::Point(_))
            }
            _ => true,
        };
        if counted {
            *counts.entry(e.len()).or_insert(0) += 1;
        }
    }
    let mut out = BTreeMap::new();
    let mut acc = 0;
    for (&j, &c) in counts.iter().rev() {
        acc += c;
        out.insert(j, acc);
    }
    out
}

/// The curve bounding `P_{>=k}` for a relation, if any.
fn curve_for(relation: &Relation) -> Option<ReferenceCurve> {
    match relation {
        Relation::CollinearPoints3D => Some(ReferenceCurve::SzemerediTrotter),
        Relation::PointsOnGivenHyperplanes(_) => Some(ReferenceCurve::ElekesToth),
        Relation::LineIntersection(_) | Relation::ConcurrentLines => {
            Some(ReferenceCurve::GuthKatz45)
        }
        Relation::CoRegulusLines => Some(ReferenceCurve::AronovReguli),
        Relation::ConcyclicPoints2D => Some(ReferenceCurve::PachSharir),
        Relation::StabbedLines => None,
    }
}

fn curve_values(
    relation: &Relation,
    config: &Config,
    at_least: &BTreeMap<usize, usize>,
) -> (String, String) {
    let Some(curve) = curve_for(relation) else {
        return (String::new(), String::new());
    };
    let n = config.len() as f64;
    let s = match config {
        Config::Lines3(l) => enum_plane_witnesses(l).map_or(0, |m| m.max_size()) as f64,
        Config::Points2(_) => 3.0,
        _ => 0.0,
    };
    let d = match relation {
        Relation::PointsOnGivenHyperplanes(h) => h.dim as f64,
        _ => 3.0,
    };
    let vals = at_least
        .keys()
        .filter(|&&k| k >= 2)
        .map(|&k| {
            let (c, k) = match (curve, k) {
                (ReferenceCurve::GuthKatz45, 2) => (ReferenceCurve::GuthKatz211, 2.0),
                (c, k) => (c, k as f64),
            };
            let p = CurveParams { n, m: 0.0, k, s, d };
            format!("{}:{}", k, sig6(c.rich(&p, 1.0)))
        })
        .collect::<Vec<_>>()
        .join(";");
    (curve.name().into(), vals)
}

fn witness_is_input(config: &Config, ex: &Extraction) -> Option<bool> {
    match (ex.certificate.witness()?, config) {
        (Witness::Line(w), Config::Lines3(ls)) => Some(ls.contains(w)),
        _ => None,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

pub fn report_row(
    instance: &str,
    relation: &Relation,
    config: &Config,
    ex: &Extraction,
    lemma1: Option<EdgeCount>,
    wall: Option<Duration>,
) -> Vec<String> {
    let r = &ex.report;
    let n = r.n as f64;
    let at_least = rich_profile(relation, ex);
    let (curve, values) = curve_values(relation, config, &at_least);
    let target_value = r.target.value(r.n).to_f64();
    let ratio = if target_value > 0.0 {
        sig6(r.achieved as f64 / target_value)
    } else {
        String::new()
    };
    let n_log = if r.n >= 2 {
        sig6((n / n.ln()).powf(0.2))
    } else {
        String::new()
    };
    let mut row = vec![
        instance.to_string(),
        r.relation.to_string(),
        r.n.to_string(),
        r.t.to_string(),
        r.m.to_string(),
        join_profile(&r.profile),
        join_profile(&at_least),
        r.omega_witness.to_string(),
        r.alpha_extracted.to_string(),
        r.alpha_source.name().to_string(),
        opt(r.turan.as_ref()),
        opt(r.spencer.as_ref()),
        r.guarantee_ceil.to_string(),
        r.guarantee_met.to_string(),
        if r.factor == num_traits::One::one() {
            r.target.label().to_string()
        } else {
            format!("{}*{}", r.factor, r.target.label())
        },
        r.target_ceil.to_string(),
        if r.clique_returned {
            "clique"
        } else {
            "independent-set"
        }
        .to_string(),
        r.achieved.to_string(),
        ex.certificate.exact.to_string(),
        ratio,
        sig6(n.sqrt()),
        sig6(n.cbrt()),
        sig6(n.powf(2.0 / 3.0)),
        n_log,
        opt(r.max_coplanar),
        opt(r.coplanar_condition()),
        opt(lemma1.map(|c| c.direct)),
        opt(lemma1.map(|c| c.summed)),
        opt(lemma1.map(|c| c.holds())),
        curve,
        values,
        opt(witness_is_input(config, ex)),
    ];
    if let Some(w) = wall {
        row.push(format!("{:.3}", w.as_secs_f64() * 1e3));
    }
    row
}
