//! Two-phase extraction: a large degenerate subset if one exists, otherwise
//! a large independent set of the degeneracy hypergraph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::bounds::{
    integer_ceil, meets_spencer, meets_turan, spencer_bound, spencer_sparse, turan_bound,
    RootBound, Target,
};
use super::certificate::{verify_certificate, Certificate, Outcome};
use super::spencer::{spencer_is, DEFAULT_MAX_TRIALS};
use super::turan::turan_is;
use super::RamseyError;
use crate::hypergraph::{subsets, Hypergraph};
use crate::incidence::{
    enum_plane_witnesses, hypergraph_from_map, regulus_rulings, witness_map, Config, LineMode,
    Relation, Witness, WitnessEntry, WitnessMap,
};
use crate::kernel::{plane_through, Line3, Plane3, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractParams {
    /// A clique is returned when its size is at least `factor * target(n)`.
    pub factor: Scalar,
    pub seed: u64,
    pub max_trials: u64,
}

impl Default for ExtractParams {
    fn default() -> Self {
        ExtractParams {
            factor: Scalar::one(),
            seed: 0,
            max_trials: DEFAULT_MAX_TRIALS,
        }
    }
}

/// Clique-size target for each relation.
pub fn target_for(relation: &Relation) -> Target {
    match relation {
        Relation::LineIntersection(LineMode::Affine) => Target::CUBE_ROOT,
        Relation::CoRegulusLines | Relation::ConcyclicPoints2D => Target::TWO_THIRDS,
        _ => Target::SQRT,
    }
}

/// Where the independent set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsSource {
    Turan,
    ParallelClass,
    Ruling,
    Spencer,
}

impl IsSource {
    pub fn name(&self) -> &'static str {
        match self {
            IsSource::Turan => "turan",
            IsSource::ParallelClass => "parallel-class",
            IsSource::Ruling => "ruling",
            IsSource::Spencer => "spencer",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub relation: &'static str,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    /// `n^2/(2m+n)` for graphs.
    pub turan: Option<Scalar>,
    /// The dense-case hypergraph guarantee, when it applies.
    pub spencer: Option<RootBound>,
    /// Smallest independent-set size the applicable guarantee allows.
    pub guarantee_ceil: BigInt,
    pub alpha_extracted: usize,
    pub alpha_source: IsSource,
    pub guarantee_met: bool,
    /// Largest degenerate subset found through witnesses.
    pub omega_witness: usize,
    /// Whether `omega_witness` is the exact largest degenerate subset.
    pub omega_exact: bool,
    pub target: Target,
    pub factor: Scalar,
    /// Smallest clique size accepted in phase one.
    pub target_ceil: BigInt,
    pub target_display: f64,
    pub clique_returned: bool,
    pub achieved: usize,
    /// `P_j`: witnesses with exactly `j` members.
    pub profile: BTreeMap<usize, usize>,
    /// Most elements in one plane, for the relations whose clique targets
    /// assume at most `n / ln n` of them; annotation only.
    pub max_coplanar: Option<usize>,
}

impl BoundReport {
    /// Whether `max_coplanar <= n / ln n` (display arithmetic).
    pub fn coplanar_condition(&self) -> Option<bool> {
        let s = self.max_coplanar?;
        if self.n < 2 {
            return Some(true);
        }
        Some(s as f64 <= self.n as f64 / (self.n as f64).ln())
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub certificate: Certificate,
    pub report: BoundReport,
    pub witness_map: WitnessMap,
    pub hypergraph: Hypergraph,
}

/// The largest clique available from the witness map.
fn phase_one(relation: &Relation, map: &WitnessMap) -> Option<(Witness, Vec<usize>)> {
    let candidates = map
        .entries
        .iter()
        .map(|e: &WitnessEntry| match (relation, &e.witness) {
            (Relation::LineIntersection(LineMode::Affine), Witness::Plane(_)) => {
                let classes = e
                    .parallel_classes
                    .as_ref()
                    .expect("plane entries carry classes");
                let mut m: Vec<usize> = classes.iter().map(|c| c[0]).collect();
                m.sort_unstable();
                (e.witness.clone(), m)
            }
            _ => (e.witness.clone(), e.members.clone()),
        });
    // Largest first; lowest witness on ties.
    candidates.fold(None, |best: Option<(Witness, Vec<usize>)>, c| match &best {
        Some(b) if b.1.len() >= c.1.len() => best,
        _ => Some(c),
    })
}

fn largest_parallel_class(lines: &[Line3]) -> Vec<usize> {
    let mut classes: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    for (i, l) in lines.iter().enumerate() {
        if let Some(d) = l.canonical_direction() {
            classes.entry(d).or_default().push(i);
        }
    }
    classes.into_values().fold(
        Vec::new(),
        |best, c| if c.len() > best.len() { c } else { best },
    )
}

fn largest_ruling(lines: &[Line3]) -> Vec<usize> {
    regulus_rulings(lines).into_iter().fold(
        Vec::new(),
        |best, c| if c.len() > best.len() { c } else { best },
    )
}

fn independent_set(
    relation: &Relation,
    config: &Config,
    h: &Hypergraph,
    params: &ExtractParams,
) -> Result<(Vec<usize>, IsSource), RamseyError> {
    if h.t > 2 {
        return Ok((
            spencer_is(h, params.seed, params.max_trials)?,
            IsSource::Spencer,
        ));
    }
    let mut best = (turan_is(&h.to_graph()), IsSource::Turan);
    if let (Relation::LineIntersection(LineMode::Affine), Config::Lines3(lines)) =
        (relation, config)
    {
        for (s, src) in [
            (largest_parallel_class(lines), IsSource::ParallelClass),
            (largest_ruling(lines), IsSource::Ruling),
        ] {
            if s.len() > best.0.len() {
                best = (s, src);
            }
        }
    }
    Ok(best)
}

/// Runs both phases and verifies the returned certificate.
pub fn extract(
    relation: &Relation,
    config: &Config,
    params: &ExtractParams,
) -> Result<Extraction, RamseyError> {
    let n = config.len();
    let t = relation.t();
    let map = witness_map(relation, config)?;
    let h = hypergraph_from_map(relation, n, &map);
    let m = h.m();

    let clique = phase_one(relation, &map);
    let omega = clique.as_ref().map_or(0, |c| c.1.len());
    let target = target_for(relation);
    let clique_ok = omega >= t && target.is_met(omega, n, &params.factor);

    let (is, is_source) = independent_set(relation, config, &h, params)?;

    let (turan, spencer, guarantee_ceil, guarantee_met) = if t == 2 {
        let tb = turan_bound(n, m);
        let ceil = integer_ceil(&tb);
        (Some(tb), None, ceil, meets_turan(is.len(), n, m))
    } else {
        let sp = if m > 0 && !spencer_sparse(n, m, t) {
            spencer_bound(n, m, t)
        } else {
            None
        };
        let ceil = match &sp {
            Some(b) => b.ceil(),
            None if m == 0 => BigInt::from(n),
            None => BigInt::from(n / 2 + 1),
        };
        (None, sp, ceil, meets_spencer(is.len(), n, m, t))
    };

    let target_ceil = {
        let base = num_traits::Pow::pow(&params.factor, target.q as i32)
            * Scalar::from_integer(num_traits::Pow::pow(BigInt::from(n), target.p));
        RootBound::new(base, target.q).ceil()
    };
    let target_display = super::bounds::rational_to_f64(&params.factor) * target.value(n).to_f64();

    let omega_exact = !matches!(relation, Relation::StabbedLines) || omega >= 4;

    let outcome = match clique {
        Some((witness, members)) if clique_ok => Outcome::Clique { witness, members },
        _ => Outcome::IndependentSet {
            members: is.clone(),
        },
    };
    let certificate = Certificate {
        outcome,
        relation: relation.clone(),
        exact: omega_exact,
    };
    if !verify_certificate(&certificate, config) {
        return Err(RamseyError::VerificationFailed);
    }

    let report = BoundReport {
        relation: relation.name(),
        n,
        m,
        t,
        turan,
        spencer,
        guarantee_ceil,
        alpha_extracted: is.len(),
        alpha_source: is_source,
        guarantee_met,
        omega_witness: omega,
        omega_exact,
        target,
        factor: params.factor.clone(),
        target_ceil,
        target_display,
        clique_returned: certificate.is_clique(),
        achieved: certificate.size(),
        profile: map.profile(),
        max_coplanar: max_coplanar(relation, config)?,
    };
    Ok(Extraction {
        certificate,
        report,
        witness_map: map,
        hypergraph: h,
    })
}

fn max_coplanar(relation: &Relation, config: &Config) -> Result<Option<usize>, RamseyError> {
    match (relation, config) {
        (Relation::ConcurrentLines, Config::Lines3(l)) => {
            let most = enum_plane_witnesses(l)?.max_size();
            Ok(Some(most.max(l.len().min(1))))
        }
        (Relation::CollinearPoints3D, Config::Points3(p)) => {
            let n = p.len();
            if n <= 3 {
                return Ok(Some(n));
            }
            let mut planes: HashMap<Plane3, BTreeSet<usize>> = HashMap::new();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if let Some(pl) = plane_through(&p[i], &p[j], &p[k]) {
                            planes.entry(pl).or_default().extend([i, j, k]);
                        }
                    }
                }
            }
            // All points collinear: no plane is spanned, and all are coplanar.
            Ok(Some(planes.values().map(BTreeSet::len).max().unwrap_or(n)))
        }
        _ => Ok(None),
    }
}

/// The two sides of `m = sum_j P_j C(j, t)` for a witness map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeCount {
    /// Distinct `t`-subsets covered by some witness.
    pub direct: u128,
    /// Sum over witnesses of `C(members, t)`.
    pub summed: u128,
}

impl EdgeCount {
    pub fn holds(&self) -> bool {
        self.direct == self.summed
    }
}

pub fn lemma1_identity_check(map: &WitnessMap, t: usize) -> EdgeCount {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in &map.entries {
        seen.extend(subsets(&e.members, t));
    }
    EdgeCount {
        direct: seen.len() as u128,
        summed: map.summed_t_subsets(t),
    }
}
