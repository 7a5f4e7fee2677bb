//! Degenerate subsets of configurations, enumerated through the witnesses
//! that certify them, and the hypergraphs they induce.

mod enumerate;
mod stabbing;
mod witness;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::hypergraph::{subsets, Graph, Hypergraph};
use crate::kernel::linalg::canonical_ints;
use crate::kernel::{HPoint3, KernelError, Line3, Point2, Scalar};

pub use enumerate::{
    enum_circle_witnesses, enum_collinear_witnesses, enum_concurrency_witnesses,
    enum_hyperplane_witnesses, enum_plane_witnesses, enum_projective_concurrency_witnesses,
    enum_regulus_witnesses, hyperplane_eval, intersection_graph, regulus_rulings,
};
pub use stabbing::enum_transversal_witnesses;
pub use witness::{Witness, WitnessEntry, WitnessMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineMode {
    Affine,
    Projective,
}

/// A finite set of hyperplanes `c0 + c1 x1 + ... + cd xd = 0` in `R^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperplaneSet {
    pub dim: usize,
    pub hyperplanes: Vec<Vec<BigInt>>,
}

impl HyperplaneSet {
    pub fn new(dim: usize, hyperplanes: &[Vec<Scalar>]) -> Result<Self, IncidenceError> {
        let mut hs = Vec::with_capacity(hyperplanes.len());
        for h in hyperplanes {
            if h.len() != dim + 1 {
                return Err(IncidenceError::DimensionMismatch {
                    expected: dim + 1,
                    found: h.len(),
                });
            }
            hs.push(canonical_ints(h).ok_or(KernelError::ZeroVector)?);
        }
        Ok(HyperplaneSet {
            dim,
            hyperplanes: hs,
        })
    }
}

/// An incidence relation together with its uniformity `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    CollinearPoints3D,
    PointsOnGivenHyperplanes(HyperplaneSet),
    LineIntersection(LineMode),
    ConcurrentLines,
    StabbedLines,
    CoRegulusLines,
    ConcyclicPoints2D,
}

impl Relation {
    pub fn t(&self) -> usize {
        match self {
            Relation::CollinearPoints3D => 3,
            Relation::PointsOnGivenHyperplanes(h) => h.dim + 1,
            Relation::LineIntersection(_) => 2,
            Relation::ConcurrentLines => 3,
            Relation::StabbedLines => 6,
            Relation::CoRegulusLines => 4,
            Relation::ConcyclicPoints2D => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Relation::CollinearPoints3D => "collinear",
            Relation::PointsOnGivenHyperplanes(_) => "hyperplanes",
            Relation::LineIntersection(LineMode::Affine) => "intersection",
            Relation::LineIntersection(LineMode::Projective) => "intersection-projective",
            Relation::ConcurrentLines => "concurrent",
            Relation::StabbedLines => "stabbed",
            Relation::CoRegulusLines => "co-regulus",
            Relation::ConcyclicPoints2D => "concyclic",
        }
    }

    pub fn expected_kind(&self) -> ConfigKind {
        match self {
            Relation::CollinearPoints3D => ConfigKind::Points3,
            Relation::PointsOnGivenHyperplanes(_) => ConfigKind::PointsD,
            Relation::ConcyclicPoints2D => ConfigKind::Points2,
            _ => ConfigKind::Lines3,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    Points2,
    Points3,
    Lines3,
    PointsD,
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigKind::Points2 => "points2d",
            ConfigKind::Points3 => "points3d",
            ConfigKind::Lines3 => "lines3d",
            ConfigKind::PointsD => "hyperplanes",
        })
    }
}

/// A configuration of geometric elements, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Config {
    Points2(Vec<Point2>),
    Points3(Vec<HPoint3>),
    Lines3(Vec<Line3>),
    /// Affine points of `R^dim` as coordinate vectors.
    PointsD {
        dim: usize,
        points: Vec<Vec<Scalar>>,
    },
}

impl Config {
    pub fn len(&self) -> usize {
        match self {
            Config::Points2(v) => v.len(),
            Config::Points3(v) => v.len(),
            Config::Lines3(v) => v.len(),
            Config::PointsD { points, .. } => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> ConfigKind {
        match self {
            Config::Points2(_) => ConfigKind::Points2,
            Config::Points3(_) => ConfigKind::Points3,
            Config::Lines3(_) => ConfigKind::Lines3,
            Config::PointsD { .. } => ConfigKind::PointsD,
        }
    }

    /// The sub-configuration on `members`, re-indexed in the given order.
    pub fn restrict(&self, members: &[usize]) -> Config {
        fn pick<T: Clone>(v: &[T], m: &[usize]) -> Vec<T> {
            m.iter().map(|&i| v[i].clone()).collect()
        }
        match self {
            Config::Points2(v) => Config::Points2(pick(v, members)),
            Config::Points3(v) => Config::Points3(pick(v, members)),
            Config::Lines3(v) => Config::Lines3(pick(v, members)),
            Config::PointsD { dim, points } => Config::PointsD {
                dim: *dim,
                points: pick(points, members),
            },
        }
    }

    pub fn lines(&self) -> Option<&[Line3]> {
        match self {
            Config::Lines3(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IncidenceError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("configuration contains duplicate points")]
    DuplicatePoints,
    #[error("configuration contains duplicate lines")]
    DuplicateLines,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("relation {relation} needs a {expected} configuration, got {found}")]
    ConfigMismatch {
        relation: &'static str,
        expected: ConfigKind,
        found: ConfigKind,
    },
}

pub(crate) fn require_distinct<T: Eq + std::hash::Hash>(
    items: &[T],
    err: IncidenceError,
) -> Result<(), IncidenceError> {
    let mut seen = HashSet::with_capacity(items.len());
    if items.iter().all(|x| seen.insert(x)) {
        Ok(())
    } else {
        Err(err)
    }
}

fn mismatch(relation: &Relation, config: &Config) -> IncidenceError {
    IncidenceError::ConfigMismatch {
        relation: relation.name(),
        expected: relation.expected_kind(),
        found: config.kind(),
    }
}

/// The relation's witness map over the whole configuration.
///
/// For line intersection this holds the point witnesses (affine points, or
/// all projective points in projective mode) followed by plane witnesses.
pub fn witness_map(relation: &Relation, config: &Config) -> Result<WitnessMap, IncidenceError> {
    match (relation, config) {
        (Relation::CollinearPoints3D, Config::Points3(p)) => enum_collinear_witnesses(p),
        (Relation::PointsOnGivenHyperplanes(hs), Config::PointsD { dim, points }) => {
            enum_hyperplane_witnesses(*dim, points, hs)
        }
        (Relation::LineIntersection(mode), Config::Lines3(l)) => {
            let points = match mode {
                LineMode::Affine => enum_concurrency_witnesses(l)?,
                LineMode::Projective => enum_projective_concurrency_witnesses(l)?,
            };
            let planes = enum_plane_witnesses(l)?;
            Ok(WitnessMap::from_entries(
                points.entries.into_iter().chain(planes.entries),
            ))
        }
        (Relation::ConcurrentLines, Config::Lines3(l)) => enum_concurrency_witnesses(l),
        (Relation::StabbedLines, Config::Lines3(l)) => enum_transversal_witnesses(l),
        (Relation::CoRegulusLines, Config::Lines3(l)) => enum_regulus_witnesses(l),
        (Relation::ConcyclicPoints2D, Config::Points2(p)) => enum_circle_witnesses(p),
        _ => Err(mismatch(relation, config)),
    }
}

/// All degenerate `t`-subsets, one per subset, each tagged with the index of
/// a witness entry covering it.
pub fn build_degeneracy_hypergraph(
    relation: &Relation,
    config: &Config,
) -> Result<Hypergraph, IncidenceError> {
    let map = witness_map(relation, config)?;
    Ok(hypergraph_from_map(relation, config.len(), &map))
}

/// Whether entries with this witness contribute hypergraph edges.
pub fn carries_edges(relation: &Relation, witness: &Witness) -> bool {
    match relation {
        // Coplanar lines are not pairwise incident in affine mode, and in
        // projective mode every coplanar pair already meets in a point.
        Relation::LineIntersection(_) => matches!(witness, Witness::Point(_)),
        _ => true,
    }
}

/// The entries of `map` that contribute hypergraph edges.
pub fn edge_witnesses(relation: &Relation, map: &WitnessMap) -> WitnessMap {
    WitnessMap::from_entries(
        map.entries
            .iter()
            .filter(|e| carries_edges(relation, &e.witness))
            .cloned(),
    )
}

pub fn hypergraph_from_map(relation: &Relation, n: usize, map: &WitnessMap) -> Hypergraph {
    let t = relation.t();
    let edges = map
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| carries_edges(relation, &e.witness))
        .flat_map(|(k, e)| {
            subsets(&e.members, t)
                .into_iter()
                .map(move |s| (s, Some(k)))
        });
    Hypergraph::with_refs(n, t, edges)
}

/// The intersection graph of a configuration of lines, checked against the
/// relation's expectations.
pub fn intersection_graph_of(config: &Config, mode: LineMode) -> Result<Graph, IncidenceError> {
    match config {
        Config::Lines3(l) => intersection_graph(l, mode),
        other => Err(IncidenceError::ConfigMismatch {
            relation: "intersection",
            expected: ConfigKind::Lines3,
            found: other.kind(),
        }),
    }
}
