use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::witness::{Witness, WitnessEntry, WitnessMap};
use super::{require_distinct, HyperplaneSet, IncidenceError, LineMode};
use crate::hypergraph::Graph;
use crate::kernel::{
    circle_through, classify_pair, klein_form, plane_of_lines, quadric_closed_form, HPoint3,
    KernelError, Line3, PairClass, Point2, ReguliBase, Scalar,
};

fn collect<K: Ord + Clone>(
    groups: HashMap<K, Vec<usize>>,
    wrap: impl Fn(K) -> Witness,
) -> WitnessMap {
    let sorted: BTreeMap<K, Vec<usize>> = groups.into_iter().collect();
    WitnessMap::from_entries(
        sorted
            .into_iter()
            .map(|(k, m)| WitnessEntry::new(wrap(k), m)),
    )
}

/// Every line spanned by two of the points, with all points on it.
pub fn enum_collinear_witnesses(points: &[HPoint3]) -> Result<WitnessMap, IncidenceError> {
    require_distinct(points, IncidenceError::DuplicatePoints)?;
    let mut groups: HashMap<Line3, Vec<usize>> = HashMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let l = Line3::through(&points[i], &points[j])?;
            let e = groups.entry(l).or_default();
            e.push(i);
            e.push(j);
        }
    }
    Ok(collect(groups, Witness::Line))
}

fn concurrency(lines: &[Line3], projective: bool) -> Result<WitnessMap, IncidenceError> {
    require_distinct(lines, IncidenceError::DuplicateLines)?;
    let mut groups: HashMap<HPoint3, Vec<usize>> = HashMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = match classify_pair(&lines[i], &lines[j]) {
                PairClass::Intersecting(p) => p,
                PairClass::Parallel if projective => {
                    let d = lines[i].direction();
                    HPoint3::ideal(d)?
                }
                _ => continue,
            };
            let e = groups.entry(p).or_default();
            e.push(i);
            e.push(j);
        }
    }
    Ok(collect(groups, Witness::Point))
}

/// Every affine point where two or more lines meet, with the full bundle.
pub fn enum_concurrency_witnesses(lines: &[Line3]) -> Result<WitnessMap, IncidenceError> {
    concurrency(lines, false)
}

/// As [`enum_concurrency_witnesses`], also counting parallel classes as
/// bundles through their common point at infinity.
pub fn enum_projective_concurrency_witnesses(
    lines: &[Line3],
) -> Result<WitnessMap, IncidenceError> {
    concurrency(lines, true)
}

/// Every plane containing two or more lines, with its lines split into
/// parallel classes.
pub fn enum_plane_witnesses(lines: &[Line3]) -> Result<WitnessMap, IncidenceError> {
    require_distinct(lines, IncidenceError::DuplicateLines)?;
    let mut groups = HashMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = plane_of_lines(&lines[i], &lines[j])? {
                let e: &mut Vec<usize> = groups.entry(p).or_default();
                e.push(i);
                e.push(j);
            }
        }
    }
    let mut map = collect(groups, Witness::Plane);
    for e in map.entries.iter_mut() {
        let mut classes: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
        for &i in &e.members {
            let d = lines[i]
                .canonical_direction()
                .expect("input lines are affine");
            classes.entry(d).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
        classes.sort();
        e.parallel_classes = Some(classes);
    }
    Ok(map)
}

fn skew_matrix(lines: &[Line3]) -> Vec<Vec<bool>> {
    let n = lines.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = !klein_form(&lines[i], &lines[j]).is_zero();
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    m
}

/// Maximal sets of pairwise skew lines lying in one ruling of a regulus,
/// each listed once. Lines that are not skew to the rest are ignored.
pub fn regulus_rulings(lines: &[Line3]) -> Vec<Vec<usize>> {
    let n = lines.len();
    let skew = skew_matrix(lines);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !skew[i][j] {
                continue;
            }
            let base = ReguliBase::new(&lines[i], &lines[j]);
            let mut classes: HashMap<_, Vec<usize>> = HashMap::new();
            for k in (0..n).filter(|&k| k != i && k != j && skew[i][k] && skew[j][k]) {
                classes.entry(base.key(&lines[k])).or_default().push(k);
            }
            for (_, class) in classes {
                // Emit each ruling from its two lowest members only.
                if class[0] > j {
                    let mut members = vec![i, j];
                    members.extend(class);
                    out.push(members);
                }
            }
        }
    }
    out.sort();
    out
}

/// Every regulus through three of the (pairwise skew) lines, with all the
/// lines it contains.
pub fn enum_regulus_witnesses(lines: &[Line3]) -> Result<WitnessMap, IncidenceError> {
    require_distinct(lines, IncidenceError::DuplicateLines)?;
    let skew = skew_matrix(lines);
    for (i, row) in skew.iter().enumerate() {
        if row.iter().enumerate().any(|(j, &s)| i != j && !s) {
            return Err(KernelError::NotPairwiseSkew.into());
        }
    }
    let entries = regulus_rulings(lines).into_iter().map(|m| {
        let q = quadric_closed_form(&lines[m[0]], &lines[m[1]], &lines[m[2]]);
        WitnessEntry::new(Witness::RegulusRuling(q), m)
    });
    Ok(WitnessMap::from_entries(entries))
}

/// Every proper circle through three or more points.
pub fn enum_circle_witnesses(points: &[Point2]) -> Result<WitnessMap, IncidenceError> {
    require_distinct(points, IncidenceError::DuplicatePoints)?;
    let n = points.len();
    let mut groups = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(c) = circle_through(&points[i], &points[j], &points[k])? {
                    let e: &mut Vec<usize> = groups.entry(c).or_default();
                    e.extend([i, j, k]);
                }
            }
        }
    }
    Ok(collect(groups, Witness::Circle))
}

/// `c0 + c1 x1 + ... + cd xd` at a point.
pub fn hyperplane_eval(h: &[BigInt], x: &[Scalar]) -> Scalar {
    let mut v = Scalar::from_integer(h[0].clone());
    for (c, xi) in h[1..].iter().zip(x) {
        v += Scalar::from_integer(c.clone()) * xi;
    }
    v
}

/// For each given hyperplane, the points lying on it (possibly none).
pub fn enum_hyperplane_witnesses(
    dim: usize,
    points: &[Vec<Scalar>],
    hyperplanes: &HyperplaneSet,
) -> Result<WitnessMap, IncidenceError> {
    if hyperplanes.dim != dim {
        return Err(IncidenceError::DimensionMismatch {
            expected: dim,
            found: hyperplanes.dim,
        });
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(IncidenceError::DimensionMismatch {
            expected: dim,
            found: p.len(),
        });
    }
    let entries = hyperplanes.hyperplanes.iter().map(|h| {
        let members = points
            .iter()
            .enumerate()
            .filter(|(_, p)| hyperplane_eval(h, p).is_zero())
            .map(|(i, _)| i)
            .collect();
        WitnessEntry::new(Witness::Hyperplane(h.clone()), members)
    });
    Ok(WitnessMap::from_entries(entries))
}

/// Affine mode joins lines that meet in a point; projective mode also joins
/// parallel lines.
pub fn intersection_graph(lines: &[Line3], mode: LineMode) -> Result<Graph, IncidenceError> {
    require_distinct(lines, IncidenceError::DuplicateLines)?;
    let n = lines.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let joined = match mode {
                LineMode::Affine => {
                    matches!(
                        classify_pair(&lines[i], &lines[j]),
                        PairClass::Intersecting(_)
                    )
                }
                LineMode::Projective => klein_form(&lines[i], &lines[j]).is_zero(),
            };
            if joined {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges))
}
