//! Exhaustive reference computations for small configurations.
//!
//! These never consult witness maps: degeneracy is decided from ranks of
//! coordinate matrices and null spaces directly.

use num_traits::Zero;

use super::RamseyError;
use crate::hypergraph::{subsets, Hypergraph};
use crate::incidence::{hyperplane_eval, Config, LineMode, Relation};
use crate::kernel::linalg::{null_space, rank, to_scalars};
use crate::kernel::{klein_pairing, transversal_system, HPoint3, Line3, Point2, Scalar};

/// Largest configuration the exhaustive routines accept.
pub const BRUTE_LIMIT: usize = 20;

fn check_size(n: usize) -> Result<(), RamseyError> {
    if n > BRUTE_LIMIT {
        Err(RamseyError::TooLarge {
            n,
            limit: BRUTE_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn point_rows(points: &[&HPoint3]) -> Vec<Vec<Scalar>> {
    points.iter().map(|p| to_scalars(p.coords())).collect()
}

/// The common points of a set of lines, as a basis of homogeneous vectors.
fn common_points(lines: &[&Line3]) -> Vec<Vec<Scalar>> {
    let mut planes: Vec<Vec<Scalar>> = Vec::new();
    for l in lines {
        planes.extend(null_space(&point_rows(&[l.gen_a(), l.gen_b()]), 4));
    }
    null_space(&planes, 4)
}

/// Lines through one affine point (sets of at most one line qualify).
fn concurrent_affine(lines: &[&Line3]) -> bool {
    if lines.len() <= 1 {
        return true;
    }
    let pts = common_points(lines);
    pts.len() == 1 && !pts[0][0].is_zero()
}

fn lifted_rank(points: &[&Point2]) -> (usize, Vec<Vec<Scalar>>) {
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            vec![
                &p.x * &p.x + &p.y * &p.y,
                p.x.clone(),
                p.y.clone(),
                Scalar::from_integer(1.into()),
            ]
        })
        .collect();
    (rank(&rows, 4), null_space(&rows, 4))
}

/// True iff the elements of `config` indexed by `set` form a degenerate
/// subset for `relation`, regardless of size. The predicate is hereditary.
pub fn is_degenerate_subset(relation: &Relation, config: &Config, set: &[usize]) -> bool {
    match (relation, config) {
        (Relation::CollinearPoints3D, Config::Points3(p)) => {
            let pts: Vec<&HPoint3> = set.iter().map(|&i| &p[i]).collect();
            rank(&point_rows(&pts), 4) <= 2
        }
        (Relation::PointsOnGivenHyperplanes(hs), Config::PointsD { points, .. }) => {
            hs.hyperplanes.iter().any(|h| {
                set.iter()
                    .all(|&i| hyperplane_eval(h, &points[i]).is_zero())
            })
        }
        (Relation::LineIntersection(mode), Config::Lines3(l)) => {
            set.iter().enumerate().all(|(a, &i)| {
                set[a + 1..].iter().all(|&j| match mode {
                    LineMode::Affine => concurrent_affine(&[&l[i], &l[j]]),
                    LineMode::Projective => common_points(&[&l[i], &l[j]]).len() == 1,
                })
            })
        }
        (Relation::ConcurrentLines, Config::Lines3(l)) => {
            let lines: Vec<&Line3> = set.iter().map(|&i| &l[i]).collect();
            concurrent_affine(&lines)
        }
        (Relation::StabbedLines, Config::Lines3(l)) => {
            let lines: Vec<Line3> = set.iter().map(|&i| l[i].clone()).collect();
            transversal_system(&lines).has_transversal()
        }
        (Relation::CoRegulusLines, Config::Lines3(l)) => {
            let skew = set.iter().enumerate().all(|(a, &i)| {
                set[a + 1..]
                    .iter()
                    .all(|&j| !klein_pairing(l[i].plucker(), l[j].plucker()).is_zero())
            });
            let rows: Vec<Vec<Scalar>> = set.iter().map(|&i| to_scalars(l[i].plucker())).collect();
            skew && rank(&rows, 6) <= 3
        }
        (Relation::ConcyclicPoints2D, Config::Points2(p)) => {
            if set.len() <= 2 {
                return true;
            }
            let pts: Vec<&Point2> = set.iter().map(|&i| &p[i]).collect();
            let (r, ns) = lifted_rank(&pts);
            r == 3 && !ns[0][0].is_zero()
        }
        _ => false,
    }
}

fn check_relation(relation: &Relation, config: &Config) -> Result<(), RamseyError> {
    crate::incidence::witness_map(relation, &config.restrict(&[]))?;
    Ok(())
}

/// Every degenerate `t`-subset, found by testing all of them.
pub fn brute_edges(relation: &Relation, config: &Config) -> Result<Hypergraph, RamseyError> {
    let n = config.len();
    check_size(n)?;
    check_relation(relation, config)?;
    let all: Vec<usize> = (0..n).collect();
    let t = relation.t();
    let edges = subsets(&all, t)
        .into_iter()
        .filter(|s| is_degenerate_subset(relation, config, s));
    Ok(Hypergraph::new(n, t, edges))
}

/// A largest degenerate subset, by exhaustive backtracking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteClique {
    pub size: usize,
    pub members: Vec<usize>,
}

pub fn brute_omega(relation: &Relation, config: &Config) -> Result<BruteClique, RamseyError> {
    let n = config.len();
    check_size(n)?;
    check_relation(relation, config)?;
    let mut best = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        relation: &Relation,
        config: &Config,
        start: usize,
        cur: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        let n = config.len();
        for v in start..n {
            if cur.len() + (n - v) <= best.len() {
                break;
            }
            cur.push(v);
            if is_degenerate_subset(relation, config, cur) {
                rec(relation, config, v + 1, cur, best);
            }
            cur.pop();
        }
    }
    rec(relation, config, 0, &mut cur, &mut best);
    Ok(BruteClique {
        size: best.len(),
        members: best,
    })
}

/// Independence number of a hypergraph, exactly.
pub fn brute_alpha(h: &Hypergraph) -> Result<usize, RamseyError> {
    let n = h.n;
    check_size(n)?;
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
    for e in &h.edges {
        let mask = e.iter().fold(0u32, |m, &v| m | 1 << v);
        for &v in e {
            incident[v].push(mask);
        }
    }
    fn rec(v: usize, n: usize, cur: u32, size: usize, best: &mut usize, inc: &[Vec<u32>]) {
        if size + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = size;
            return;
        }
        let with = cur | 1 << v;
        if inc[v].iter().all(|&e| e & with != e) {
            rec(v + 1, n, with, size + 1, best, inc);
        }
        rec(v + 1, n, cur, size, best, inc);
    }
    let mut best = 0;
    rec(0, n, 0, 0, &mut best, &incident);
    Ok(best)
}
