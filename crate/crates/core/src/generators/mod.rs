//! Seeded configuration generators: random models with exact genericity
//! checks, and the extremal constructions of parallel planes and reguli.

pub mod rng;

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::incidence::{regulus_rulings, Config};
use crate::kernel::{
    classify_pair, collinear3, plane_through, HPoint3, Line3, PairClass, Point2, ReguliBase,
};
use rng::derive_rng;

/// Total rejected samples allowed for one configuration.
pub const RESAMPLE_CAP: u64 = 1_000_000;
/// Consecutive rejections before the coordinate range doubles.
const DOUBLE_AFTER: u64 = 1_000;

fn default_range() -> i64 {
    100
}

/// A reproducible description of a generated configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GenSpec {
    /// Random integer points of `[-range, range]^dim`, `dim` 2 or 3.
    RandomPoints {
        n: usize,
        dim: usize,
        seed: u64,
        #[serde(default = "default_range")]
        range: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_collinear: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_coplanar: Option<usize>,
    },
    /// Lines through two random integer points of `[-range, range]^3`.
    RandomLines {
        n: usize,
        seed: u64,
        #[serde(default = "default_range")]
        range: i64,
        #[serde(default)]
        pairwise_skew: bool,
        #[serde(default)]
        no_three_concurrent: bool,
        /// No four lines in one ruling of a regulus.
        #[serde(default)]
        generic_reguli: bool,
    },
    /// The `a x b` integer grid in the plane `z = 0`.
    GridPoints { a: usize, b: usize },
    /// `k` lines in each of the planes `z = 0, ..., k-1`.
    ParallelPlanesGrid { k: usize, seed: u64 },
    /// `k^2` ruling lines on each of `k` reguli `z = xy + c`.
    RuledReguli { k: usize, seed: u64 },
}

impl GenSpec {
    pub fn seed(&self) -> Option<u64> {
        match self {
            GenSpec::RandomPoints { seed, .. }
            | GenSpec::RandomLines { seed, .. }
            | GenSpec::ParallelPlanesGrid { seed, .. }
            | GenSpec::RuledReguli { seed, .. } => Some(*seed),
            GenSpec::GridPoints { .. } => None,
        }
    }

    /// The same spec with its seed replaced (grids have none).
    pub fn with_seed(&self, new: u64) -> GenSpec {
        let mut s = self.clone();
        match &mut s {
            GenSpec::RandomPoints { seed, .. }
            | GenSpec::RandomLines { seed, .. }
            | GenSpec::ParallelPlanesGrid { seed, .. }
            | GenSpec::RuledReguli { seed, .. } => *seed = new,
            GenSpec::GridPoints { .. } => {}
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("resample budget of {RESAMPLE_CAP} exceeded")]
    ResampleBudgetExceeded,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub fn generate(spec: &GenSpec) -> Result<Config, GenError> {
    match *spec {
        GenSpec::RandomPoints {
            n,
            dim,
            seed,
            range,
            max_collinear,
            max_coplanar,
        } => {
            let pts = gen_random_points(n, dim, seed, range, max_collinear, max_coplanar)?;
            Ok(match dim {
                2 => Config::Points2(
                    pts.iter()
                        .map(|p| {
                            let [x, y, _] = p.to_affine().expect("affine");
                            Point2::new(x, y)
                        })
                        .collect(),
                ),
                _ => Config::Points3(pts),
            })
        }
        GenSpec::RandomLines {
            n,
            seed,
            range,
            pairwise_skew,
            no_three_concurrent,
            generic_reguli,
        } => {
            let flags = LineFlags {
                pairwise_skew,
                no_three_concurrent,
                generic_reguli,
            };
            gen_random_lines(n, seed, range, flags).map(Config::Lines3)
        }
        GenSpec::GridPoints { a, b } => gen_grid_points(a, b).map(Config::Points3),
        GenSpec::ParallelPlanesGrid { k, seed } => {
            gen_parallel_planes_grid(k, seed).map(Config::Lines3)
        }
        GenSpec::RuledReguli { k, seed } => gen_ruled_reguli(k, seed).map(Config::Lines3),
    }
}

/// Random draws with a growing coordinate range and a global budget.
struct Sampler {
    rng: ChaCha8Rng,
    range: i64,
    streak: u64,
    rejected: u64,
}

impl Sampler {
    fn new(seed: u64, purpose: &str, range: i64) -> Self {
        Sampler {
            rng: derive_rng(seed, purpose, 0),
            range: range.max(1),
            streak: 0,
            rejected: 0,
        }
    }

    fn coord(&mut self) -> i64 {
        self.rng.gen_range(-self.range..=self.range)
    }

    fn point(&mut self) -> HPoint3 {
        let (x, y, z) = (self.coord(), self.coord(), self.coord());
        HPoint3::affine_i(x, y, z)
    }

    fn reject(&mut self) -> Result<(), GenError> {
        self.rejected += 1;
        self.streak += 1;
        if self.rejected > RESAMPLE_CAP {
            return Err(GenError::ResampleBudgetExceeded);
        }
        if self.streak >= DOUBLE_AFTER {
            self.range = self.range.saturating_mul(2);
            self.streak = 0;
        }
        Ok(())
    }

    fn accept(&mut self) {
        self.streak = 0;
    }
}

fn positive(name: &str, v: usize) -> Result<(), GenError> {
    if v == 0 {
        Err(GenError::InvalidParameter(format!(
            "{name} must be positive"
        )))
    } else {
        Ok(())
    }
}

pub fn gen_grid_points(a: usize, b: usize) -> Result<Vec<HPoint3>, GenError> {
    positive("a", a)?;
    positive("b", b)?;
    Ok((0..a as i64)
        .flat_map(|x| (0..b as i64).map(move |y| HPoint3::affine_i(x, y, 0)))
        .collect())
}

/// Random distinct integer points; `dim = 2` keeps `z = 0`.
///
/// A point is rejected when it would put more than `max_collinear` points on
/// a line or (in 3-space) more than `max_coplanar` on a plane.
pub fn gen_random_points(
    n: usize,
    dim: usize,
    seed: u64,
    range: i64,
    max_collinear: Option<usize>,
    max_coplanar: Option<usize>,
) -> Result<Vec<HPoint3>, GenError> {
    positive("n", n)?;
    if dim != 2 && dim != 3 {
        return Err(GenError::InvalidParameter("dim must be 2 or 3".into()));
    }
    if max_collinear.is_some_and(|m| m < 2) || max_coplanar.is_some_and(|m| m < 3) {
        return Err(GenError::InvalidParameter(
            "max_collinear must be >= 2 and max_coplanar >= 3".into(),
        ));
    }
    let mut s = Sampler::new(seed, "random-points", range);
    let mut pts: Vec<HPoint3> = Vec::with_capacity(n);
    let mut seen = HashSet::new();
    while pts.len() < n {
        let q = if dim == 2 {
            let (x, y) = (s.coord(), s.coord());
            HPoint3::affine_i(x, y, 0)
        } else {
            s.point()
        };
        let ok = !seen.contains(&q)
            && max_collinear.is_none_or(|m| max_on_line_through(&pts, &q) < m)
            && (dim == 2 || max_coplanar.is_none_or(|m| max_on_plane_through(&pts, &q) < m));
        if ok {
            s.accept();
            seen.insert(q.clone());
            pts.push(q);
        } else {
            s.reject()?;
        }
    }
    Ok(pts)
}

/// Largest number of existing points on one line through `q`.
fn max_on_line_through(pts: &[HPoint3], q: &HPoint3) -> usize {
    let mut best = 0;
    for (i, p) in pts.iter().enumerate() {
        let on = 1 + pts[i + 1..].iter().filter(|r| collinear3(p, q, r)).count();
        best = best.max(on);
    }
    best
}

/// Largest number of existing points on one plane through `q`.
fn max_on_plane_through(pts: &[HPoint3], q: &HPoint3) -> usize {
    let mut best = pts.len().min(2);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if let Some(plane) = plane_through(q, &pts[i], &pts[j]) {
                best = best.max(pts.iter().filter(|r| plane.contains(r)).count());
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LineFlags {
    pub pairwise_skew: bool,
    pub no_three_concurrent: bool,
    pub generic_reguli: bool,
}

pub fn gen_random_lines(
    n: usize,
    seed: u64,
    range: i64,
    flags: LineFlags,
) -> Result<Vec<Line3>, GenError> {
    positive("n", n)?;
    let mut s = Sampler::new(seed, "random-lines", range);
    let mut lines: Vec<Line3> = Vec::with_capacity(n);
    while lines.len() < n {
        let (a, b) = (s.point(), s.point());
        let ok = match Line3::through(&a, &b) {
            Ok(l) if line_fits(&lines, &l, flags) => {
                lines.push(l);
                true
            }
            _ => false,
        };
        if ok {
            s.accept();
        } else {
            s.reject()?;
        }
    }
    Ok(lines)
}

fn line_fits(lines: &[Line3], l: &Line3, flags: LineFlags) -> bool {
    let classes: Vec<PairClass> = lines.iter().map(|m| classify_pair(m, l)).collect();
    if classes.contains(&PairClass::Identical) {
        return false;
    }
    if flags.pairwise_skew && classes.iter().any(|c| *c != PairClass::Skew) {
        return false;
    }
    if flags.no_three_concurrent {
        for (i, c) in classes.iter().enumerate() {
            if let PairClass::Intersecting(p) = c {
                if lines
                    .iter()
                    .enumerate()
                    .any(|(j, m)| j != i && m.contains_point(p))
                {
                    return false;
                }
            }
        }
    }
    if flags.generic_reguli && completes_regulus(lines, &classes, l) {
        return false;
    }
    true
}

/// True iff `l` and three of `lines`, all pairwise skew, lie in one ruling.
fn completes_regulus(lines: &[Line3], classes: &[PairClass], l: &Line3) -> bool {
    let skew_to_l: Vec<usize> = (0..lines.len())
        .filter(|&i| classes[i] == PairClass::Skew)
        .collect();
    let skew = |a: &Line3, b: &Line3| classify_pair(a, b) == PairClass::Skew;
    for (x, &i) in skew_to_l.iter().enumerate() {
        for &j in &skew_to_l[x + 1..] {
            if !skew(&lines[i], &lines[j]) {
                continue;
            }
            let base = ReguliBase::new(&lines[i], &lines[j]);
            let key = base.key(l);
            let hit = skew_to_l.iter().any(|&k| {
                k != i
                    && k != j
                    && skew(&lines[i], &lines[k])
                    && skew(&lines[j], &lines[k])
                    && base.key(&lines[k]) == key
            });
            if hit {
                return true;
            }
        }
    }
    false
}

/// `k` lines `y = s x + b` in each plane `z = i`, `i = 0..k`.
///
/// All `k^2` slopes are distinct, so no two lines are parallel, and no three
/// lines of a plane pass through a common point.
pub fn gen_parallel_planes_grid(k: usize, seed: u64) -> Result<Vec<Line3>, GenError> {
    positive("k", k)?;
    let mut s = Sampler::new(seed, "parallel-planes-grid", (k * k) as i64);
    let mut slopes = BTreeSet::new();
    let mut lines = Vec::with_capacity(k * k);
    for z in 0..k as i64 {
        let mut plane: Vec<(i64, i64)> = Vec::with_capacity(k);
        while plane.len() < k {
            let (m, b) = (s.coord(), s.coord());
            if slopes.contains(&m) || plane_has_triple_point(&plane, (m, b)) {
                s.reject()?;
                continue;
            }
            s.accept();
            slopes.insert(m);
            plane.push((m, b));
        }
        for (m, b) in plane {
            lines.push(Line3::through_affine([0, b, z], [1, m + b, z]).expect("distinct points"));
        }
    }
    Ok(lines)
}

/// True iff the new line meets two existing lines in one point.
fn plane_has_triple_point(plane: &[(i64, i64)], new: (i64, i64)) -> bool {
    // y = m x + b; lines i, j, new are concurrent iff det[m, b, 1] = 0.
    let (m3, b3) = (new.0 as i128, new.1 as i128);
    for (x, &(m1, b1)) in plane.iter().enumerate() {
        for &(m2, b2) in &plane[x + 1..] {
            let (m1, b1, m2, b2) = (m1 as i128, b1 as i128, m2 as i128, b2 as i128);
            let det = m1 * (b2 - b3) - b1 * (m2 - m3) + (m2 * b3 - m3 * b2);
            if det.is_zero() {
                return true;
            }
        }
    }
    false
}

/// Largest `k` for which the regulus membership of the output is verified.
pub const RULED_REGULI_VERIFY_MAX_K: usize = 4;

/// Lines `{y = a, z = a x + c_i}` on the reguli `z = x y + c_i`.
///
/// `k` distinct offsets, `k^2` lines per regulus, all slopes `a` distinct.
/// For `k <= 4` the output is re-checked so that each regulus holds exactly
/// its own lines and no other four lines share a ruling.
pub fn gen_ruled_reguli(k: usize, seed: u64) -> Result<Vec<Line3>, GenError> {
    positive("k", k)?;
    // A wide range keeps accidental fourth lines off the other reguli rare.
    let mut s = Sampler::new(seed, "ruled-reguli", 1000 * (k * k * k) as i64);
    loop {
        let offsets: Vec<i64> = {
            let mut seen = HashSet::new();
            let mut v = Vec::new();
            while v.len() < k {
                let c = s.coord();
                if seen.insert(c) {
                    v.push(c);
                }
            }
            v
        };
        let mut used = HashSet::new();
        let mut lines = Vec::with_capacity(k * k * k);
        for &c in &offsets {
            let mut placed = 0;
            while placed < k * k {
                let a = s.coord();
                if !used.insert(a) {
                    continue;
                }
                lines.push(
                    Line3::through_affine([0, a, c], [1, a, a + c]).expect("distinct points"),
                );
                placed += 1;
            }
        }
        if k > RULED_REGULI_VERIFY_MAX_K || reguli_are_exact(&lines, k) {
            return Ok(lines);
        }
        s.reject()?;
    }
}

fn reguli_are_exact(lines: &[Line3], k: usize) -> bool {
    let block = k * k;
    let groups = regulus_rulings(lines);
    let planted: Vec<Vec<usize>> = (0..k)
        .map(|r| (r * block..(r + 1) * block).collect())
        .collect();
    let big: Vec<&Vec<usize>> = groups.iter().filter(|g| g.len() > 3).collect();
    if block <= 3 {
        return big.is_empty();
    }
    big.len() == k && big.iter().all(|g| planted.contains(g))
}
