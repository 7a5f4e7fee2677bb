use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::{canonical_int_vec, canonical_ints, Scalar};
use super::predicates::cross4;
use super::KernelError;

fn to_array<const N: usize>(v: Vec<BigInt>) -> [BigInt; N] {
    v.try_into().expect("length checked by caller")
}

/// A point of projective 3-space, `(w : x : y : z)` with the homogenizing
/// coordinate first. Stored as coprime integers, first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint3 {
    coords: [BigInt; 4],
}

impl HPoint3 {
    pub fn new(coords: [Scalar; 4]) -> Result<Self, KernelError> {
        let c = canonical_ints(&coords).ok_or(KernelError::ZeroVector)?;
        Ok(HPoint3 {
            coords: to_array(c),
        })
    }

    pub fn from_ints(coords: [BigInt; 4]) -> Result<Self, KernelError> {
        let c = canonical_int_vec(coords.to_vec()).ok_or(KernelError::ZeroVector)?;
        Ok(HPoint3 {
            coords: to_array(c),
        })
    }

    pub fn affine(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Self::new([Scalar::one(), x, y, z]).expect("w = 1 is nonzero")
    }

    pub fn affine_i(x: i64, y: i64, z: i64) -> Self {
        Self::from_ints([1.into(), x.into(), y.into(), z.into()]).expect("w = 1 is nonzero")
    }

    /// The point at infinity in direction `d`.
    pub fn ideal(d: [BigInt; 3]) -> Result<Self, KernelError> {
        let [a, b, c] = d;
        Self::from_ints([BigInt::zero(), a, b, c])
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.coords
    }

    pub fn is_affine(&self) -> bool {
        !self.coords[0].is_zero()
    }

    pub fn to_affine(&self) -> Option<[Scalar; 3]> {
        if !self.is_affine() {
            return None;
        }
        let w = &self.coords[0];
        Some(std::array::from_fn(|i| {
            Scalar::new(self.coords[i + 1].clone(), w.clone())
        }))
    }
}

impl fmt::Display for HPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [w, x, y, z] = &self.coords;
        write!(f, "({w}:{x}:{y}:{z})")
    }
}

/// A finite point of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 {
            x: Scalar::from_integer(x.into()),
            y: Scalar::from_integer(y.into()),
        }
    }
}

/// Plane `c0 w + c1 x + c2 y + c3 z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plane3 {
    coeffs: [BigInt; 4],
}

impl Plane3 {
    pub fn from_ints(coeffs: [BigInt; 4]) -> Result<Self, KernelError> {
        let c = canonical_int_vec(coeffs.to_vec()).ok_or(KernelError::ZeroVector)?;
        Ok(Plane3 {
            coeffs: to_array(c),
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    pub fn eval(&self, p: &HPoint3) -> BigInt {
        dot4(&self.coeffs, p.coords())
    }

    pub fn contains(&self, p: &HPoint3) -> bool {
        self.eval(p).is_zero()
    }

    pub fn contains_line(&self, l: &Line3) -> bool {
        self.contains(l.gen_a()) && self.contains(l.gen_b())
    }
}

pub(crate) fn dot4(a: &[BigInt; 4], b: &[BigInt; 4]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_INDEX: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];

/// A line of projective 3-space.
///
/// Carries the two generator points it was built from and the canonical
/// Plücker vector `(p01 : p02 : p12 : p03 : p13 : p23)`. Equality, ordering
/// and hashing use the Plücker vector only, so the same line built from
/// different generators compares equal.
#[derive(Clone, Debug)]
pub struct Line3 {
    gen_a: HPoint3,
    gen_b: HPoint3,
    plucker: [BigInt; 6],
}

impl Line3 {
    /// The line through two projectively distinct points.
    pub fn through(a: &HPoint3, b: &HPoint3) -> Result<Self, KernelError> {
        let (ac, bc) = (a.coords(), b.coords());
        let raw: Vec<BigInt> = PLUCKER_INDEX
            .iter()
            .map(|&(i, j)| &ac[i] * &bc[j] - &ac[j] * &bc[i])
            .collect();
        let plucker = canonical_int_vec(raw).ok_or(KernelError::IdenticalPoints)?;
        Ok(Line3 {
            gen_a: a.clone(),
            gen_b: b.clone(),
            plucker: to_array(plucker),
        })
    }

    pub fn through_affine(a: [i64; 3], b: [i64; 3]) -> Result<Self, KernelError> {
        Self::through(
            &HPoint3::affine_i(a[0], a[1], a[2]),
            &HPoint3::affine_i(b[0], b[1], b[2]),
        )
    }

    /// Rebuilds a line from a Plücker vector lying on the Klein quadric.
    /// Generators are read off two independent columns of the Plücker matrix.
    pub fn from_plucker(p: [BigInt; 6]) -> Result<Self, KernelError> {
        let p = canonical_int_vec(p.to_vec()).ok_or(KernelError::ZeroVector)?;
        let p: [BigInt; 6] = to_array(p);
        if !klein_self(&p).is_zero() {
            return Err(KernelError::NotOnKlein);
        }
        let mut m: [[BigInt; 4]; 4] = Default::default();
        for (k, &(i, j)) in PLUCKER_INDEX.iter().enumerate() {
            m[i][j] = p[k].clone();
            m[j][i] = -p[k].clone();
        }
        let columns: Vec<HPoint3> = (0..4)
            .filter_map(|c| HPoint3::from_ints(std::array::from_fn(|r| m[r][c].clone())).ok())
            .collect();
        let a = columns.first().ok_or(KernelError::NotOnKlein)?;
        let b = columns
            .iter()
            .find(|q| *q != a)
            .ok_or(KernelError::NotOnKlein)?;
        let line = Line3::through(a, b)?;
        debug_assert_eq!(line.plucker, p);
        Ok(line)
    }

    pub fn gen_a(&self) -> &HPoint3 {
        &self.gen_a
    }

    pub fn gen_b(&self) -> &HPoint3 {
        &self.gen_b
    }

    pub fn plucker(&self) -> &[BigInt; 6] {
        &self.plucker
    }

    /// Plücker coefficients: the coordinates reversed with two signs flipped.
    pub fn coefficients(&self) -> [BigInt; 6] {
        coefficients_of(&self.plucker)
    }

    /// `(p01, p02, p03)`, proportional to the affine direction.
    pub fn direction(&self) -> [BigInt; 3] {
        [
            self.plucker[0].clone(),
            self.plucker[1].clone(),
            self.plucker[3].clone(),
        ]
    }

    /// Canonical direction (defined up to sign), `None` for the lines at infinity.
    pub fn canonical_direction(&self) -> Option<Vec<BigInt>> {
        canonical_int_vec(self.direction().to_vec())
    }

    pub fn is_affine(&self) -> bool {
        is_affine_plucker(&self.plucker)
    }

    /// Three distinct points of the line.
    pub fn sample_points(&self) -> [[BigInt; 4]; 3] {
        let a = self.gen_a.coords().clone();
        let b = self.gen_b.coords().clone();
        let c = std::array::from_fn(|i| &a[i] + &b[i]);
        [a, b, c]
    }

    pub fn contains_point(&self, p: &HPoint3) -> bool {
        cross4([self.gen_a.coords(), self.gen_b.coords(), p.coords()])
            .iter()
            .all(Zero::is_zero)
    }
}

pub(crate) fn coefficients_of(p: &[BigInt; 6]) -> [BigInt; 6] {
    [
        p[5].clone(),
        -p[4].clone(),
        p[3].clone(),
        p[2].clone(),
        -p[1].clone(),
        p[0].clone(),
    ]
}

/// Symmetric bilinear pairing of two Plücker vectors: coordinates of one
/// against coefficients of the other.
pub fn klein_pairing(a: &[BigInt; 6], b: &[BigInt; 6]) -> BigInt {
    &a[0] * &b[5] - &a[1] * &b[4] + &a[2] * &b[3] + &a[3] * &b[2] - &a[4] * &b[1] + &a[5] * &b[0]
}

/// `p01 p23 - p02 p13 + p03 p12`; zero exactly on the Klein quadric.
pub fn klein_self(p: &[BigInt; 6]) -> BigInt {
    &p[0] * &p[5] - &p[1] * &p[4] + &p[3] * &p[2]
}

pub(crate) fn is_affine_plucker(p: &[BigInt; 6]) -> bool {
    !(p[0].is_zero() && p[1].is_zero() && p[3].is_zero())
}

impl PartialEq for Line3 {
    fn eq(&self, other: &Self) -> bool {
        self.plucker == other.plucker
    }
}

impl Eq for Line3 {}

impl Hash for Line3 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.plucker.hash(state);
    }
}

impl PartialOrd for Line3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Line3 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.plucker.cmp(&other.plucker)
    }
}

impl fmt::Display for Line3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.plucker;
        write!(f, "[{}:{}:{}:{}:{}:{}]", p[0], p[1], p[2], p[3], p[4], p[5])
    }
}

/// `A (x^2 + y^2) + B x + C y + D = 0`. `A = 0` encodes a line and is never
/// produced by [`circle_through`](super::circle_through).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circle2 {
    coeffs: [BigInt; 4],
}

impl Circle2 {
    pub fn from_ints(coeffs: [BigInt; 4]) -> Result<Self, KernelError> {
        let c = canonical_int_vec(coeffs.to_vec()).ok_or(KernelError::ZeroVector)?;
        Ok(Circle2 {
            coeffs: to_array(c),
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    pub fn is_proper(&self) -> bool {
        !self.coeffs[0].is_zero()
    }
}

/// Degree-2 surface with coefficients of
/// `(x^2, y^2, z^2, xy, xz, yz, x, y, z, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadric3 {
    coeffs: [BigInt; 10],
}

/// Homogeneous index pairs matching the coefficient order, with `w` at index 0.
pub const QUADRIC_MONOMIALS: [(usize, usize); 10] = [
    (1, 1),
    (2, 2),
    (3, 3),
    (1, 2),
    (1, 3),
    (2, 3),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 0),
];

impl Quadric3 {
    pub fn from_ints(coeffs: [BigInt; 10]) -> Result<Self, KernelError> {
        let c = canonical_int_vec(coeffs.to_vec()).ok_or(KernelError::ZeroVector)?;
        Ok(Quadric3 {
            coeffs: to_array(c),
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 10] {
        &self.coeffs
    }

    /// Value of the homogenized quadric at a homogeneous point.
    pub fn eval_h(&self, p: &[BigInt; 4]) -> BigInt {
        self.coeffs
            .iter()
            .zip(QUADRIC_MONOMIALS)
            .map(|(c, (i, j))| c * &p[i] * &p[j])
            .sum()
    }
}

/// Relative position of two lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairClass {
    Identical,
    Intersecting(HPoint3),
    Parallel,
    Skew,
}
