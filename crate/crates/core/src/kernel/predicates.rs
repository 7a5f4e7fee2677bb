use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, One, Zero};

use super::linalg::{canonical_ints, Scalar};
use super::types::{dot4, klein_pairing, Circle2, HPoint3, Line3, PairClass, Plane3, Point2};
use super::KernelError;

fn det3<T: Num + Clone>(r: [&[T; 4]; 3], cols: [usize; 3]) -> T {
    let [a, b, c] = cols;
    let m = |row: usize, col: usize| r[row][col].clone();
    m(0, a) * (m(1, b) * m(2, c) - m(1, c) * m(2, b))
        - m(0, b) * (m(1, a) * m(2, c) - m(1, c) * m(2, a))
        + m(0, c) * (m(1, a) * m(2, b) - m(1, b) * m(2, a))
}

/// The vector `c` with `c . x = det[r0; r1; r2; x]` for every `x`.
/// Zero iff the three rows are linearly dependent.
pub fn cross4<T: Num + Clone + Neg<Output = T>>(r: [&[T; 4]; 3]) -> [T; 4] {
    [
        -det3(r, [1, 2, 3]),
        det3(r, [0, 2, 3]),
        -det3(r, [0, 1, 3]),
        det3(r, [0, 1, 2]),
    ]
}

/// `det[a; b; c; d]` of four homogeneous points.
pub fn det4(a: &[BigInt; 4], b: &[BigInt; 4], c: &[BigInt; 4], d: &[BigInt; 4]) -> BigInt {
    dot4(&cross4([a, b, c]), d)
}

/// Incidence form of two lines: zero iff they meet in projective space.
pub fn klein_form(l1: &Line3, l2: &Line3) -> BigInt {
    klein_pairing(l1.plucker(), l2.plucker())
}

pub fn classify_pair(l1: &Line3, l2: &Line3) -> PairClass {
    if l1 == l2 {
        return PairClass::Identical;
    }
    if !klein_form(l1, l2).is_zero() {
        return PairClass::Skew;
    }
    let p = meet_point(l1, l2).expect("distinct coplanar lines meet in one point");
    if p.is_affine() {
        PairClass::Intersecting(p)
    } else {
        PairClass::Parallel
    }
}

/// Common point of two distinct lines with vanishing incidence form.
fn meet_point(l1: &Line3, l2: &Line3) -> Option<HPoint3> {
    let (a, b) = (l1.gen_a().coords(), l1.gen_b().coords());
    for k in 0..4 {
        let mut e: [BigInt; 4] = Default::default();
        e[k] = BigInt::one();
        let plane = cross4([l2.gen_a().coords(), l2.gen_b().coords(), &e]);
        let (pa, pb) = (dot4(&plane, a), dot4(&plane, b));
        if pa.is_zero() && pb.is_zero() {
            continue;
        }
        let p: [BigInt; 4] = std::array::from_fn(|i| &pb * &a[i] - &pa * &b[i]);
        return HPoint3::from_ints(p).ok();
    }
    None
}

pub fn collinear3(p: &HPoint3, q: &HPoint3, r: &HPoint3) -> bool {
    cross4([p.coords(), q.coords(), r.coords()])
        .iter()
        .all(Zero::is_zero)
}

/// Plane through three points, `None` when they are collinear.
pub fn plane_through(p: &HPoint3, q: &HPoint3, r: &HPoint3) -> Option<Plane3> {
    Plane3::from_ints(cross4([p.coords(), q.coords(), r.coords()])).ok()
}

/// The plane spanned by two coplanar lines; `None` for skew lines.
pub fn plane_of_lines(l1: &Line3, l2: &Line3) -> Result<Option<Plane3>, KernelError> {
    if l1 == l2 {
        return Err(KernelError::IdenticalLines);
    }
    if !klein_form(l1, l2).is_zero() {
        return Ok(None);
    }
    let plane = [l2.gen_a(), l2.gen_b()]
        .into_iter()
        .find_map(|q| plane_through(l1.gen_a(), l1.gen_b(), q));
    Ok(plane)
}

/// The circle through three points; `None` when they are collinear.
pub fn circle_through(
    p1: &Point2,
    p2: &Point2,
    p3: &Point2,
) -> Result<Option<Circle2>, KernelError> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(KernelError::DuplicatePoints);
    }
    let lift = |p: &Point2| -> [Scalar; 4] {
        [
            &p.x * &p.x + &p.y * &p.y,
            p.x.clone(),
            p.y.clone(),
            Scalar::one(),
        ]
    };
    let rows = [lift(p1), lift(p2), lift(p3)];
    let c = cross4([&rows[0], &rows[1], &rows[2]]);
    let ints = canonical_ints(&c).expect("distinct points give a nonzero pencil");
    let circle = Circle2::from_ints(ints.try_into().expect("four entries"))?;
    Ok(circle.is_proper().then_some(circle))
}

pub fn on_circle(p: &Point2, c: &Circle2) -> bool {
    let [a, b, cc, d] = c.coeffs().clone().map(Scalar::from_integer);
    let v = a * (&p.x * &p.x + &p.y * &p.y) + b * &p.x + cc * &p.y + d;
    v.is_zero()
}
