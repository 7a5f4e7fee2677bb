//! Reguli: the quadric through three skew lines, and a fast co-regulus key.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::linalg::{canonical_int_vec, canonical_ints, rref, to_scalars};
use super::predicates::{classify_pair, cross4};
use super::types::{Line3, PairClass, Quadric3, QUADRIC_MONOMIALS};
use super::KernelError;

fn monomial_row(p: &[BigInt; 4]) -> Vec<BigInt> {
    QUADRIC_MONOMIALS
        .iter()
        .map(|&(i, j)| &p[i] * &p[j])
        .collect()
}

fn require_pairwise_skew(lines: &[&Line3]) -> Result<(), KernelError> {
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if classify_pair(a, b) != PairClass::Skew {
                return Err(KernelError::NotPairwiseSkew);
            }
        }
    }
    Ok(())
}

/// The unique quadric containing three pairwise skew lines, found as the
/// null space of the 9x10 system that puts three points of each line on it.
pub fn quadric_through_skew_triple(
    l1: &Line3,
    l2: &Line3,
    l3: &Line3,
) -> Result<Quadric3, KernelError> {
    require_pairwise_skew(&[l1, l2, l3])?;
    let rows: Vec<_> = [l1, l2, l3]
        .iter()
        .flat_map(|l| l.sample_points())
        .map(|p| to_scalars(&monomial_row(&p)))
        .collect();
    let r = rref(rows, 10);
    if r.rank() < 9 {
        return Err(KernelError::RankDeficient(r.rank()));
    }
    let ns = r.null_space();
    let c = canonical_ints(&ns[0]).expect("null vector is nonzero");
    Quadric3::from_ints(c.try_into().expect("ten entries"))
}

/// Same quadric as [`quadric_through_skew_triple`], written down directly.
///
/// A point `X` lies on the regulus iff the planes `<l1, X>` and `<l2, X>`
/// cut `l3` in the same point, which is a product of linear forms in `X`.
/// Caller guarantees pairwise skewness.
pub fn quadric_closed_form(l1: &Line3, l2: &Line3, l3: &Line3) -> Quadric3 {
    let (a1, b1) = (l1.gen_a().coords(), l1.gen_b().coords());
    let (a2, b2) = (l2.gen_a().coords(), l2.gen_b().coords());
    let (a3, b3) = (l3.gen_a().coords(), l3.gen_b().coords());
    let c = match closed_form_small(&[a1, b1, a2, b2, a3, b3]) {
        Some(c) => c.map(BigInt::from),
        None => {
            let p1a = cross4([a1, b1, a3]);
            let p1b = cross4([a1, b1, b3]);
            let p2a = cross4([a2, b2, a3]);
            let p2b = cross4([a2, b2, b3]);
            let mut c: [BigInt; 10] = Default::default();
            for (k, &(i, j)) in QUADRIC_MONOMIALS.iter().enumerate() {
                c[k] = sym_coeff(&p1a, &p2b, i, j) - sym_coeff(&p1b, &p2a, i, j);
            }
            c
        }
    };
    Quadric3::from_ints(c).expect("skew triple spans a quadric")
}

fn sym_coeff(l: &[BigInt; 4], m: &[BigInt; 4], i: usize, j: usize) -> BigInt {
    if i == j {
        &l[i] * &m[i]
    } else {
        &l[i] * &m[j] + &l[j] * &m[i]
    }
}

fn closed_form_small(pts: &[&[BigInt; 4]; 6]) -> Option<[i128; 10]> {
    let mut small = [[0i128; 4]; 6];
    for (dst, src) in small.iter_mut().zip(pts) {
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            *d = s.to_i64()? as i128;
        }
    }
    let [a1, b1, a2, b2, a3, b3] = small;
    let p1a = cross4_i128([&a1, &b1, &a3])?;
    let p1b = cross4_i128([&a1, &b1, &b3])?;
    let p2a = cross4_i128([&a2, &b2, &a3])?;
    let p2b = cross4_i128([&a2, &b2, &b3])?;
    let coeff = |l: &[i128; 4], m: &[i128; 4], i: usize, j: usize| -> Option<i128> {
        if i == j {
            l[i].checked_mul(m[i])
        } else {
            l[i].checked_mul(m[j])?.checked_add(l[j].checked_mul(m[i])?)
        }
    };
    let mut c = [0i128; 10];
    for (k, &(i, j)) in QUADRIC_MONOMIALS.iter().enumerate() {
        c[k] = coeff(&p1a, &p2b, i, j)?.checked_sub(coeff(&p1b, &p2a, i, j)?)?;
    }
    Some(c)
}

fn det3_i128(r: [&[i128; 4]; 3], cols: [usize; 3]) -> Option<i128> {
    let [a, b, c] = cols;
    let minor = |x: usize, y: usize| -> Option<i128> {
        r[1][x]
            .checked_mul(r[2][y])?
            .checked_sub(r[1][y].checked_mul(r[2][x])?)
    };
    r[0][a]
        .checked_mul(minor(b, c)?)?
        .checked_sub(r[0][b].checked_mul(minor(a, c)?)?)?
        .checked_add(r[0][c].checked_mul(minor(a, b)?)?)
}

fn cross4_i128(r: [&[i128; 4]; 3]) -> Option<[i128; 4]> {
    Some([
        -det3_i128(r, [1, 2, 3])?,
        det3_i128(r, [0, 2, 3])?,
        -det3_i128(r, [0, 1, 3])?,
        det3_i128(r, [0, 1, 2])?,
    ])
}

/// True iff `q` vanishes on all of `l`: a quadratic on a line with three
/// distinct roots is identically zero.
pub fn line_on_quadric(l: &Line3, q: &Quadric3) -> bool {
    l.sample_points().iter().all(|p| q.eval_h(p).is_zero())
}

/// Projection of a Plücker vector to the quotient by the span of two skew
/// lines. For lines `k`, `m` skew to both base lines, `k` and `m` lie on the
/// regulus through the base lines and `k` iff their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReguliKey {
    Small([i128; 4]),
    Big(Vec<BigInt>),
}

/// Precomputed elimination data for a base pair of skew lines.
#[derive(Clone, Debug)]
pub struct ReguliBase {
    p: [BigInt; 6],
    q: [BigInt; 6],
    r: usize,
    s: usize,
    det: BigInt,
    rest: [usize; 4],
    small: Option<([i128; 6], [i128; 6], i128)>,
}

impl ReguliBase {
    pub fn new(l1: &Line3, l2: &Line3) -> Self {
        let p = l1.plucker().clone();
        let q = l2.plucker().clone();
        let (r, s, det) = (0..6)
            .flat_map(|r| (r + 1..6).map(move |s| (r, s)))
            .map(|(r, s)| (r, s, &p[r] * &q[s] - &p[s] * &q[r]))
            .find(|(_, _, d)| !d.is_zero())
            .expect("distinct lines have independent Plücker vectors");
        let mut rest = [0; 4];
        for (slot, k) in rest.iter_mut().zip((0..6).filter(|&k| k != r && k != s)) {
            *slot = k;
        }
        let small = (|| {
            let ps = p.clone().map(|x| x.to_i64().map(i128::from));
            let qs = q.clone().map(|x| x.to_i64().map(i128::from));
            let mut pa = [0i128; 6];
            let mut qa = [0i128; 6];
            for k in 0..6 {
                pa[k] = ps[k]?;
                qa[k] = qs[k]?;
            }
            Some((pa, qa, det.to_i128()?))
        })();
        ReguliBase {
            p,
            q,
            r,
            s,
            det,
            rest,
            small,
        }
    }

    pub fn key(&self, l: &Line3) -> ReguliKey {
        if let Some(k) = self.key_small(l.plucker()) {
            return ReguliKey::Small(k);
        }
        let v = l.plucker();
        let (r, s) = (self.r, self.s);
        let alpha = &v[r] * &self.q[s] - &v[s] * &self.q[r];
        let beta = &self.p[r] * &v[s] - &self.p[s] * &v[r];
        let out: Vec<BigInt> = self
            .rest
            .iter()
            .map(|&k| &self.det * &v[k] - &alpha * &self.p[k] - &beta * &self.q[k])
            .collect();
        let c = canonical_int_vec(out).expect("line outside the base pencil");
        let small: Option<Vec<i128>> = c.iter().map(|x| x.to_i128()).collect();
        match small {
            Some(s) => ReguliKey::Small(s.try_into().expect("four entries")),
            None => ReguliKey::Big(c),
        }
    }

    fn key_small(&self, v: &[BigInt; 6]) -> Option<[i128; 4]> {
        let (p, q, det) = self.small.as_ref()?;
        let mut vs = [0i128; 6];
        for (d, x) in vs.iter_mut().zip(v) {
            *d = x.to_i64()? as i128;
        }
        let (r, s) = (self.r, self.s);
        let alpha = vs[r]
            .checked_mul(q[s])?
            .checked_sub(vs[s].checked_mul(q[r])?)?;
        let beta = p[r]
            .checked_mul(vs[s])?
            .checked_sub(p[s].checked_mul(vs[r])?)?;
        let mut out = [0i128; 4];
        for (o, &k) in out.iter_mut().zip(&self.rest) {
            *o = det
                .checked_mul(vs[k])?
                .checked_sub(alpha.checked_mul(p[k])?)?
                .checked_sub(beta.checked_mul(q[k])?)?;
        }
        let g = out.iter().fold(0i128, |acc, x| acc.gcd(x));
        if g == 0 {
            return None;
        }
        let first = *out.iter().find(|x| **x != 0)?;
        let g = if first < 0 { -g } else { g };
        Some(out.map(|x| x / g))
    }
}
