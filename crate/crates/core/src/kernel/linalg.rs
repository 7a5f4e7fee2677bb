//! Exact linear algebra over the rationals.
//!
//! Matrices are plain `Vec<Vec<Scalar>>` in row-major order. Everything here
//! is small (at most ten columns). Hot paths with integer input use the
//! fraction-free `int_null_space`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.ncols];
            v[free] = Scalar::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

pub fn rref(mut m: Vec<Vec<Scalar>>, ncols: usize) -> Rref {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(m: &[Vec<Scalar>], ncols: usize) -> usize {
    rref(m.to_vec(), ncols).rank()
}

pub fn null_space(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    rref(m.to_vec(), ncols).null_space()
}

/// Fraction-free reduced row echelon form of an integer matrix. Each row is
/// the canonical integer multiple of the corresponding rational `rref` row.
pub fn int_rref(m: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let (f, g) = (a[r][c].clone(), a[i][c].clone());
                for j in 0..ncols {
                    let v = &a[i][j] * &f - &a[r][j] * &g;
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    for row in a.iter_mut() {
        *row = canonical_int_vec(std::mem::take(row)).expect("pivot rows are nonzero");
    }
    (a, pivots)
}

/// Null space of an integer matrix as canonical integer vectors, one per
/// free column, spanning the same space as `null_space`.
pub fn int_null_space(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (a, pivots) = int_rref(m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let l = pivots
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &p)| acc.lcm(&a[i][p]));
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![BigInt::zero(); ncols];
            v[free] = l.clone();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -(&a[i][free] * (&l / &a[i][p]));
            }
            canonical_int_vec(v).expect("free coordinate is nonzero")
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * &a[i][i])
}

/// Signature of a real symmetric form: counts of positive, negative and zero
/// eigenvalues (equivalently, of a diagonal congruent form).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.positive == 0 || self.negative == 0)
    }

    pub fn is_indefinite(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

/// Sylvester inertia by symmetric congruence elimination.
///
/// Pivots on a nonzero diagonal entry when one exists; otherwise a nonzero
/// off-diagonal entry `a_ij` is moved onto the diagonal with the congruence
/// `e_i -> e_i + e_j`, which turns the `[[0, a], [a, 0]]` block into one with
/// diagonal `2a`.
pub fn inertia(sym: &[Vec<Scalar>]) -> Inertia {
    let mut a: Vec<Vec<Scalar>> = sym.to_vec();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !a.is_empty() {
        let n = a.len();
        let pivot = (0..n).find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = off else {
                    out.zero += n;
                    break;
                };
                // row_i += row_j, then col_i += col_j
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != p) {
            let f = &a[i][p] / &d;
            let row: Vec<Scalar> = (0..n)
                .filter(|&j| j != p)
                .map(|j| &a[i][j] - &f * &a[p][j])
                .collect();
            next.push(row);
        }
        a = next;
    }
    out
}

/// Clears denominators and removes the content of a rational vector, then
/// makes the first nonzero entry positive. `None` for the zero vector.
pub fn canonical_ints(v: &[Scalar]) -> Option<Vec<BigInt>> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    canonical_int_vec(ints)
}

/// Divides an integer vector by its content and normalizes the sign of the
/// first nonzero entry. `None` for the zero vector.
pub fn canonical_int_vec(mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for x in v.iter().filter(|x| !x.is_zero()) {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return None;
    }
    let first_negative = v.iter().find(|x| !x.is_zero())?.is_negative();
    for x in v.iter_mut() {
        if !g.is_one() {
            *x = &*x / &g;
        }
        if first_negative {
            *x = -&*x;
        }
    }
    Some(v)
}

pub fn to_scalars(v: &[BigInt]) -> Vec<Scalar> {
    v.iter().map(|x| Scalar::from_integer(x.clone())).collect()
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
