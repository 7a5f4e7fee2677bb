//! Exact guarantees of the extractors and the clique targets.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::kernel::Scalar;

/// The real number `base^(1/root)`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBound {
    pub base: BigRational,
    pub root: u32,
}

impl RootBound {
    pub fn new(base: BigRational, root: u32) -> Self {
        assert!(root >= 1);
        RootBound { base, root }
    }

    /// True iff `s >= base^(1/root)`.
    pub fn is_met_by(&self, s: usize) -> bool {
        let lhs = BigRational::from_integer(BigInt::from(s).pow(self.root));
        lhs >= self.base
    }

    /// Smallest integer `s >= 0` meeting the bound.
    pub fn ceil(&self) -> BigInt {
        if self.base <= BigRational::zero() {
            return BigInt::zero();
        }
        let meets = |s: &BigInt| BigRational::from_integer(s.pow(self.root)) >= self.base;
        let mut hi = self.base.ceil().to_integer().max(BigInt::one());
        let mut lo = BigInt::zero();
        debug_assert!(meets(&hi));
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if meets(&mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Display value; never used in comparisons.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.base).powf(1.0 / self.root as f64)
    }
}

impl fmt::Display for RootBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "({})^(1/{})", self.base, self.root)
        }
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `n^2 / (2m + n)`, the Turán guarantee for a graph with `n` vertices and
/// `m` edges.
pub fn turan_bound(n: usize, m: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(n * n), BigInt::from(2 * m + n))
}

pub fn meets_turan(size: usize, n: usize, m: usize) -> bool {
    BigRational::from_integer(size.into()) >= turan_bound(n, m)
}

/// True when the hypergraph is sparse enough (`m < n/t`) that breaking
/// every edge keeps more than half the vertices.
pub fn spencer_sparse(n: usize, m: usize, t: usize) -> bool {
    m * t < n
}

/// `((t-1)/t^(t/(t-1))) * n / (m/n)^(1/(t-1))`, written as
/// `((t-1)^(t-1) n^t / (t^t m))^(1/(t-1))`. `None` when `m = 0`.
pub fn spencer_bound(n: usize, m: usize, t: usize) -> Option<RootBound> {
    assert!(t >= 2);
    if m == 0 {
        return None;
    }
    let t32 = t as u32;
    let num = BigInt::from(t - 1).pow(t32 - 1) * BigInt::from(n).pow(t32);
    let den = BigInt::from(t).pow(t32) * BigInt::from(m);
    Some(RootBound::new(BigRational::new(num, den), t32 - 1))
}

/// The guarantee an independent set of a `t`-uniform hypergraph must meet.
pub fn meets_spencer(size: usize, n: usize, m: usize, t: usize) -> bool {
    if m == 0 {
        return size == n;
    }
    if spencer_sparse(n, m, t) {
        return 2 * size > n;
    }
    spencer_bound(n, m, t).expect("m > 0").is_met_by(size)
}

/// A clique target `n^(p/q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Target {
    pub p: u32,
    pub q: u32,
}

impl Target {
    pub const SQRT: Target = Target { p: 1, q: 2 };
    pub const CUBE_ROOT: Target = Target { p: 1, q: 3 };
    pub const TWO_THIRDS: Target = Target { p: 2, q: 3 };

    pub fn value(&self, n: usize) -> RootBound {
        RootBound::new(
            BigRational::from_integer(BigInt::from(n).pow(self.p)),
            self.q,
        )
    }

    /// True iff `size >= factor * n^(p/q)`, decided exactly.
    pub fn is_met(&self, size: usize, n: usize, factor: &Scalar) -> bool {
        if factor <= &Scalar::zero() {
            return true;
        }
        let lhs = (BigRational::from_integer(size.into()) / factor).pow(self.q as i32);
        lhs >= BigRational::from_integer(BigInt::from(n).pow(self.p))
    }

    pub fn label(&self) -> &'static str {
        match (self.p, self.q) {
            (1, 2) => "n^(1/2)",
            (1, 3) => "n^(1/3)",
            (2, 3) => "n^(2/3)",
            _ => "n^(p/q)",
        }
    }
}

/// `n^(p/q)` rounded up.
pub fn ceil_root_of_power(n: usize, p: u32, q: u32) -> BigInt {
    Target { p, q }.value(n).ceil()
}

/// Ratio `size / n^(p/q)` for display.
pub fn display_ratio(size: usize, target: RootBound) -> f64 {
    let v = target.to_f64();
    if v == 0.0 {
        f64::NAN
    } else {
        size as f64 / v
    }
}

pub(crate) fn integer_ceil(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_mod_floor(r.denom());
    if rem.is_zero() {
        q
    } else {
        q + 1
    }
}
