//! Reference incidence bounds, evaluated with an adjustable leading
//! constant. All values are display-only.

use std::fmt;
use std::str::FromStr;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceCurve {
    /// Points on at least `k >= 3` of `n` lines, no plane holding more than
    /// `s`: `n^(3/2)/k^2 + n s/k^3 + n/k`.
    GuthKatz45,
    /// Points on at least two lines, no plane or regulus holding more than
    /// `s`: `n^(3/2) + n s`.
    GuthKatz211,
    /// Lines through at least `k` of `n` plane points: `n^2/k^3 + n/k`.
    SzemerediTrotter,
    /// Hyperplanes of `R^d` through at least `k` of `n` points:
    /// `n^d/k^(d+1) + n^(d-1)/k^(d-1)`.
    ElekesToth,
    /// Incidences of `n` points and `m` curves with `s` degrees of freedom:
    /// `n^(s/(2s-1)) m^((2s-2)/(2s-1)) + n + m`.
    PachSharir,
    /// Incidences of `n` lines and `m` reguli:
    /// `n^(4/7) m^(17/21) + n^(2/3) m^(2/3) + m + n`.
    AronovReguli,
}

pub const ALL_CURVES: [ReferenceCurve; 6] = [
    ReferenceCurve::GuthKatz45,
    ReferenceCurve::GuthKatz211,
    ReferenceCurve::SzemerediTrotter,
    ReferenceCurve::ElekesToth,
    ReferenceCurve::PachSharir,
    ReferenceCurve::AronovReguli,
];

/// Parameters a curve may read; unused ones are ignored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveParams {
    pub n: f64,
    pub m: f64,
    pub k: f64,
    pub s: f64,
    pub d: f64,
}

impl ReferenceCurve {
    pub fn name(&self) -> &'static str {
        match self {
            ReferenceCurve::GuthKatz45 => "GuthKatz45",
            ReferenceCurve::GuthKatz211 => "GuthKatz211",
            ReferenceCurve::SzemerediTrotter => "SzemerediTrotter",
            ReferenceCurve::ElekesToth => "ElekesToth",
            ReferenceCurve::PachSharir => "PachSharir",
            ReferenceCurve::AronovReguli => "AronovReguli",
        }
    }

    pub fn formula(&self) -> &'static str {
        match self {
            ReferenceCurve::GuthKatz45 => "n^(3/2)/k^2 + n*s/k^3 + n/k",
            ReferenceCurve::GuthKatz211 => "n^(3/2) + n*s",
            ReferenceCurve::SzemerediTrotter => "n^2/k^3 + n/k",
            ReferenceCurve::ElekesToth => "n^d/k^(d+1) + n^(d-1)/k^(d-1)",
            ReferenceCurve::PachSharir => "n^(s/(2s-1))*m^((2s-2)/(2s-1)) + n + m",
            ReferenceCurve::AronovReguli => "n^(4/7)*m^(17/21) + n^(2/3)*m^(2/3) + m + n",
        }
    }

    pub fn eval(&self, p: &CurveParams, constant: f64) -> f64 {
        let CurveParams { n, m, k, s, d } = *p;
        let v = match self {
            ReferenceCurve::GuthKatz45 => n.powf(1.5) / (k * k) + n * s / k.powi(3) + n / k,
            ReferenceCurve::GuthKatz211 => n.powf(1.5) + n * s,
            ReferenceCurve::SzemerediTrotter => n * n / k.powi(3) + n / k,
            ReferenceCurve::ElekesToth => {
                n.powf(d) / k.powf(d + 1.0) + n.powf(d - 1.0) / k.powf(d - 1.0)
            }
            ReferenceCurve::PachSharir => {
                n.powf(s / (2.0 * s - 1.0)) * m.powf((2.0 * s - 2.0) / (2.0 * s - 1.0)) + n + m
            }
            ReferenceCurve::AronovReguli => {
                n.powf(4.0 / 7.0) * m.powf(17.0 / 21.0)
                    + n.powf(2.0 / 3.0) * m.powf(2.0 / 3.0)
                    + m
                    + n
            }
        };
        constant * v
    }

    /// Upper bound on the number of witnesses with at least `k` members, for
    /// the incidence forms solved for `m` given that each curve carries `k`
    /// points: `n^s/k^(2s-1) + n/k` and `n^3/k^(21/4) + n^2/k^3 + n/k`.
    pub fn rich(&self, p: &CurveParams, constant: f64) -> f64 {
        let CurveParams { n, k, s, .. } = *p;
        match self {
            ReferenceCurve::PachSharir => constant * (n.powf(s) / k.powf(2.0 * s - 1.0) + n / k),
            ReferenceCurve::AronovReguli => {
                constant * (n.powi(3) / k.powf(21.0 / 4.0) + n * n / k.powi(3) + n / k)
            }
            _ => self.eval(p, constant),
        }
    }
}

impl fmt::Display for ReferenceCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReferenceCurve {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        ALL_CURVES
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CliError::Parse(format!("unknown curve {s:?}")))
    }
}

/// `x` to six significant digits.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&mag) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
