//! Common transversals of a set of lines.
//!
//! A line `w` meets line `l` iff `w` lies on the hyperplane of 5-space given
//! by the Plücker coefficients of `l`. The candidates for a common
//! transversal form the null space `S` of the coefficient matrix, and the
//! actual transversals are the real points of `S` on the Klein quadric that
//! are not lines at infinity.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{
    canonical_int_vec, canonical_ints, exact_sqrt, inertia, int_null_space, int_rref, null_space,
    to_scalars, Scalar,
};
use super::types::{coefficients_of, is_affine_plucker, klein_pairing, Line3};
use super::KernelError;

/// Shape of the set of real affine transversals of a line set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalKind {
    Empty,
    /// Exactly one transversal.
    Single(Line3),
    /// Exactly two transversals, both rational.
    Pair(Line3, Line3),
    /// Two real transversals with conjugate irrational Plücker coordinates.
    Conjugate,
    /// Every point of a 2-dimensional candidate space is a line.
    FlatPencil,
    /// Infinitely many transversals from a candidate space of dimension >= 3.
    Family,
}

/// A canonical basis of a linear subspace of Plücker space, usable as a
/// hash key: the reduced row echelon form scaled to coprime integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceKey(pub Vec<[BigInt; 6]>);

impl SubspaceKey {
    pub fn new(basis: &[[BigInt; 6]]) -> Self {
        let rows: Vec<Vec<BigInt>> = basis.iter().map(|v| v.to_vec()).collect();
        SubspaceKey(int_rref(&rows, 6).0.into_iter().map(to_six).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// True iff every vector of the subspace pairs to zero with `l`.
    pub fn annihilates(&self, l: &Line3) -> bool {
        self.0
            .iter()
            .all(|u| klein_pairing(u, l.plucker()).is_zero())
    }
}

fn to_six(v: Vec<BigInt>) -> [BigInt; 6] {
    v.try_into().expect("six entries")
}

#[derive(Clone, Debug)]
pub struct TransversalSystem {
    /// Integer basis of the candidate space `S`.
    pub basis: Vec<[BigInt; 6]>,
    /// Klein pairing restricted to `basis`.
    pub gram: Vec<Vec<BigInt>>,
    pub kind: TransversalKind,
    /// The subspace whose real Klein points are all the transversals
    /// (`S` itself, or its radical when the form is semidefinite).
    pub witness_space: Vec<[BigInt; 6]>,
}

impl TransversalSystem {
    pub fn has_transversal(&self) -> bool {
        self.kind != TransversalKind::Empty
    }

    pub fn key(&self) -> SubspaceKey {
        SubspaceKey::new(&self.witness_space)
    }
}

pub fn transversal_system(lines: &[Line3]) -> TransversalSystem {
    let rows: Vec<Vec<BigInt>> = lines.iter().map(|l| l.coefficients().to_vec()).collect();
    let basis: Vec<[BigInt; 6]> = int_null_space(&rows, 6).into_iter().map(to_six).collect();
    classify_subspace(basis)
}

fn gram_of(basis: &[[BigInt; 6]]) -> Vec<Vec<BigInt>> {
    basis
        .iter()
        .map(|u| basis.iter().map(|v| klein_pairing(u, v)).collect())
        .collect()
}

fn combine(a: &BigInt, u: &[BigInt; 6], b: &BigInt, v: &[BigInt; 6]) -> Option<[BigInt; 6]> {
    let w: Vec<BigInt> = (0..6).map(|i| a * &u[i] + b * &v[i]).collect();
    canonical_int_vec(w).map(to_six)
}

fn affine_line(w: [BigInt; 6]) -> Option<Line3> {
    if !is_affine_plucker(&w) {
        return None;
    }
    Some(Line3::from_plucker(w).expect("root lies on the Klein quadric"))
}

fn all_ideal(basis: &[[BigInt; 6]]) -> bool {
    basis.iter().all(|u| !is_affine_plucker(u))
}

/// Classifies the real affine Klein points of the span of `basis`.
pub fn classify_subspace(basis: Vec<[BigInt; 6]>) -> TransversalSystem {
    let gram = gram_of(&basis);
    let (kind, witness_space) = match basis.len() {
        0 => (TransversalKind::Empty, Vec::new()),
        1 => {
            let kind = if gram[0][0].is_zero() {
                affine_line(basis[0].clone())
                    .map_or(TransversalKind::Empty, TransversalKind::Single)
            } else {
                TransversalKind::Empty
            };
            (kind, basis.clone())
        }
        2 => (classify_pencil(&basis, &gram), basis.clone()),
        _ => classify_large(&basis, &gram),
    };
    TransversalSystem {
        basis,
        gram,
        kind,
        witness_space,
    }
}

fn classify_pencil(basis: &[[BigInt; 6]], g: &[Vec<BigInt>]) -> TransversalKind {
    let (u, v) = (&basis[0], &basis[1]);
    let (g00, g01, g11) = (&g[0][0], &g[0][1], &g[1][1]);
    if g00.is_zero() && g01.is_zero() && g11.is_zero() {
        return if all_ideal(basis) {
            TransversalKind::Empty
        } else {
            TransversalKind::FlatPencil
        };
    }
    // Roots of g00 a^2 + 2 g01 a b + g11 b^2 for the point a u + b v.
    let disc = g01 * g01 - g00 * g11;
    if disc.is_negative() {
        return TransversalKind::Empty;
    }
    let roots: Vec<[BigInt; 6]> = if disc.is_zero() {
        let r = if g00.is_zero() {
            u.clone()
        } else {
            combine(&-g01, u, g00, v).expect("independent basis")
        };
        vec![r]
    } else if let Some(s) = exact_sqrt(&disc) {
        if g00.is_zero() {
            let two_g01: BigInt = g01 * 2;
            vec![
                u.clone(),
                combine(g11, u, &-two_g01, v).expect("independent basis"),
            ]
        } else {
            vec![
                combine(&(-g01 + &s), u, g00, v).expect("independent basis"),
                combine(&(-g01 - &s), u, g00, v).expect("independent basis"),
            ]
        }
    } else {
        return if all_ideal(basis) {
            TransversalKind::Empty
        } else {
            TransversalKind::Conjugate
        };
    };
    let mut lines: Vec<Line3> = roots.into_iter().filter_map(affine_line).collect();
    lines.sort();
    lines.dedup();
    match lines.len() {
        0 => TransversalKind::Empty,
        1 => TransversalKind::Single(lines.pop().expect("one root")),
        _ => {
            let b = lines.pop().expect("two roots");
            let a = lines.pop().expect("two roots");
            TransversalKind::Pair(a, b)
        }
    }
}

fn classify_large(basis: &[[BigInt; 6]], g: &[Vec<BigInt>]) -> (TransversalKind, Vec<[BigInt; 6]>) {
    let gq: Vec<Vec<Scalar>> = g.iter().map(|r| to_scalars(r)).collect();
    let sig = inertia(&gq);
    if sig.is_indefinite() {
        let kind = if all_ideal(basis) {
            TransversalKind::Empty
        } else {
            TransversalKind::Family
        };
        return (kind, basis.to_vec());
    }
    if sig.zero == 0 {
        return (TransversalKind::Empty, basis.to_vec());
    }
    // Semidefinite: the real zeros of the form are exactly its radical.
    let radical: Vec<[BigInt; 6]> = null_space(&gq, basis.len())
        .iter()
        .map(|c| {
            let w: Vec<Scalar> = (0..6)
                .map(|k| {
                    c.iter()
                        .zip(basis)
                        .map(|(ci, u)| ci * Scalar::from_integer(u[k].clone()))
                        .sum()
                })
                .collect();
            to_six(canonical_ints(&w).expect("independent basis"))
        })
        .collect();
    let kind = match radical.len() {
        1 => {
            affine_line(radical[0].clone()).map_or(TransversalKind::Empty, TransversalKind::Single)
        }
        2 if !all_ideal(&radical) => TransversalKind::FlatPencil,
        _ if !all_ideal(&radical) => TransversalKind::Family,
        _ => TransversalKind::Empty,
    };
    (kind, radical)
}

/// The single member of the line pencil `span(u, v)` meeting `l`, when `l`
/// is not met by the whole pencil.
pub fn pencil_member_meeting(u: &[BigInt; 6], v: &[BigInt; 6], l: &Line3) -> Option<Line3> {
    let bu = klein_pairing(u, l.plucker());
    let bv = klein_pairing(v, l.plucker());
    let w = combine(&bv, u, &-bu, v)?;
    affine_line(w)
}

/// Indices of the lines met by the line with Plücker vector `w`.
pub fn stabbed_by_line(w: &Line3, lines: &[Line3]) -> Vec<usize> {
    let coeffs = coefficients_of(w.plucker());
    lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            l.plucker()
                .iter()
                .zip(&coeffs)
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        })
        .map(|(i, _)| i)
        .collect()
}

/// Indices of the lines met by every line of the witness space.
pub fn annihilated_by(space: &[[BigInt; 6]], lines: &[Line3]) -> Vec<usize> {
    lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            space
                .iter()
                .all(|u| klein_pairing(u, l.plucker()).is_zero())
        })
        .map(|(i, _)| i)
        .collect()
}

/// Lines of `all_lines` stabbed by the system's witness.
///
/// A rational witness gives its exact stabbed set. For a pair of rational
/// roots the larger stabbed set is returned (lowest index on ties). For
/// conjugate roots, flat pencils and families, the lines met by the whole
/// witness space are returned; these are met by every transversal.
pub fn stabbed_set(
    system: &TransversalSystem,
    all_lines: &[Line3],
) -> Result<Vec<usize>, KernelError> {
    match &system.kind {
        TransversalKind::Empty => Err(KernelError::EmptyWitness),
        TransversalKind::Single(w) => Ok(stabbed_by_line(w, all_lines)),
        TransversalKind::Pair(a, b) => {
            let sa = stabbed_by_line(a, all_lines);
            let sb = stabbed_by_line(b, all_lines);
            Ok(if sb.len() > sa.len() { sb } else { sa })
        }
        TransversalKind::Conjugate | TransversalKind::FlatPencil | TransversalKind::Family => {
            Ok(annihilated_by(&system.witness_space, all_lines))
        }
    }
}
