//! Exact rational linear algebra and the geometric predicates on points,
//! planes, lines, circles and quadrics.

pub mod linalg;
mod predicates;
mod quadric;
mod transversal;
mod types;

pub use linalg::{Inertia, Scalar};
pub use predicates::{
    circle_through, classify_pair, collinear3, cross4, det4, klein_form, on_circle, plane_of_lines,
    plane_through,
};
pub use quadric::{
    line_on_quadric, quadric_closed_form, quadric_through_skew_triple, ReguliBase, ReguliKey,
};
pub use transversal::{
    annihilated_by, classify_subspace, pencil_member_meeting, stabbed_by_line, stabbed_set,
    transversal_system, SubspaceKey, TransversalKind, TransversalSystem,
};
pub use types::{
    klein_pairing, klein_self, Circle2, HPoint3, Line3, PairClass, Plane3, Point2, Quadric3,
    PLUCKER_INDEX, QUADRIC_MONOMIALS,
};

/// Plücker line through two points; same as [`Line3::through`].
pub fn plucker_from_points(a: &HPoint3, b: &HPoint3) -> Result<Line3, KernelError> {
    Line3::through(a, b)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("generator points are projectively equal")]
    IdenticalPoints,
    #[error("zero vector has no projective meaning")]
    ZeroVector,
    #[error("lines are identical")]
    IdenticalLines,
    #[error("duplicate points")]
    DuplicatePoints,
    #[error("lines are not pairwise skew")]
    NotPairwiseSkew,
    #[error("quadric system has rank {0}, expected 9")]
    RankDeficient(usize),
    #[error("transversal system has no affine real solution")]
    EmptyWitness,
    #[error("vector does not lie on the Klein quadric")]
    NotOnKlein,
}
