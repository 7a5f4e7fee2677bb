//! Extraction of large cliques or independent sets from degeneracy
//! hypergraphs, with exact guarantees and reference oracles.

pub mod bounds;
mod certificate;
mod extract;
pub mod oracle;
mod spencer;
mod turan;

use crate::incidence::IncidenceError;

pub use bounds::{RootBound, Target};
pub use certificate::{verify_certificate, Certificate, Outcome};
pub use extract::{
    extract, lemma1_identity_check, target_for, BoundReport, EdgeCount, ExtractParams, Extraction,
    IsSource,
};
pub use oracle::{brute_alpha, brute_edges, brute_omega, is_degenerate_subset, BruteClique};
pub use spencer::{spencer_is, DEFAULT_MAX_TRIALS};
pub use turan::turan_is;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RamseyError {
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error("configuration of size {n} exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no trial met the guarantee after {trials} attempts")]
    TrialsExhausted { trials: u64 },
    #[error("extracted certificate failed verification")]
    VerificationFailed,
}
