//! Maximal sets of lines with a common transversal.
//!
//! Let `T` be a set of at least four lines met by one real affine line.
//! Pick four lines of `T` that contain a basis of the row space of `T`'s
//! coefficient matrix when its rank is at most 4: their candidate space
//! equals that of `T`, so `T` lies in the set annihilated by it. When the
//! rank is 5 the transversal is the unique rational candidate of `T`, and it
//! is a root (or, for a flat pencil, the pencil member meeting a fifth line)
//! of any four independent rows. Scanning all 4-subsets therefore produces
//! every maximal stabbed set of size at least 4.

use std::collections::{BTreeMap, BTreeSet};

use super::enumerate::{enum_plane_witnesses, enum_projective_concurrency_witnesses};
use super::witness::{Witness, WitnessEntry, WitnessMap};
use super::{require_distinct, IncidenceError};
use crate::kernel::{
    annihilated_by, pencil_member_meeting, stabbed_by_line, transversal_system, Line3, SubspaceKey,
    TransversalKind,
};

fn preference(w: &Witness) -> u8 {
    match w {
        Witness::Line(_) => 0,
        Witness::Point(_) => 1,
        Witness::Plane(_) => 2,
        _ => 3,
    }
}

/// Stabbed sets of lines, one entry per distinct member set.
///
/// Each entry's witness is an explicit stabbing line when one is known, else
/// a common point or plane of the members, else the transversal family.
pub fn enum_transversal_witnesses(lines: &[Line3]) -> Result<WitnessMap, IncidenceError> {
    require_distinct(lines, IncidenceError::DuplicateLines)?;
    let n = lines.len();
    let mut line_candidates: BTreeSet<Line3> = BTreeSet::new();
    let mut family_candidates: BTreeSet<SubspaceKey> = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let four = [&lines[a], &lines[b], &lines[c], &lines[d]].map(Clone::clone);
                    let sys = transversal_system(&four);
                    match sys.kind {
                        TransversalKind::Empty => {}
                        TransversalKind::Single(w) => {
                            line_candidates.insert(w);
                        }
                        TransversalKind::Pair(u, v) => {
                            line_candidates.insert(u);
                            line_candidates.insert(v);
                        }
                        TransversalKind::Conjugate | TransversalKind::Family => {
                            family_candidates.insert(sys.key());
                        }
                        TransversalKind::FlatPencil => {
                            let key = sys.key();
                            let (u, v) = (&key.0[0], &key.0[1]);
                            for l in lines {
                                if !key.annihilates(l) {
                                    if let Some(w) = pencil_member_meeting(u, v, l) {
                                        line_candidates.insert(w);
                                    }
                                }
                            }
                            family_candidates.insert(key);
                        }
                    }
                }
            }
        }
    }

    let mut by_members: BTreeMap<Vec<usize>, Witness> = BTreeMap::new();
    let mut offer = |members: Vec<usize>, w: Witness| {
        if members.len() < 2 {
            return;
        }
        match by_members.get(&members) {
            Some(old) if (preference(old), old) <= (preference(&w), &w) => {}
            _ => {
                by_members.insert(members, w);
            }
        }
    };
    for w in line_candidates {
        offer(stabbed_by_line(&w, lines), Witness::Line(w));
    }
    for key in family_candidates {
        offer(
            annihilated_by(&key.0, lines),
            Witness::TransversalFamily(key),
        );
    }
    // A bundle through a point (possibly at infinity) is met by any other
    // line through that point; coplanar lines by any line of their plane.
    for e in enum_projective_concurrency_witnesses(lines)?.entries {
        offer(e.members, e.witness);
    }
    for e in enum_plane_witnesses(lines)?.entries {
        offer(e.members, e.witness);
    }
    Ok(WitnessMap::from_entries(
        by_members.into_iter().map(|(m, w)| WitnessEntry::new(w, m)),
    ))
}
