use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::hypergraph::binomial;
use crate::kernel::{Circle2, HPoint3, Line3, Plane3, Quadric3, SubspaceKey};

/// The element certifying that a set of configuration elements is
/// degenerate: every member is incident to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Point(HPoint3),
    Line(Line3),
    Plane(Plane3),
    Circle(Circle2),
    RegulusRuling(Quadric3),
    /// `c0 + c1 x1 + ... + cd xd = 0`, canonical integer coefficients.
    Hyperplane(Vec<BigInt>),
    /// A subspace of Plücker space whose real Klein points are the
    /// transversals; members are met by every one of them.
    TransversalFamily(SubspaceKey),
}

impl Witness {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Witness::Point(_) => "point",
            Witness::Line(_) => "line",
            Witness::Plane(_) => "plane",
            Witness::Circle(_) => "circle",
            Witness::RegulusRuling(_) => "regulus",
            Witness::Hyperplane(_) => "hyperplane",
            Witness::TransversalFamily(_) => "transversal-family",
        }
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(":")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(p) => write!(f, "point{p}"),
            Witness::Line(l) => write!(f, "line{l}"),
            Witness::Plane(p) => write!(f, "plane({})", join(p.coeffs())),
            Witness::Circle(c) => write!(f, "circle({})", join(c.coeffs())),
            Witness::RegulusRuling(q) => write!(f, "regulus({})", join(q.coeffs())),
            Witness::Hyperplane(h) => write!(f, "hyperplane({})", join(h)),
            Witness::TransversalFamily(k) => {
                let rows: Vec<String> = k.0.iter().map(|r| join(r)).collect();
                write!(f, "family[{}]", rows.join(";"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEntry {
    pub witness: Witness,
    /// Sorted configuration indices incident to the witness.
    pub members: Vec<usize>,
    /// For plane witnesses of lines: the members grouped by direction.
    pub parallel_classes: Option<Vec<Vec<usize>>>,
}

impl WitnessEntry {
    pub fn new(witness: Witness, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        WitnessEntry {
            witness,
            members,
            parallel_classes: None,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Witness entries, deduplicated by canonical witness and sorted by it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessMap {
    pub entries: Vec<WitnessEntry>,
}

impl WitnessMap {
    /// Merges entries sharing a witness.
    pub fn from_entries(entries: impl IntoIterator<Item = WitnessEntry>) -> Self {
        let mut map: BTreeMap<Witness, WitnessEntry> = BTreeMap::new();
        for e in entries {
            match map.get_mut(&e.witness) {
                Some(existing) => {
                    existing.members.extend(e.members);
                    existing.members.sort_unstable();
                    existing.members.dedup();
                }
                None => {
                    map.insert(e.witness.clone(), e);
                }
            }
        }
        WitnessMap {
            entries: map.into_values().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry with the most members; lowest witness wins ties.
    pub fn largest(&self) -> Option<&WitnessEntry> {
        self.entries.iter().rev().max_by_key(|e| e.len())
    }

    pub fn max_size(&self) -> usize {
        self.largest().map_or(0, WitnessEntry::len)
    }

    /// `P_j`: number of witnesses with exactly `j` members.
    pub fn profile(&self) -> BTreeMap<usize, usize> {
        let mut p = BTreeMap::new();
        for e in &self.entries {
            *p.entry(e.len()).or_insert(0) += 1;
        }
        p
    }

    /// `P_{>=k}` for every `k` present.
    pub fn at_least_profile(&self) -> BTreeMap<usize, usize> {
        let p = self.profile();
        let mut out = BTreeMap::new();
        let mut acc = 0;
        for (&j, &c) in p.iter().rev() {
            acc += c;
            out.insert(j, acc);
        }
        out
    }

    /// `sum_j P_j * C(j, t)`.
    pub fn summed_t_subsets(&self, t: usize) -> u128 {
        self.entries.iter().map(|e| binomial(e.len(), t)).sum()
    }
}
