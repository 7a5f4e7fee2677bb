//! Certificate files.
//!
//! ```json
//! { "version": 1, "relation": "collinear", "exact": true,
//!   "outcome": "clique",
//!   "witness": { "kind": "line", "coords": ["1", "0", "0", "0", "0", "0"] },
//!   "members": [0, 1, 2] }
//! ```
//!
//! Witness coordinates are the canonical integer tuples of the kernel types;
//! a transversal family lists the rows of its reduced basis instead.

use linesramsey::ramsey::{Certificate, Outcome};
use linesramsey::{Circle2, HPoint3, Line3, Plane3, Quadric3, Relation, SubspaceKey, Witness};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CERT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub version: u32,
    pub relation: String,
    pub exact: bool,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub members: Vec<usize>,
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn witness_to_json(w: &Witness) -> WitnessJson {
    let coords = |v: &[BigInt]| WitnessJson {
        kind: w.kind_name().into(),
        coords: Some(strs(v)),
        rows: None,
    };
    match w {
        Witness::Point(p) => coords(p.coords()),
        Witness::Line(l) => coords(l.plucker()),
        Witness::Plane(p) => coords(p.coeffs()),
        Witness::Circle(c) => coords(c.coeffs()),
        Witness::RegulusRuling(q) => coords(q.coeffs()),
        Witness::Hyperplane(h) => coords(h),
        Witness::TransversalFamily(k) => WitnessJson {
            kind: w.kind_name().into(),
            coords: None,
            rows: Some(k.0.iter().map(|r| strs(r)).collect()),
        },
    }
}

fn ints<const N: usize>(v: &Option<Vec<String>>) -> Result<[BigInt; N], CliError> {
    let v = v
        .as_ref()
        .ok_or_else(|| CliError::Parse("witness needs coords".into()))?;
    let parsed: Vec<BigInt> = v
        .iter()
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Parse(format!("bad integer {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    parsed
        .try_into()
        .map_err(|_| CliError::Parse(format!("witness needs {N} coords")))
}

pub fn witness_from_json(w: &WitnessJson) -> Result<Witness, CliError> {
    let bad = |e: linesramsey::KernelError| CliError::Parse(format!("bad witness: {e}"));
    Ok(match w.kind.as_str() {
        "point" => Witness::Point(HPoint3::from_ints(ints(&w.coords)?).map_err(bad)?),
        "line" => Witness::Line(Line3::from_plucker(ints(&w.coords)?).map_err(bad)?),
        "plane" => Witness::Plane(Plane3::from_ints(ints(&w.coords)?).map_err(bad)?),
        "circle" => Witness::Circle(Circle2::from_ints(ints(&w.coords)?).map_err(bad)?),
        "regulus" => Witness::RegulusRuling(Quadric3::from_ints(ints(&w.coords)?).map_err(bad)?),
        "hyperplane" => {
            let v = w
                .coords
                .as_ref()
                .ok_or_else(|| CliError::Parse("witness needs coords".into()))?;
            let h: Vec<BigInt> = v
                .iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| CliError::Parse(format!("bad integer {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            Witness::Hyperplane(h)
        }
        "transversal-family" => {
            let rows = w
                .rows
                .as_ref()
                .ok_or_else(|| CliError::Parse("family needs rows".into()))?;
            let basis: Vec<[BigInt; 6]> = rows
                .iter()
                .map(|r| ints::<6>(&Some(r.clone())))
                .collect::<Result<_, _>>()?;
            Witness::TransversalFamily(SubspaceKey::new(&basis))
        }
        other => return Err(CliError::Parse(format!("unknown witness kind {other:?}"))),
    })
}

pub fn certificate_to_file(c: &Certificate) -> CertificateFile {
    let (outcome, witness) = match &c.outcome {
        Outcome::Clique { witness, .. } => ("clique", Some(witness_to_json(witness))),
        Outcome::IndependentSet { .. } => ("independent-set", None),
    };
    CertificateFile {
        version: CERT_VERSION,
        relation: c.relation.name().into(),
        exact: c.exact,
        outcome: outcome.into(),
        witness,
        members: c.members().to_vec(),
    }
}

/// Rebuilds a certificate; `relation` must be the one named in the file.
pub fn certificate_from_file(
    f: &CertificateFile,
    relation: Relation,
) -> Result<Certificate, CliError> {
    if f.version != CERT_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported certificate version {}",
            f.version
        )));
    }
    if f.relation != relation.name() {
        return Err(CliError::Mismatch(format!(
            "certificate is for {}, not {}",
            f.relation,
            relation.name()
        )));
    }
    let members = f.members.clone();
    let outcome = match (f.outcome.as_str(), &f.witness) {
        ("clique", Some(w)) => Outcome::Clique {
            witness: witness_from_json(w)?,
            members,
        },
        ("independent-set", None) => Outcome::IndependentSet { members },
        _ => return Err(CliError::Parse("malformed certificate outcome".into())),
    };
    Ok(Certificate {
        outcome,
        relation,
        exact: f.exact,
    })
}

pub fn serialize_certificate(c: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(&certificate_to_file(c)).expect("serializes");
    s.push('\n');
    s
}

pub fn parse_certificate_file(text: &str) -> Result<CertificateFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("certificate: {e}")))
}
