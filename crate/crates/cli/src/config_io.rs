//! The JSON configuration format.
//!
//! ```json
//! { "version": 1, "kind": "lines3d",
//!   "elements": [[["0", "0", "0"], ["1", "1/2", "3"]]],
//!   "provenance": { "kind": "ruled-reguli", "k": 2, "seed": 1 } }
//! ```
//!
//! Rationals are strings `"p/q"` (`"p"` when `q = 1`). Points of `points2d`,
//! `points3d` and `hyperplanes` files are coordinate arrays; lines are pairs
//! of distinct affine points. A `hyperplanes` file also carries `dim` and the
//! given hyperplanes as coefficient arrays `[c0, c1, ..., cd]` of
//! `c0 + c1 x1 + ... + cd xd = 0`.

use linesramsey::generators::GenSpec;
use linesramsey::{Config, HPoint3, HyperplaneSet, Line3, Point2, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CONFIG_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub version: u32,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub elements: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplanes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<GenSpec>,
}

/// A parsed configuration with the optional hyperplane family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub config: Config,
    pub hyperplanes: Option<HyperplaneSet>,
    pub provenance: Option<GenSpec>,
}

pub fn rat_to_string(r: &Scalar) -> String {
    r.to_string()
}

pub fn parse_rat(s: &str) -> Result<Scalar, CliError> {
    let bad = || CliError::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

fn rats(v: &[Scalar]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

fn parse_vec(v: &[String], len: usize) -> Result<Vec<Scalar>, CliError> {
    if v.len() != len {
        return Err(CliError::Parse(format!(
            "expected {len} coordinates, found {}",
            v.len()
        )));
    }
    v.iter().map(|s| parse_rat(s)).collect()
}

fn affine3(p: &HPoint3) -> Result<Vec<Scalar>, CliError> {
    p.to_affine()
        .map(|a| a.to_vec())
        .ok_or_else(|| CliError::Parse("point at infinity cannot be written".into()))
}

/// Two distinct affine points of an affine line.
fn affine_pair(l: &Line3) -> Result<[Vec<Scalar>; 2], CliError> {
    let [a, b, c] = l.sample_points();
    let d: [BigInt; 4] = std::array::from_fn(|i| &a[i] - &b[i]);
    let pts: Vec<HPoint3> = [a, b, c, d]
        .into_iter()
        .filter_map(|x| HPoint3::from_ints(x).ok())
        .filter(HPoint3::is_affine)
        .collect();
    let at_infinity = || CliError::Parse("line at infinity cannot be written".into());
    let p = pts.first().ok_or_else(at_infinity)?;
    let q = pts.iter().find(|q| *q != p).ok_or_else(at_infinity)?;
    Ok([affine3(p)?, affine3(q)?])
}

pub fn to_file(loaded: &Loaded) -> Result<ConfigFile, CliError> {
    let (kind, dim, elements): (&str, Option<usize>, Vec<serde_json::Value>) = match &loaded.config
    {
        Config::Points2(p) => (
            "points2d",
            None,
            p.iter()
                .map(|q| serde_json::json!(rats(&[q.x.clone(), q.y.clone()])))
                .collect(),
        ),
        Config::Points3(p) => (
            "points3d",
            None,
            p.iter()
                .map(|q| affine3(q).map(|a| serde_json::json!(rats(&a))))
                .collect::<Result<_, _>>()?,
        ),
        Config::Lines3(ls) => (
            "lines3d",
            None,
            ls.iter()
                .map(|l| affine_pair(l).map(|[a, b]| serde_json::json!([rats(&a), rats(&b)])))
                .collect::<Result<_, _>>()?,
        ),
        Config::PointsD { dim, points } => (
            "hyperplanes",
            Some(*dim),
            points.iter().map(|p| serde_json::json!(rats(p))).collect(),
        ),
    };
    let hyperplanes = loaded.hyperplanes.as_ref().map(|hs| {
        hs.hyperplanes
            .iter()
            .map(|h| h.iter().map(ToString::to_string).collect())
            .collect()
    });
    Ok(ConfigFile {
        version: CONFIG_VERSION,
        kind: kind.into(),
        dim,
        elements: serde_json::Value::Array(elements),
        hyperplanes,
        provenance: loaded.provenance.clone(),
    })
}

pub fn from_file(file: &ConfigFile) -> Result<Loaded, CliError> {
    if file.version != CONFIG_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported config version {}",
            file.version
        )));
    }
    let parse_elems = || -> Result<Vec<serde_json::Value>, CliError> {
        match &file.elements {
            serde_json::Value::Array(a) => Ok(a.clone()),
            _ => Err(CliError::Parse("elements must be an array".into())),
        }
    };
    let strings = |v: &serde_json::Value| -> Result<Vec<String>, CliError> {
        serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(e.to_string()))
    };
    let config = match file.kind.as_str() {
        "points2d" => Config::Points2(
            parse_elems()?
                .iter()
                .map(|v| {
                    let c = parse_vec(&strings(v)?, 2)?;
                    Ok(Point2::new(c[0].clone(), c[1].clone()))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        "points3d" => Config::Points3(
            parse_elems()?
                .iter()
                .map(|v| {
                    let c = parse_vec(&strings(v)?, 3)?;
                    Ok(HPoint3::affine(c[0].clone(), c[1].clone(), c[2].clone()))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        "lines3d" => Config::Lines3(
            parse_elems()?
                .iter()
                .map(|v| {
                    let pair: Vec<serde_json::Value> = serde_json::from_value(v.clone())
                        .map_err(|e| CliError::Parse(e.to_string()))?;
                    if pair.len() != 2 {
                        return Err(CliError::Parse("a line needs exactly two points".into()));
                    }
                    let a = parse_vec(&strings(&pair[0])?, 3)?;
                    let b = parse_vec(&strings(&pair[1])?, 3)?;
                    let pa = HPoint3::affine(a[0].clone(), a[1].clone(), a[2].clone());
                    let pb = HPoint3::affine(b[0].clone(), b[1].clone(), b[2].clone());
                    Line3::through(&pa, &pb).map_err(|e| CliError::Parse(format!("bad line: {e}")))
                })
                .collect::<Result<_, CliError>>()?,
        ),
        "hyperplanes" => {
            let dim = file
                .dim
                .ok_or_else(|| CliError::Parse("hyperplanes files need dim".into()))?;
            Config::PointsD {
                dim,
                points: parse_elems()?
                    .iter()
                    .map(|v| parse_vec(&strings(v)?, dim))
                    .collect::<Result<_, _>>()?,
            }
        }
        other => return Err(CliError::Parse(format!("unknown kind {other:?}"))),
    };
    let hyperplanes = match (&file.hyperplanes, &config) {
        (Some(hs), Config::PointsD { dim, .. }) => {
            let rows: Vec<Vec<Scalar>> = hs
                .iter()
                .map(|h| parse_vec(h, dim + 1))
                .collect::<Result<_, _>>()?;
            Some(HyperplaneSet::new(*dim, &rows).map_err(|e| CliError::Parse(e.to_string()))?)
        }
        (Some(_), _) => {
            return Err(CliError::Parse(
                "only hyperplanes files may list hyperplanes".into(),
            ))
        }
        (None, _) => None,
    };
    Ok(Loaded {
        config,
        hyperplanes,
        provenance: file.provenance.clone(),
    })
}

pub fn parse_config(text: &str) -> Result<Loaded, CliError> {
    let file: ConfigFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("config: {e}")))?;
    from_file(&file)
}

pub fn serialize_config(loaded: &Loaded) -> Result<String, CliError> {
    let file = to_file(loaded)?;
    let mut s = serde_json::to_string_pretty(&file).expect("config serializes");
    s.push('\n');
    Ok(s)
}

pub fn read_config(path: &std::path::Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("3/6").unwrap(), Scalar::new(1.into(), 2.into()));
        assert_eq!(rat_to_string(&parse_rat("-4/2").unwrap()), "-2");
        assert_eq!(rat_to_string(&parse_rat("2/-6").unwrap()), "-1/3");
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn lines_round_trip() {
        let l = Line3::through_affine([0, 0, 0], [1, 2, 3]).unwrap();
        let far = Line3::through(
            &HPoint3::affine_i(1, 1, 1),
            &HPoint3::ideal([1.into(), 0.into(), 0.into()]).unwrap(),
        )
        .unwrap();
        let loaded = Loaded {
            config: Config::Lines3(vec![l, far]),
            hyperplanes: None,
            provenance: None,
        };
        let text = serialize_config(&loaded).unwrap();
        assert_eq!(parse_config(&text).unwrap(), loaded);
        assert_eq!(
            serialize_config(&parse_config(&text).unwrap()).unwrap(),
            text
        );
    }
}
