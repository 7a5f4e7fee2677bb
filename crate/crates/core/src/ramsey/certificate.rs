//! Extraction results and their independent verification.

use num_traits::Zero;

use crate::incidence::{
    hyperplane_eval, intersection_graph, witness_map, Config, LineMode, Relation, Witness,
};
use crate::kernel::{
    classify_pair, classify_subspace, collinear3, klein_form, line_on_quadric, on_circle, PairClass,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// `members` are all incident to `witness`.
    Clique {
        witness: Witness,
        members: Vec<usize>,
    },
    /// No degenerate `t`-subset lies inside `members`.
    IndependentSet { members: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub outcome: Outcome,
    pub relation: Relation,
    /// False when the clique search may have missed larger stabbed sets.
    pub exact: bool,
}

impl Certificate {
    pub fn members(&self) -> &[usize] {
        match &self.outcome {
            Outcome::Clique { members, .. } | Outcome::IndependentSet { members } => members,
        }
    }

    pub fn size(&self) -> usize {
        self.members().len()
    }

    pub fn is_clique(&self) -> bool {
        matches!(self.outcome, Outcome::Clique { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Clique { witness, .. } => Some(witness),
            Outcome::IndependentSet { .. } => None,
        }
    }
}

fn well_formed(members: &[usize], n: usize) -> bool {
    members.windows(2).all(|w| w[0] < w[1]) && members.iter().all(|&i| i < n)
}

/// Checks a certificate against the configuration from scratch.
pub fn verify_certificate(cert: &Certificate, config: &Config) -> bool {
    let n = config.len();
    let relation = &cert.relation;
    match &cert.outcome {
        Outcome::Clique { witness, members } => {
            well_formed(members, n) && verify_clique(relation, config, witness, members)
        }
        Outcome::IndependentSet { members } => {
            well_formed(members, n) && verify_independent(relation, config, members)
        }
    }
}

fn verify_clique(
    relation: &Relation,
    config: &Config,
    witness: &Witness,
    members: &[usize],
) -> bool {
    use Relation as R;
    use Witness as W;
    match (relation, config, witness) {
        (R::CollinearPoints3D, Config::Points3(p), W::Line(l)) => {
            members.iter().all(|&i| l.contains_point(&p[i]))
        }
        (R::PointsOnGivenHyperplanes(hs), Config::PointsD { points, .. }, W::Hyperplane(h)) => {
            hs.hyperplanes.contains(h)
                && members
                    .iter()
                    .all(|&i| hyperplane_eval(h, &points[i]).is_zero())
        }
        (R::ConcyclicPoints2D, Config::Points2(p), W::Circle(c)) => {
            c.is_proper() && members.iter().all(|&i| on_circle(&p[i], c))
        }
        (_, Config::Lines3(l), _) => {
            let on = |pred: &dyn Fn(usize) -> bool| members.iter().all(|&i| pred(i));
            match (relation, witness) {
                (R::LineIntersection(LineMode::Affine) | R::ConcurrentLines, W::Point(x)) => {
                    x.is_affine() && on(&|i| l[i].contains_point(x))
                }
                (R::LineIntersection(LineMode::Affine), W::Plane(pl)) => {
                    on(&|i| pl.contains_line(&l[i]))
                        && members.iter().enumerate().all(|(a, &i)| {
                            members[a + 1..].iter().all(|&j| {
                                matches!(classify_pair(&l[i], &l[j]), PairClass::Intersecting(_))
                            })
                        })
                }
                (R::LineIntersection(LineMode::Projective) | R::StabbedLines, W::Point(x)) => {
                    on(&|i| l[i].contains_point(x))
                }
                (R::LineIntersection(LineMode::Projective) | R::StabbedLines, W::Plane(pl)) => {
                    on(&|i| pl.contains_line(&l[i]))
                }
                (R::StabbedLines, W::Line(w)) => {
                    w.is_affine() && on(&|i| klein_form(w, &l[i]).is_zero())
                }
                (R::StabbedLines, W::TransversalFamily(key)) => {
                    classify_subspace(key.0.clone()).has_transversal()
                        && on(&|i| key.annihilates(&l[i]))
                }
                (R::CoRegulusLines, W::RegulusRuling(q)) => {
                    on(&|i| line_on_quadric(&l[i], q))
                        && members.iter().enumerate().all(|(a, &i)| {
                            members[a + 1..]
                                .iter()
                                .all(|&j| !klein_form(&l[i], &l[j]).is_zero())
                        })
                }
                _ => false,
            }
        }
        _ => false,
    }
}

fn verify_independent(relation: &Relation, config: &Config, members: &[usize]) -> bool {
    let sub = config.restrict(members);
    match (relation, &sub) {
        (Relation::LineIntersection(mode), Config::Lines3(l)) => {
            intersection_graph(l, *mode).is_ok_and(|g| g.m() == 0)
        }
        (Relation::CollinearPoints3D, Config::Points3(p)) => {
            // Cheap direct check of all triples.
            let k = p.len();
            (0..k).all(|a| (a + 1..k).all(|b| (b + 1..k).all(|c| !collinear3(&p[a], &p[b], &p[c]))))
        }
        _ => witness_map(relation, &sub).is_ok_and(|m| m.max_size() < relation.t()),
    }
}
