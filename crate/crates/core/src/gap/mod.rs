//! The matching gap `mu(G) = nu(G) - beta(G)`.
//!
//! Four deciders answer "is `mu(G) >= k`?":
//!
//! * [`Decider::BruteForce`]: minimum maximal matching by exhaustive search.
//! * [`Decider::IndependentSets`]: an independent set `I` of size
//!   `|V| - 2(nu - k)` such that `G - I` has a perfect matching.
//! * [`Decider::Alg1`]: guesses over the Gallai-Edmonds structure, XP in `k + |A(G)|`
//!   ([`gap_decide_alg1`]).
//! * [`Decider::Alg2`]: guesses relative to one fixed maximum matching, XP in
//!   `k + rho(G)` ([`gap_decide_alg2`]).
//!
//! Every YES comes with a certificate that reassembles into a maximal matching of
//! `nu - k` edges and can be re-verified from scratch.

mod alg1;
mod alg2;
mod p4;

pub use alg1::{gap_decide_alg1, ComponentKind, ComponentMatching, GapCertificateA};
pub use alg2::{gap_decide_alg2, GapCertificateB};
pub use p4::{
    augmenting_p4s, equimatchability_obstruction, find_augmenting_p4_matching,
    is_almost_equimatchable, is_almost_equimatchable_exhaustive, is_equimatchable,
    AugmentingP4Witness,
};

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::{
    extend_maximal_preserving_coverage, is_maximal, maximum_matching,
    minimum_maximal_matching_oracle, perfect_matching_within, Matching,
};
use crate::subsets::for_each_independent_subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decider {
    BruteForce,
    IndependentSets,
    Alg1,
    Alg2,
}

impl Decider {
    pub const ALL: [Decider; 4] = [
        Decider::BruteForce,
        Decider::IndependentSets,
        Decider::Alg1,
        Decider::Alg2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Decider::BruteForce => "brute",
            Decider::IndependentSets => "is-enum",
            Decider::Alg1 => "alg1",
            Decider::Alg2 => "alg2",
        }
    }
}

impl std::str::FromStr for Decider {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Decider::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::InvalidParameter {
                family: "decider",
                message: format!("unknown decider `{s}` (brute, is-enum, alg1, alg2)"),
            })
    }
}

/// Witness for `mu(G) >= k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GapCertificate {
    BruteForce {
        minimum_maximal: Matching,
        matching: Matching,
    },
    IndependentSet {
        independent_set: Vec<Vertex>,
        matching: Matching,
    },
    Alg1(GapCertificateA),
    Alg2(GapCertificateB),
}

impl GapCertificate {
    /// The maximal matching of `nu - k` edges this certificate stands for.
    pub fn matching(&self, g: &Graph) -> Result<Matching> {
        match self {
            GapCertificate::BruteForce { matching, .. }
            | GapCertificate::IndependentSet { matching, .. } => Ok(matching.clone()),
            GapCertificate::Alg1(c) => c.reassemble(g),
            GapCertificate::Alg2(c) => c.reassemble(g),
        }
    }

    /// Re-checks the certificate against `g` and `k` without trusting any decider;
    /// returns the reassembled maximal matching.
    pub fn verify(&self, g: &Graph, k: usize) -> Result<Matching> {
        let m = match self {
            GapCertificate::BruteForce {
                minimum_maximal,
                matching,
            } => {
                if !is_maximal(g, minimum_maximal)? || minimum_maximal.len() > matching.len() {
                    return Err(Error::Certificate("bad minimum maximal matching".into()));
                }
                matching.clone()
            }
            GapCertificate::IndependentSet {
                independent_set,
                matching,
            } => {
                if !g.is_independent(independent_set) {
                    return Err(Error::Certificate("set is not independent".into()));
                }
                if matching.exposed() != *independent_set {
                    return Err(Error::Certificate(
                        "matching is not perfect on G - I".into(),
                    ));
                }
                matching.clone()
            }
            GapCertificate::Alg1(c) => c.verify(g, k)?,
            GapCertificate::Alg2(c) => c.verify(g, k)?,
        };
        check_gap_matching(g, &m, k)?;
        Ok(m)
    }
}

/// `m` is a maximal matching of `g` with exactly `nu(g) - k` edges.
pub(crate) fn check_gap_matching(g: &Graph, m: &Matching, k: usize) -> Result<()> {
    if !is_maximal(g, m)? {
        return Err(Error::Certificate("reassembled matching is not maximal".into()));
    }
    let nu = maximum_matching(g).len();
    if m.len() + k != nu {
        return Err(Error::Certificate(format!(
            "reassembled matching has {} edges, expected nu - k = {} - {k}",
            m.len(),
            nu
        )));
    }
    Ok(())
}

/// `nu(g) - beta(g) >= k` via the exhaustive minimum maximal matching.
pub fn gap_at_least_bruteforce(g: &Graph, k: usize) -> bool {
    gap_decide_bruteforce(g, k).is_some()
}

pub fn gap_decide_bruteforce(g: &Graph, k: usize) -> Option<GapCertificate> {
    let nu = maximum_matching(g).len();
    let (mmm, beta) = minimum_maximal_matching_oracle(g);
    if beta + k > nu {
        return None;
    }
    let matching =
        extend_maximal_preserving_coverage(g, &mmm, nu - k).expect("beta <= nu - k <= nu");
    Some(GapCertificate::BruteForce {
        minimum_maximal: mmm,
        matching,
    })
}

/// Tries every independent set `I` with `|V| - 2(nu - k)` vertices and accepts when
/// `G - I` has a perfect matching, which is then maximal with `nu - k` edges.
pub fn gap_decide_is_enum(g: &Graph, k: usize) -> Option<GapCertificate> {
    let nu = maximum_matching(g).len();
    let target_edges = nu.checked_sub(k)?;
    let size = g.vertex_count() - 2 * target_edges;
    let all: Vec<Vertex> = g.vertices().collect();
    let mut alive = vec![true; g.vertex_count()];
    let mut found = None;
    let _ = for_each_independent_subset(g, &all, size, |set| {
        for &v in set {
            alive[v] = false;
        }
        let pm = perfect_matching_within(g, &alive);
        for &v in set {
            alive[v] = true;
        }
        match pm {
            Some(matching) => {
                found = Some(GapCertificate::IndependentSet {
                    independent_set: set.to_vec(),
                    matching,
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

pub fn decide(g: &Graph, k: usize, decider: Decider) -> Option<GapCertificate> {
    match decider {
        Decider::BruteForce => gap_decide_bruteforce(g, k),
        Decider::IndependentSets => gap_decide_is_enum(g, k),
        Decider::Alg1 => gap_decide_alg1(g, k).map(GapCertificate::Alg1),
        Decider::Alg2 => gap_decide_alg2(g, k).map(GapCertificate::Alg2),
    }
}

/// `mu(g)` as the largest `k` the decider accepts, probing `k = 1, 2, ...` after the
/// polynomial equimatchability check has ruled out `mu = 0`.
pub fn compute_mu(g: &Graph, decider: Decider) -> usize {
    if g.edge_count() == 0 || is_equimatchable(g) {
        return 0;
    }
    let mut k = 1;
    while decide(g, k + 1, decider).is_some() {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{figure2_fixture, make_k_of, make_kp4};
    use crate::graph::{build_family, Family};

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(f, p).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let p4 = fam(Family::Path, &[4]);
        assert!(gap_at_least_bruteforce(&p4, 1));
        assert!(!gap_at_least_bruteforce(&p4, 2));
        let fig = figure2_fixture();
        assert!(gap_at_least_bruteforce(&fig, 2));
        assert!(!gap_at_least_bruteforce(&fig, 3));
        assert!(!gap_at_least_bruteforce(&fam(Family::Cycle, &[7]), 1));
    }

    #[test]
    fn is_enum_examples() {
        let p4 = fam(Family::Path, &[4]);
        match gap_decide_is_enum(&p4, 1).unwrap() {
            GapCertificate::IndependentSet { independent_set, matching } => {
                assert_eq!(independent_set, vec![0, 3]);
                assert_eq!(matching.edges(), vec![(1, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(gap_decide_is_enum(&fam(Family::Cycle, &[6]), 3).is_none());
        assert!(gap_decide_is_enum(&p4, 5).is_none());
        let kp3 = make_k_of(&fam(Family::Path, &[3])).unwrap();
        assert!(gap_decide_is_enum(&kp3, 2).is_some());
        assert!(gap_decide_is_enum(&kp3, 3).is_none());
    }

    #[test]
    fn mu_values() {
        for d in Decider::ALL {
            assert_eq!(compute_mu(&fam(Family::Cycle, &[7]), d), 0, "{d:?}");
            assert_eq!(compute_mu(&make_kp4(3).unwrap(), d), 3, "{d:?}");
            assert_eq!(compute_mu(&figure2_fixture(), d), 2, "{d:?}");
            assert_eq!(compute_mu(&Graph::empty(4), d), 0, "{d:?}");
        }
        let kp3 = make_k_of(&fam(Family::Path, &[3])).unwrap();
        assert_eq!(compute_mu(&kp3, Decider::IndependentSets), 2);
        assert_eq!(compute_mu(&kp3, Decider::Alg2), 2);
    }

    #[test]
    fn certificates_verify() {
        let fig = figure2_fixture();
        for d in Decider::ALL {
            for k in 0..=2 {
                let cert = decide(&fig, k, d).unwrap_or_else(|| panic!("{d:?} k={k}"));
                let m = cert.verify(&fig, k).unwrap();
                assert_eq!(m, cert.matching(&fig).unwrap());
                assert_eq!(m.len(), 5 - k);
            }
            assert!(decide(&fig, 3, d).is_none());
        }
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let p4 = fam(Family::Path, &[4]);
        let cert = GapCertificate::IndependentSet {
            independent_set: vec![0, 3],
            matching: Matching::from_edges(&p4, &[(1, 2)]).unwrap(),
        };
        assert!(cert.verify(&p4, 1).is_ok());
        assert!(cert.verify(&p4, 0).is_err());
        let bad = GapCertificate::IndependentSet {
            independent_set: vec![0, 1],
            matching: Matching::from_edges(&p4, &[(2, 3)]).unwrap(),
        };
        assert!(bad.verify(&p4, 1).is_err());
    }

    #[test]
    fn decider_names_round_trip() {
        for d in Decider::ALL {
            assert_eq!(d.name().parse::<Decider>().unwrap(), d);
        }
        assert!("fast".parse::<Decider>().is_err());
    }
}
