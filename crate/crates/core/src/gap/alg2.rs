//! The decider relative to one fixed maximum matching `M*`: guess `2k` saturated
//! vertices `I` and a set `Z` standing in for the exposed vertices next to `I`.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::{maximum_matching, perfect_matching_within, Matching};
use crate::subsets::for_each_independent_subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapCertificateB {
    pub k: usize,
    pub m_star: Matching,
    pub independent_set: Vec<Vertex>,
    pub z: Vec<Vertex>,
    /// `Exp(M*)` inside `N(I)`.
    pub t: Vec<Vertex>,
    /// `Exp(M*)` outside `N(I)`.
    pub u: Vec<Vertex>,
    /// Perfect matching of `G - (I + Z + U)`.
    pub h_matching: Matching,
}

fn reject<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Certificate(msg.into()))
}

/// `(T, U)`: the vertices exposed by `m_star` split by adjacency to `I`.
fn split_exposed(g: &Graph, m_star: &Matching, i_set: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut near_i = vec![false; g.vertex_count()];
    for v in g.neighborhood_of_set(i_set) {
        near_i[v] = true;
    }
    m_star.exposed().into_iter().partition(|&v| near_i[v])
}

impl GapCertificateB {
    pub fn reassemble(&self, g: &Graph) -> Result<Matching> {
        self.h_matching.validate_in(g)?;
        Ok(self.h_matching.clone())
    }

    /// Checks the five conditions against `g`, with `M*` re-checked to be maximum.
    pub fn verify(&self, g: &Graph, k: usize) -> Result<Matching> {
        let n = g.vertex_count();
        self.m_star.validate_in(g)?;
        if self.m_star.len() != maximum_matching(g).len() {
            return reject("M* is not a maximum matching");
        }
        let i_set = &self.independent_set;
        crate::graph::check_vertices(i_set, n)?;
        crate::graph::check_vertices(&self.z, n)?;
        if self.k != k || i_set.len() != 2 * k {
            return reject("I does not have 2k vertices");
        }
        if !self.m_star.covers_all(i_set) || !self.m_star.covers_all(&self.z) {
            return reject("I and Z must lie in V(M*)");
        }
        let (t, u) = split_exposed(g, &self.m_star, i_set);
        if t != self.t || u != self.u {
            return reject("T or U does not match Exp(M*) and N(I)");
        }
        let mut all: Vec<Vertex> = i_set.iter().chain(&self.z).chain(&u).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return reject("I, Z and U are not disjoint");
        }
        if !g.is_independent(&all) {
            return reject("I + Z + U is not independent");
        }
        if self.z.len() != t.len() {
            return reject("|Z| differs from |T|");
        }
        if self
            .z
            .iter()
            .any(|&z| t.iter().filter(|&&x| g.has_edge(z, x)).count() > 1)
        {
            return reject("a vertex of Z has two neighbours in T");
        }
        self.h_matching.validate_in(g)?;
        if self.h_matching.exposed() != all {
            return reject("H matching is not perfect on G - (I + Z + U)");
        }
        self.reassemble(g)
    }
}

/// Decides `mu(g) >= k` with `M*` the canonical maximum matching of `g`.
pub fn gap_decide_alg2(g: &Graph, k: usize) -> Option<GapCertificateB> {
    let n = g.vertex_count();
    let m_star = maximum_matching(g);
    let saturated = m_star.covered();
    let mut found = None;
    let _ = for_each_independent_subset(g, &saturated, 2 * k, |i_set| {
        let (t, u) = split_exposed(g, &m_star, i_set);
        let mut closed_i = vec![false; n];
        for &v in i_set {
            closed_i[v] = true;
        }
        for v in g.neighborhood_of_set(i_set) {
            closed_i[v] = true;
        }
        let candidates: Vec<Vertex> = saturated
            .iter()
            .copied()
            .filter(|&z| {
                !closed_i[z]
                    && t.iter().filter(|&&x| g.has_edge(z, x)).count() <= 1
                    && !u.iter().any(|&x| g.has_edge(z, x))
            })
            .collect();
        let mut alive = vec![true; n];
        for &v in i_set.iter().chain(&u) {
            alive[v] = false;
        }
        for_each_independent_subset(g, &candidates, t.len(), |z| {
            for &v in z {
                alive[v] = false;
            }
            let pm = perfect_matching_within(g, &alive);
            for &v in z {
                alive[v] = true;
            }
            match pm {
                Some(h_matching) => {
                    found = Some(GapCertificateB {
                        k,
                        m_star: m_star.clone(),
                        independent_set: i_set.to_vec(),
                        z: z.to_vec(),
                        t: t.clone(),
                        u: u.clone(),
                        h_matching,
                    });
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })
    });
    found
}
