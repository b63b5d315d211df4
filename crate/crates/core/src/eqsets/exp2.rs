//! The hypergraph of vertex sets exposed by second-best maximal matchings, and the
//! shortcut for expandable graphs with a perfect matching.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hitting_set::minimum_hitting_set;
use crate::invariants::{clique_number, vertex_cover_number};
use crate::matching::{for_each_maximal_matching, maximum_matching, perfect_matching, perfect_matching_within};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exp2Hypergraph {
    pub vertices: Vec<Vertex>,
    /// Sorted, each hyperedge sorted.
    pub hyperedges: Vec<Vec<Vertex>>,
}

impl Exp2Hypergraph {
    /// Common size of the hyperedges, `|V| - 2 nu + 2`.
    pub fn uniformity(&self) -> Option<usize> {
        self.hyperedges.first().map(Vec::len)
    }

    /// Smallest set meeting every hyperedge.
    pub fn minimum_hitting_set(&self) -> Vec<Vertex> {
        minimum_hitting_set(self.vertices.len(), &self.hyperedges)
            .expect("hyperedges are non-empty")
    }
}

/// `Exp(M)` for every maximal matching `M` of size `nu - 1`, deduplicated.
pub fn build_exp2(g: &Graph) -> Exp2Hypergraph {
    let nu = maximum_matching(g).len();
    let mut hyperedges = BTreeSet::new();
    if nu > 0 {
        let _ = for_each_maximal_matching(g, Some(nu - 1), |m| {
            if m.len() == nu - 1 {
                hyperedges.insert(m.exposed());
            }
            ControlFlow::Continue(())
        });
    }
    Exp2Hypergraph {
        vertices: g.vertices().collect(),
        hyperedges: hyperedges.into_iter().collect(),
    }
}

/// `eta(g)` as the minimum hitting set of the second-best exposed sets.
pub fn eta_via_hitting_set(g: &Graph) -> usize {
    build_exp2(g).minimum_hitting_set().len()
}

/// The first non-adjacent pair `(u, v)` with `g - u - v` lacking a perfect matching.
fn expandability_failure(g: &Graph) -> Option<(Vertex, Vertex)> {
    let mut alive = vec![true; g.vertex_count()];
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            if g.has_edge(u, v) {
                continue;
            }
            alive[u] = false;
            alive[v] = false;
            let ok = perfect_matching_within(g, &alive).is_some();
            alive[u] = true;
            alive[v] = true;
            if !ok {
                return Some((u, v));
            }
        }
    }
    None
}

/// Every pair of non-adjacent vertices leaves a graph with a perfect matching.
pub fn is_expandable(g: &Graph) -> bool {
    expandability_failure(g).is_none()
}

/// `eta(g) = tau(complement of g) = |V| - omega(g)` for expandable `g` with a perfect
/// matching. Both hypotheses are checked.
pub fn eta_expandable_shortcut(g: &Graph) -> Result<usize> {
    if perfect_matching(g).is_none() {
        return Err(Error::Hypothesis("graph has no perfect matching".into()));
    }
    if let Some((u, v)) = expandability_failure(g) {
        return Err(Error::Hypothesis(format!(
            "graph is not expandable: G - {u} - {v} has no perfect matching"
        )));
    }
    let eta = vertex_cover_number(&g.complement());
    debug_assert_eq!(eta, g.vertex_count() - clique_number(g));
    Ok(eta)
}
