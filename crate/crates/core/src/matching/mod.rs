//! Matchings of a host [`Graph`]: maximum matchings, maximality, exhaustive
//! enumeration of maximal matchings and the coverage-preserving extension.

mod blossom;
mod cover;
mod enumerate;
mod extend;

pub use blossom::{maximum_matching, perfect_matching, perfect_matching_within};
pub(crate) use blossom::augment_once;
pub use cover::has_matching_covering;
pub use enumerate::{
    enumerate_maximal_matchings, for_each_maximal_matching, minimum_maximal_matching_oracle,
};
pub use extend::{extend_maximal_preserving_coverage, maximal_matching_of_size};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// A set of pairwise disjoint edges, stored as a mate array over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Validates that `edges` are pairwise disjoint edges of `g`.
    pub fn from_edges(g: &Graph, edges: &[Edge]) -> Result<Self> {
        let mut m = Matching::empty(g.vertex_count());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::NotAMatching(format!("{u}-{v} is not an edge")));
            }
            if m.covers(u) || m.covers(v) {
                return Err(Error::NotAMatching(format!("{u}-{v} shares a vertex")));
            }
            m.insert(u, v);
        }
        Ok(m)
    }

    pub(crate) fn insert(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(self.mate[u].is_none() && self.mate[v].is_none() && u != v);
        self.mate[u] = Some(v);
        self.mate[v] = Some(u);
    }

    pub(crate) fn remove(&mut self, u: Vertex) {
        if let Some(v) = self.mate[u].take() {
            self.mate[v] = None;
        }
    }

    /// Size of the vertex universe this matching lives in.
    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.mate.iter().all(Option::is_none)
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn covers_all(&self, set: &[Vertex]) -> bool {
        set.iter().all(|&v| self.covers(v))
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.mate[u] == Some(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// `V(M)`, sorted.
    pub fn covered(&self) -> Vec<Vertex> {
        (0..self.mate.len()).filter(|&v| self.covers(v)).collect()
    }

    /// `Exp(M)`, sorted.
    pub fn exposed(&self) -> Vec<Vertex> {
        (0..self.mate.len()).filter(|&v| !self.covers(v)).collect()
    }

    /// Union with a vertex-disjoint matching; `None` if they share a vertex.
    pub fn union(&self, other: &Matching) -> Option<Matching> {
        let mut out = self.clone();
        for (u, v) in other.edges() {
            if out.covers(u) || out.covers(v) {
                return None;
            }
            out.insert(u, v);
        }
        Some(out)
    }

    /// Relabels a matching of an induced subgraph back to the host, using the
    /// subgraph's vertex map.
    pub(crate) fn lift(&self, map: &[Vertex], n: usize) -> Matching {
        let mut out = Matching::empty(n);
        for (u, v) in self.edges() {
            out.insert(map[u], map[v]);
        }
        out
    }

    /// Checks that this is a matching of `g`.
    pub fn validate_in(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.vertex_count() {
            return Err(Error::NotAMatching(format!(
                "matching spans {} vertices, graph has {}",
                self.mate.len(),
                g.vertex_count()
            )));
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate[v] != Some(u) {
                    return Err(Error::NotAMatching(format!("inconsistent mate at {u}")));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::NotAMatching(format!("{u}-{v} is not an edge")));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Matching", 3)?;
        s.serialize_field("size", &self.len())?;
        s.serialize_field("edges", &self.edges())?;
        s.serialize_field("exposed", &self.exposed())?;
        s.end()
    }
}

/// No edge of `g` joins two vertices exposed by `m`. Assumes `m` is a matching of `g`.
pub(crate) fn exposed_is_independent(g: &Graph, m: &Matching) -> bool {
    g.edges().iter().all(|&(u, v)| m.covers(u) || m.covers(v))
}

/// `true` iff `m` is maximal in `g`, i.e. `Exp(m)` is independent.
pub fn is_maximal(g: &Graph, m: &Matching) -> Result<bool> {
    m.validate_in(g)?;
    Ok(exposed_is_independent(g, m))
}

/// Matching number, minimum maximal matching number and the derived gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingMetrics {
    pub nu: usize,
    pub beta: Option<usize>,
    pub mu: Option<usize>,
    /// `|V| - 2 nu`, twice the deficiency `sigma = |V|/2 - nu`.
    pub exposed_by_maximum: usize,
}

impl MatchingMetrics {
    /// `nu` always; `beta` and `mu` only when `with_beta` (exponential).
    pub fn compute(g: &Graph, with_beta: bool) -> Self {
        let nu = maximum_matching(g).len();
        let beta = with_beta.then(|| minimum_maximal_matching_oracle(g).1);
        MatchingMetrics {
            nu,
            beta,
            mu: beta.map(|b| nu - b),
            exposed_by_maximum: g.vertex_count() - 2 * nu,
        }
    }

    pub fn sigma(&self) -> f64 {
        self.exposed_by_maximum as f64 / 2.0
    }
}
