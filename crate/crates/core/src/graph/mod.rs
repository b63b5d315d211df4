//! Simple undirected graphs on the vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Every constructor normalizes the edge
//! list to sorted pairs `(u, v)` with `u < v`, so equality of two graphs is
//! equality of their labeled edge sets.

mod families;
mod io;
mod ops;

pub use families::{build_family, Family};
pub use io::{read_graph, write_graph};

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    #[serde(skip)]
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and vertices outside `0..n`.
    /// Edges may be given in either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, normalized))
    }

    /// Internal constructor for edge lists already known to be simple; sorts and dedups.
    pub(crate) fn from_simple_edges(n: usize, mut edges: Vec<Edge>) -> Self {
        for e in edges.iter_mut() {
            debug_assert!(e.0 != e.1 && e.0 < n && e.1 < n);
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(n, edges)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Union of the open neighborhoods of `set`, as a sorted list. May intersect `set`.
    pub fn neighborhood_of_set(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut mark = vec![false; self.n];
        for &v in set {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        indices(&mark)
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Subgraph induced by `keep` (any order, no repeats). Vertex `i` of the result is
    /// `keep_sorted[i]`; the returned map gives that original label.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut map: Vec<Vertex> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        (Graph::from_simple_edges(map.len(), edges), map)
    }

    /// Subgraph induced by the complement of `removed`, with the relabeling map.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components of the subgraph induced by `within`, each sorted, ordered by
    /// smallest vertex.
    pub fn components_within(&self, within: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut allowed = vec![false; self.n];
        for &v in within {
            allowed[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut order: Vec<Vertex> = within.to_vec();
        order.sort_unstable();
        let mut out = Vec::new();
        for &start in &order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if allowed[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let all: Vec<Vertex> = self.vertices().collect();
        self.components_within(&all)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::from([s]);
            dist[s] = 0;
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Positions of `true` entries.
pub(crate) fn indices(mask: &[bool]) -> Vec<Vertex> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// Checks that every entry of `set` is a vertex of a graph on `n` vertices.
pub(crate) fn check_vertices(set: &[Vertex], n: usize) -> Result<()> {
    match set.iter().find(|&&v| v >= n) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}
