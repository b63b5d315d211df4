//! Gallai-Edmonds partition `(D, A, C)`, the contracted bipartite graph `G_AD` and
//! `rho(G)`.
//!
//! `D` is computed by the deletion criterion `nu(G - v) = nu(G)`: starting from one
//! maximum matching with `v`'s edge removed, a single augmentation attempt in
//! `G - v` decides whether the matching number drops.

use serde::Serialize;

use crate::graph::{indices, Graph, Vertex};
use crate::matching::{augment_once, maximum_matching, perfect_matching_within, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmondsDecomposition {
    #[serde(rename = "D")]
    pub d: Vec<Vertex>,
    #[serde(rename = "A")]
    pub a: Vec<Vertex>,
    #[serde(rename = "C")]
    pub c: Vec<Vertex>,
    /// Connected components of `G[D]`, ordered by smallest vertex.
    #[serde(rename = "components")]
    pub d_components: Vec<Vec<Vertex>>,
    #[serde(skip)]
    pub c_components: Vec<Vec<Vertex>>,
    /// Index into `d_components` for every vertex of `D`.
    #[serde(skip)]
    pub component_of: Vec<Option<usize>>,
    /// Bipartite graph: vertex `i < |A|` is `a[i]`, vertex `|A| + j` is component `j`.
    #[serde(skip)]
    pub g_ad: Graph,
    pub rho: usize,
}

impl GallaiEdmondsDecomposition {
    /// Indices of the `D`-components adjacent to `v`, sorted.
    pub fn adjacent_components(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        let mut out: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&w| self.component_of[w])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `nu(G - v) == nu(G)` given a maximum matching `m` of `g`.
fn deletion_keeps_nu(g: &Graph, m: &Matching, v: Vertex) -> bool {
    if !m.covers(v) {
        return true;
    }
    let mut alive = vec![true; g.vertex_count()];
    alive[v] = false;
    let mut trial = m.clone();
    trial.remove(v);
    augment_once(g, &alive, &mut trial)
}

pub fn decompose(g: &Graph) -> GallaiEdmondsDecomposition {
    let n = g.vertex_count();
    let m = maximum_matching(g);
    let in_d: Vec<bool> = g.vertices().map(|v| deletion_keeps_nu(g, &m, v)).collect();
    let d = indices(&in_d);
    let mut in_a = vec![false; n];
    for &v in &d {
        for &w in g.neighbors(v) {
            if !in_d[w] {
                in_a[w] = true;
            }
        }
    }
    let a = indices(&in_a);
    let c: Vec<Vertex> = g.vertices().filter(|&v| !in_d[v] && !in_a[v]).collect();
    let d_components = g.components_within(&d);
    let c_components = g.components_within(&c);
    let mut component_of = vec![None; n];
    for (j, comp) in d_components.iter().enumerate() {
        for &v in comp {
            component_of[v] = Some(j);
        }
    }
    let mut ad_edges = Vec::new();
    for (i, &v) in a.iter().enumerate() {
        let mut comps: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| component_of[w]).collect();
        comps.sort_unstable();
        comps.dedup();
        ad_edges.extend(comps.into_iter().map(|j| (i, a.len() + j)));
    }
    let g_ad = Graph::from_simple_edges(a.len() + d_components.len(), ad_edges);
    let rho = (0..a.len()).map(|i| g_ad.degree(i)).max().unwrap_or(1);
    debug_assert!(d_components.iter().all(|comp| {
        let (h, _) = g.induced_subgraph(comp);
        is_factor_critical(&h)
    }));
    GallaiEdmondsDecomposition {
        d,
        a,
        c,
        d_components,
        c_components,
        component_of,
        g_ad,
        rho,
    }
}

/// Every vertex-deleted subgraph has a perfect matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    let mut alive = vec![true; g.vertex_count()];
    g.vertices().all(|v| {
        alive[v] = false;
        let ok = perfect_matching_within(g, &alive).is_some();
        alive[v] = true;
        ok
    })
}

pub fn rho(g: &Graph) -> usize {
    decompose(g).rho
}
