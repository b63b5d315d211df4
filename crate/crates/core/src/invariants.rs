//! Independence, vertex cover and clique numbers by exact search.

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::hitting_set::minimum_hitting_set;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub alpha: Option<usize>,
    pub tau: Option<usize>,
    pub omega: Option<usize>,
}

impl GraphInvariants {
    pub fn compute(g: &Graph) -> Self {
        GraphInvariants {
            alpha: Some(independence_number(g)),
            tau: Some(vertex_cover_number(g)),
            omega: Some(clique_number(g)),
        }
    }
}

fn mis(g: &Graph, candidates: &mut Vec<bool>, remaining: usize, current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if current.len() + remaining <= best.len() {
        return;
    }
    if remaining == 0 {
        *best = current.clone();
        return;
    }
    // branch on a candidate of maximum residual degree
    let mut pick = None;
    let mut pick_deg = 0;
    for v in g.vertices().filter(|&v| candidates[v]) {
        let d = g.neighbors(v).iter().filter(|&&w| candidates[w]).count();
        if pick.is_none() || d > pick_deg {
            pick = Some(v);
            pick_deg = d;
        }
    }
    let v = pick.expect("remaining > 0");
    if pick_deg == 0 {
        let isolated: Vec<Vertex> = g.vertices().filter(|&w| candidates[w]).collect();
        let len = current.len();
        current.extend(isolated);
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(len);
        return;
    }
    // include v
    let removed: Vec<Vertex> = std::iter::once(v)
        .chain(g.neighbors(v).iter().copied())
        .filter(|&w| candidates[w])
        .collect();
    for &w in &removed {
        candidates[w] = false;
    }
    current.push(v);
    mis(g, candidates, remaining - removed.len(), current, best);
    current.pop();
    for &w in &removed {
        candidates[w] = true;
    }
    // exclude v
    candidates[v] = false;
    mis(g, candidates, remaining - 1, current, best);
    candidates[v] = true;
}

/// A maximum independent set, sorted.
pub fn maximum_independent_set(g: &Graph) -> Vec<Vertex> {
    let mut candidates = vec![true; g.vertex_count()];
    let mut best = Vec::new();
    mis(g, &mut candidates, g.vertex_count(), &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A minimum vertex cover, computed as a minimum hitting set of the edge set.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<Vertex> {
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    minimum_hitting_set(g.vertex_count(), &edges).expect("edges are non-empty sets")
}

pub fn vertex_cover_number(g: &Graph) -> usize {
    minimum_vertex_cover(g).len()
}

pub fn maximum_clique(g: &Graph) -> Vec<Vertex> {
    maximum_independent_set(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}
