//! Brute-force oracles and graph pools shared by the integration tests. Everything
//! here works on bitmasks and never calls the library's algorithms.

#![allow(dead_code)]

use equimatch::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn mask_of(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// A matching seen by the oracle: its edges and the mask of covered vertices.
#[derive(Debug, Clone)]
pub struct OracleMatching {
    pub edges: Vec<(usize, usize)>,
    pub covered: u32,
}

impl OracleMatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn exposed(&self, n: usize) -> u32 {
        full(n) & !self.covered
    }
}

pub fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Every matching of `g`, by include/exclude over the edge list.
pub fn all_matchings(g: &Graph) -> Vec<OracleMatching> {
    fn walk(
        edges: &[(usize, usize)],
        i: usize,
        cur: &mut Vec<(usize, usize)>,
        covered: u32,
        out: &mut Vec<OracleMatching>,
    ) {
        if i == edges.len() {
            out.push(OracleMatching {
                edges: cur.clone(),
                covered,
            });
            return;
        }
        walk(edges, i + 1, cur, covered, out);
        let (u, v) = edges[i];
        let e = 1 << u | 1 << v;
        if covered & e == 0 {
            cur.push((u, v));
            walk(edges, i + 1, cur, covered | e, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(g.edges(), 0, &mut Vec::new(), 0, &mut out);
    out
}

pub fn is_maximal_mask(g: &Graph, covered: u32) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| covered >> u & 1 == 1 || covered >> v & 1 == 1)
}

pub fn all_maximal_matchings(g: &Graph) -> Vec<OracleMatching> {
    all_matchings(g)
        .into_iter()
        .filter(|m| is_maximal_mask(g, m.covered))
        .collect()
}

pub fn nu(g: &Graph) -> usize {
    all_matchings(g).iter().map(OracleMatching::len).max().unwrap()
}

pub fn beta(g: &Graph) -> usize {
    all_maximal_matchings(g)
        .iter()
        .map(OracleMatching::len)
        .min()
        .unwrap()
}

pub fn mu(g: &Graph) -> usize {
    nu(g) - beta(g)
}

pub fn maximum_matchings(g: &Graph) -> Vec<OracleMatching> {
    let all = all_matchings(g);
    let nu = all.iter().map(OracleMatching::len).max().unwrap();
    all.into_iter().filter(|m| m.len() == nu).collect()
}

/// Vertices left exposed by at least one maximum matching.
pub fn d_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mask = maximum_matchings(g)
        .iter()
        .fold(0, |acc, m| acc | m.exposed(n));
    bits(mask)
}

pub fn is_equimatchable(g: &Graph) -> bool {
    let mm = all_maximal_matchings(g);
    mm.iter().all(|m| m.len() == mm[0].len())
}

/// Sizes of the maximal matchings whose covered set contains `s`.
fn covering_sizes(maximal: &[OracleMatching], s: u32) -> Vec<usize> {
    maximal
        .iter()
        .filter(|m| m.covered & s == s)
        .map(OracleMatching::len)
        .collect()
}

pub fn is_equimatchable_set(g: &Graph, s: &[usize]) -> bool {
    let sizes = covering_sizes(&all_maximal_matchings(g), mask_of(s));
    sizes.iter().all(|&x| x == sizes[0])
}

/// `eta` straight from the definition, over all subsets by increasing size.
pub fn eta(g: &Graph) -> usize {
    let n = g.vertex_count();
    let maximal = all_maximal_matchings(g);
    let mut by_size: Vec<u32> = (0..=full(n)).collect();
    by_size.sort_by_key(|s| s.count_ones());
    for s in by_size {
        let sizes = covering_sizes(&maximal, s);
        if sizes.iter().all(|&x| x == sizes.first().copied().unwrap_or(0)) {
            return s.count_ones() as usize;
        }
    }
    unreachable!()
}

/// Smallest equimatchable set that some matching covers.
pub fn eta_covered(g: &Graph) -> usize {
    let n = g.vertex_count();
    let maximal = all_maximal_matchings(g);
    let mut by_size: Vec<u32> = (0..=full(n)).collect();
    by_size.sort_by_key(|s| s.count_ones());
    for s in by_size {
        let sizes = covering_sizes(&maximal, s);
        if !sizes.is_empty() && sizes.iter().all(|&x| x == sizes[0]) {
            return s.count_ones() as usize;
        }
    }
    unreachable!()
}

pub fn alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj = adjacency(g);
    (0..=full(n))
        .filter(|&s| bits(s).iter().all(|&v| adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn tau(g: &Graph) -> usize {
    g.vertex_count() - alpha(g)
}

pub fn omega(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj = adjacency(g);
    (0..=full(n))
        .filter(|&s| bits(s).iter().all(|&v| (adj[v] | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn has_perfect_matching_on(g: &Graph, alive: u32) -> bool {
    let adj = adjacency(g);
    fn go(adj: &[u32], left: u32) -> bool {
        if left == 0 {
            return true;
        }
        let v = left.trailing_zeros() as usize;
        let mut cand = adj[v] & left;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            if go(adj, left & !(1 << v) & !(1 << w)) {
                return true;
            }
        }
        false
    }
    go(&adj, alive)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// `count` seeded random graphs with `min_n <= n <= max_n`, edge probabilities cycling
/// through sparse, medium and dense.
pub fn pool(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    const DENSITIES: [f64; 5] = [0.15, 0.25, 0.4, 0.6, 0.8];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            random_graph(&mut rng, n, DENSITIES[i % DENSITIES.len()])
        })
        .collect()
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Proptest strategy for graphs on `min_n..=max_n` vertices.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.05f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs).prop_map(move |keep| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}
