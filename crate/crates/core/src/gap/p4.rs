//! Augmenting `P4`s: witnesses, the shifting construction and the polynomial
//! equimatchability test.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::{
    for_each_maximal_matching, has_matching_covering, is_maximal, maximal_matching_of_size,
    maximum_matching, Matching,
};

/// A maximal matching together with an augmenting path `u-w-y-v`, `wy` in the matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentingP4Witness {
    pub matching: Matching,
    pub path: [Vertex; 4],
}

impl AugmentingP4Witness {
    /// The maximal matching of size `|M| + 1` obtained by swapping `wy` for `uw, yv`.
    pub fn augmented(&self) -> Matching {
        let [u, w, y, v] = self.path;
        let mut m = self.matching.clone();
        m.remove(w);
        m.insert(u, w);
        m.insert(y, v);
        m
    }

    pub fn verify(&self, g: &Graph) -> Result<()> {
        let [u, w, y, v] = self.path;
        let m = &self.matching;
        if !is_maximal(g, m)? {
            return Err(Error::Certificate("matching is not maximal".into()));
        }
        if !(g.has_edge(u, w) && g.has_edge(y, v) && m.contains_edge(w, y)) {
            return Err(Error::Certificate("path is not u-w-y-v with wy matched".into()));
        }
        if u == v || m.covers(u) || m.covers(v) {
            return Err(Error::Certificate("path ends are not distinct exposed vertices".into()));
        }
        let bigger = self.augmented();
        if bigger.len() != m.len() + 1 || !is_maximal(g, &bigger)? {
            return Err(Error::Certificate("swap does not give a larger maximal matching".into()));
        }
        Ok(())
    }
}

/// Every augmenting `P4` `(u, w, y, v)` of `m`, both orientations of each matched edge.
pub fn augmenting_p4s(g: &Graph, m: &Matching) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for (a, b) in m.edges() {
        for (w, y) in [(a, b), (b, a)] {
            for &u in g.neighbors(w).iter().filter(|&&u| !m.covers(u)) {
                for &v in g.neighbors(y).iter().filter(|&&v| !m.covers(v)) {
                    if u != v {
                        out.push([u, w, y, v]);
                    }
                }
            }
        }
    }
    out
}

/// Alternating simple path from `path[0]` with exactly `remaining` more edges ending
/// at an exposed vertex. The next edge is unmatched when `path.len()` is odd.
fn extend_alternating(
    g: &Graph,
    m: &Matching,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    remaining: usize,
) -> bool {
    let last = *path.last().expect("path starts at a root");
    if remaining == 0 {
        return path.len() > 1 && !m.covers(last);
    }
    let next: Vec<Vertex> = if path.len() % 2 == 1 {
        g.neighbors(last)
            .iter()
            .copied()
            .filter(|&x| m.mate(last) != Some(x))
            .collect()
    } else {
        m.mate(last).into_iter().collect()
    };
    for x in next {
        if on_path[x] {
            continue;
        }
        // unmatched steps only stay inside the path's interior through covered vertices
        if path.len() % 2 == 1 && remaining > 1 && !m.covers(x) {
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend_alternating(g, m, path, on_path, remaining - 1) {
            return true;
        }
        on_path[x] = false;
        path.pop();
    }
    false
}

/// A shortest `m`-augmenting path by iterative deepening over alternating paths.
fn shortest_augmenting_path(g: &Graph, m: &Matching) -> Option<Vec<Vertex>> {
    let exposed = m.exposed();
    let mut on_path = vec![false; g.vertex_count()];
    for edges in (1..g.vertex_count()).step_by(2) {
        for &root in &exposed {
            let mut path = vec![root];
            on_path[root] = true;
            let found = extend_alternating(g, m, &mut path, &mut on_path, edges);
            on_path.iter_mut().for_each(|b| *b = false);
            if found {
                return Some(path);
            }
        }
    }
    None
}

/// Shifts `m` one step along a shortest augmenting path `x1 .. xl` so that `x1 x2 x3 x4`
/// becomes augmenting.
fn shift_towards_end(m: &Matching, p: &[Vertex]) -> Matching {
    let l = p.len();
    let mut out = m.clone();
    for i in (3..l - 2).step_by(2) {
        out.remove(p[i]);
    }
    for i in (4..l - 1).step_by(2) {
        out.insert(p[i], p[i + 1]);
    }
    out
}

/// A maximal matching of size `k` with an explicit augmenting `P4`, obtained from an
/// arbitrary maximal matching of size `k` by shifting along a shortest augmenting
/// path. `None` when no maximal matching of size `k` exists or `k >= nu`.
pub fn find_augmenting_p4_matching(g: &Graph, k: usize) -> Option<AugmentingP4Witness> {
    if k >= maximum_matching(g).len() {
        return None;
    }
    let start = maximal_matching_of_size(g, k)?;
    let p = shortest_augmenting_path(g, &start).expect("non-maximum matching has one");
    debug_assert!(p.len() >= 4 && p.len() % 2 == 0);
    let matching = shift_towards_end(&start, &p);
    let witness = AugmentingP4Witness {
        matching,
        path: [p[0], p[1], p[2], p[3]],
    };
    debug_assert!(witness.verify(g).is_ok());
    Some(witness)
}

/// A maximal matching with an augmenting `P4`, or `None` when `g` is equimatchable.
///
/// For every path `u-w-y-v` with `u, v` non-adjacent, looks for a matching of
/// `g - {u, v, w, y}` covering `N({u, v}) - {w, y}`; adding `wy` and extending greedily
/// in `g - {u, v}` gives the witness.
pub fn equimatchability_obstruction(g: &Graph) -> Option<AugmentingP4Witness> {
    for &(a, b) in g.edges() {
        for (w, y) in [(a, b), (b, a)] {
            for &u in g.neighbors(w) {
                if u == y {
                    continue;
                }
                for &v in g.neighbors(y) {
                    if v == w || v == u || g.has_edge(u, v) {
                        continue;
                    }
                    if let Some(witness) = obstruction_at(g, [u, w, y, v]) {
                        return Some(witness);
                    }
                }
            }
        }
    }
    None
}

fn obstruction_at(g: &Graph, path: [Vertex; 4]) -> Option<AugmentingP4Witness> {
    let [u, w, y, v] = path;
    let (rest, map) = g.without_vertices(&path);
    let mut local = vec![None; g.vertex_count()];
    for (i, &x) in map.iter().enumerate() {
        local[x] = Some(i);
    }
    let s: Vec<Vertex> = g
        .neighborhood_of_set(&[u, v])
        .into_iter()
        .filter_map(|x| local[x])
        .collect();
    let cover = has_matching_covering(&rest, &s).expect("set lies in the graph")?;
    let mut m = cover.lift(&map, g.vertex_count());
    m.insert(w, y);
    for &(p, q) in g.edges() {
        if p != u && p != v && q != u && q != v && !m.covers(p) && !m.covers(q) {
            m.insert(p, q);
        }
    }
    Some(AugmentingP4Witness { matching: m, path })
}

pub fn is_equimatchable(g: &Graph) -> bool {
    equimatchability_obstruction(g).is_none()
}

/// `mu(g) = 1` read off the characterization: some maximal matching has an augmenting
/// `P4`, and all such matchings have the same size. Enumerates every maximal matching.
pub fn is_almost_equimatchable_exhaustive(g: &Graph) -> bool {
    let mut size = None;
    let flow = for_each_maximal_matching(g, None, |m| {
        if augmenting_p4s(g, m).is_empty() {
            return ControlFlow::Continue(());
        }
        match size {
            None => {
                size = Some(m.len());
                ControlFlow::Continue(())
            }
            Some(s) if s == m.len() => ControlFlow::Continue(()),
            Some(_) => ControlFlow::Break(()),
        }
    });
    flow.is_continue() && size.is_some()
}

/// `mu(g) = 1` via the gap deciders.
pub fn is_almost_equimatchable(g: &Graph) -> bool {
    super::compute_mu(g, super::Decider::Alg2) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::figure2_fixture;
    use crate::graph::{build_family, Family};

    fn fam(f: Family, p: &[usize]) -> Graph {
        build_family(f, p).unwrap()
    }

    #[test]
    fn p4_witness() {
        let g = fam(Family::Path, &[4]);
        let w = find_augmenting_p4_matching(&g, 1).unwrap();
        assert_eq!(w.path, [0, 1, 2, 3]);
        assert!(w.verify(&g).is_ok());
        assert_eq!(w.augmented().len(), 2);
        assert!(find_augmenting_p4_matching(&g, 2).is_none());
    }

    #[test]
    fn shifting_on_a_long_path() {
        // P8 with the maximal matching 12, 34, 56: the only augmenting path is 0..7
        let g = fam(Family::Path, &[8]);
        let m = Matching::from_edges(&g, &[(1, 2), (3, 4), (5, 6)]).unwrap();
        assert!(augmenting_p4s(&g, &m).is_empty());
        let p = shortest_augmenting_path(&g, &m).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        let shifted = shift_towards_end(&m, &p);
        assert_eq!(shifted.edges(), vec![(1, 2), (4, 5), (6, 7)]);
        let w = AugmentingP4Witness {
            matching: shifted,
            path: [0, 1, 2, 3],
        };
        assert!(w.verify(&g).is_ok());
    }

    #[test]
    fn figure2_sizes() {
        let g = figure2_fixture();
        for k in [3, 4] {
            let w = find_augmenting_p4_matching(&g, k).unwrap();
            assert_eq!(w.matching.len(), k);
            assert!(w.verify(&g).is_ok());
        }
        assert!(find_augmenting_p4_matching(&g, 2).is_none());
        assert!(find_augmenting_p4_matching(&g, 5).is_none());
    }

    #[test]
    fn c6_at_nu() {
        assert!(find_augmenting_p4_matching(&fam(Family::Cycle, &[6]), 3).is_none());
    }

    #[test]
    fn equimatchable_examples() {
        for n in [3, 4, 5, 7] {
            assert!(is_equimatchable(&fam(Family::Cycle, &[n])), "C{n}");
        }
        assert!(!is_equimatchable(&fam(Family::Cycle, &[6])));
        assert!(is_equimatchable(&fam(Family::Complete, &[5])));
        assert!(is_equimatchable(&fam(Family::CompleteBipartite, &[3, 3])));
        let w = equimatchability_obstruction(&fam(Family::Path, &[6])).unwrap();
        assert!(w.verify(&fam(Family::Path, &[6])).is_ok());
        assert!(is_equimatchable(&fam(Family::Path, &[5])));
    }

    #[test]
    fn almost_equimatchable_examples() {
        let p4 = fam(Family::Path, &[4]);
        assert!(is_almost_equimatchable_exhaustive(&p4));
        assert!(is_almost_equimatchable(&p4));
        let fig = figure2_fixture();
        assert!(!is_almost_equimatchable_exhaustive(&fig));
        assert!(!is_almost_equimatchable(&fig));
        let k4 = fam(Family::Complete, &[4]);
        assert!(!is_almost_equimatchable_exhaustive(&k4));
        assert!(!is_almost_equimatchable(&k4));
    }
}
