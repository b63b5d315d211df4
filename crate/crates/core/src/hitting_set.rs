//! Exact minimum hitting set by branch and bound.
//!
//! Branching picks the unhit hyperedge with the fewest selectable vertices and tries
//! its vertices in order; vertices tried earlier in the same node are forbidden in
//! later siblings so no set is explored twice. The lower bound is a greedy packing
//! of pairwise disjoint unhit hyperedges.

struct Search<'a> {
    hyperedges: &'a [Vec<usize>],
    chosen: Vec<bool>,
    forbidden: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn is_hit(&self, e: &[usize]) -> bool {
        e.iter().any(|&v| self.chosen[v])
    }

    fn packing_bound(&self, unhit: &[usize]) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut count = 0;
        for &i in unhit {
            let e = &self.hyperedges[i];
            if e.iter().all(|&v| !used[v]) {
                for &v in e {
                    used[v] = true;
                }
                count += 1;
            }
        }
        count
    }

    fn run(&mut self) {
        let unhit: Vec<usize> = (0..self.hyperedges.len())
            .filter(|&i| !self.is_hit(&self.hyperedges[i]))
            .collect();
        if unhit.is_empty() {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.packing_bound(&unhit) >= self.best.len() {
            return;
        }
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for &i in &unhit {
            let free: Vec<usize> = self.hyperedges[i]
                .iter()
                .copied()
                .filter(|&v| !self.forbidden[v])
                .collect();
            if free.is_empty() {
                return;
            }
            if pick.as_ref().map_or(true, |(_, f)| free.len() < f.len()) {
                pick = Some((i, free));
            }
        }
        let (_, branch) = pick.expect("unhit is non-empty");
        let mut newly_forbidden = Vec::new();
        for &v in &branch {
            self.chosen[v] = true;
            self.current.push(v);
            self.run();
            self.current.pop();
            self.chosen[v] = false;
            self.forbidden[v] = true;
            newly_forbidden.push(v);
        }
        for v in newly_forbidden {
            self.forbidden[v] = false;
        }
    }
}

fn greedy(universe: usize, hyperedges: &[Vec<usize>]) -> Vec<usize> {
    let mut hit = vec![false; hyperedges.len()];
    let mut out = Vec::new();
    loop {
        let mut score = vec![0usize; universe];
        for (e, h) in hyperedges.iter().zip(&hit) {
            if !h {
                for &v in e {
                    score[v] += 1;
                }
            }
        }
        let Some((v, &s)) = score
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        else {
            break;
        };
        if s == 0 {
            break;
        }
        out.push(v);
        for (e, h) in hyperedges.iter().zip(hit.iter_mut()) {
            if e.contains(&v) {
                *h = true;
            }
        }
    }
    out
}

/// A minimum hitting set of `hyperedges` over the vertices `0..universe`, sorted.
///
/// Returns `None` when some hyperedge is empty (nothing can hit it).
pub fn minimum_hitting_set(universe: usize, hyperedges: &[Vec<usize>]) -> Option<Vec<usize>> {
    if hyperedges.iter().any(|e| e.is_empty()) {
        return None;
    }
    debug_assert!(hyperedges.iter().flatten().all(|&v| v < universe));
    let mut search = Search {
        hyperedges,
        chosen: vec![false; universe],
        forbidden: vec![false; universe],
        current: Vec::new(),
        best: greedy(universe, hyperedges),
    };
    search.run();
    let mut best = search.best;
    best.sort_unstable();
    Some(best)
}

pub fn is_hitting_set(set: &[usize], hyperedges: &[Vec<usize>]) -> bool {
    hyperedges.iter().all(|e| e.iter().any(|v| set.contains(v)))
}
