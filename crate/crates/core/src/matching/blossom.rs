// Maximum cardinality matching in general graphs by Edmonds' blossom method:
// grow an alternating BFS forest from one exposed root at a time, contracting odd
// cycles by relabeling their vertices with the cycle's base. O(n^3) overall.
//
// Every routine takes an `alive` mask so that perfect-matching tests on induced
// subgraphs never have to materialize the subgraph.

use std::collections::VecDeque;

use super::Matching;
use crate::graph::{Graph, Vertex};

struct Forest<'a> {
    g: &'a Graph,
    alive: &'a [bool],
    mate: &'a mut [Option<Vertex>],
    parent: Vec<Option<Vertex>>,
    base: Vec<Vertex>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'a> Forest<'a> {
    fn new(g: &'a Graph, alive: &'a [bool], mate: &'a mut [Option<Vertex>]) -> Self {
        let n = g.vertex_count();
        Forest {
            g,
            alive,
            mate,
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: Vertex, mut b: Vertex) -> Vertex {
        let mut on_path = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match self.mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("matched tree vertex has a parent"),
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            let m = self.mate[b].expect("path reaches the root first");
            b = self.parent[m].expect("matched tree vertex has a parent");
        }
    }

    fn mark_path(&mut self, mut v: Vertex, blossom_base: Vertex, mut child: Vertex) {
        while self.base[v] != blossom_base {
            let m = self.mate[v].expect("inner blossom vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("matched tree vertex has a parent");
        }
    }

    /// BFS from `root`; returns the exposed endpoint of an augmenting path.
    fn search(&mut self, root: Vertex) -> Option<Vertex> {
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if outer {
                    let b = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for i in 0..self.g.vertex_count() {
                        if self.alive[i] && self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.in_tree[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: Vertex) {
        loop {
            let pv = self.parent[v].expect("path vertex has a parent");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                None => break,
                Some(w) => v = w,
            }
        }
    }
}

/// Tries exposed alive roots in increasing order and applies the first augmenting
/// path found. Vertices covered before stay covered.
pub(crate) fn augment_once(g: &Graph, alive: &[bool], m: &mut Matching) -> bool {
    for root in g.vertices() {
        if !alive[root] || m.mate[root].is_some() {
            continue;
        }
        let mut forest = Forest::new(g, alive, &mut m.mate);
        if let Some(end) = forest.search(root) {
            forest.augment(end);
            return true;
        }
    }
    false
}

/// Maximum matching of the subgraph induced by `alive`, grown from `start`
/// (which must only use alive vertices).
pub(crate) fn maximum_matching_within(g: &Graph, alive: &[bool], start: Matching) -> Matching {
    let mut m = start;
    // an exposed root without an augmenting path never gets one later
    for root in g.vertices() {
        if !alive[root] || m.mate[root].is_some() {
            continue;
        }
        let mut forest = Forest::new(g, alive, &mut m.mate);
        if let Some(end) = forest.search(root) {
            forest.augment(end);
        }
    }
    m
}

fn greedy_within(g: &Graph, alive: &[bool]) -> Matching {
    let mut m = Matching::empty(g.vertex_count());
    for &(u, v) in g.edges() {
        if alive[u] && alive[v] && !m.covers(u) && !m.covers(v) {
            m.insert(u, v);
        }
    }
    m
}

/// A maximum matching of `g`. Deterministic: greedy lexicographic start, then
/// augmentation from exposed roots in increasing order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let alive = vec![true; g.vertex_count()];
    maximum_matching_within(g, &alive, greedy_within(g, &alive))
}

/// A perfect matching of `G[alive]` (as a matching of `g`), if one exists.
pub fn perfect_matching_within(g: &Graph, alive: &[bool]) -> Option<Matching> {
    let count = alive.iter().filter(|&&a| a).count();
    if count % 2 == 1 {
        return None;
    }
    let m = maximum_matching_within(g, alive, greedy_within(g, alive));
    (2 * m.len() == count).then_some(m)
}

pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    perfect_matching_within(g, &vec![true; g.vertex_count()])
}
