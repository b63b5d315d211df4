use std::ops::ControlFlow;

use super::Matching;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    Matched,
    Exposed,
}

enum Visit {
    Continue,
    Stop,
    /// Keep going, but only report matchings of at most this many edges.
    Tighten(usize),
}

struct Enumerator<'a> {
    g: &'a Graph,
    state: Vec<State>,
    m: Matching,
    size: usize,
    cap: usize,
}

impl Enumerator<'_> {
    /// Undecided neighbours of `u` other than `except`.
    fn has_open_partner(&self, u: Vertex, except: Vertex) -> bool {
        self.g
            .neighbors(u)
            .iter()
            .any(|&w| w != except && self.state[w] == State::Open)
    }

    // Decides the lowest undecided vertex: matched to a higher undecided neighbour
    // (partners in increasing order), or left exposed, which every neighbour must
    // then be matched to justify.
    fn run(&mut self, from: Vertex, visit: &mut dyn FnMut(&Matching) -> Visit) -> ControlFlow<()> {
        let n = self.g.vertex_count();
        let Some(v) = (from..n).find(|&v| self.state[v] == State::Open) else {
            return match visit(&self.m) {
                Visit::Continue => ControlFlow::Continue(()),
                Visit::Stop => ControlFlow::Break(()),
                Visit::Tighten(cap) => {
                    self.cap = self.cap.min(cap);
                    ControlFlow::Continue(())
                }
            };
        };
        for &u in self.g.neighbors(v) {
            if self.state[u] != State::Open || u < v {
                continue;
            }
            if self.size + 1 > self.cap {
                break;
            }
            self.state[v] = State::Matched;
            self.state[u] = State::Matched;
            self.m.insert(v, u);
            self.size += 1;
            let flow = self.run(v + 1, visit);
            self.size -= 1;
            self.m.remove(v);
            self.state[v] = State::Open;
            self.state[u] = State::Open;
            flow?;
        }
        let exposable = self.g.neighbors(v).iter().all(|&w| match self.state[w] {
            State::Exposed => false,
            State::Open => self.has_open_partner(w, v),
            State::Matched => true,
        });
        if exposable {
            self.state[v] = State::Exposed;
            let flow = self.run(v + 1, visit);
            self.state[v] = State::Open;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `f` once for every maximal matching of `g` with at most `size_cap` edges
/// (all of them when `None`), in a fixed canonical order. Stops when `f` breaks.
/// Exponential; meant for graphs of roughly twenty vertices or fewer.
pub fn for_each_maximal_matching<F>(g: &Graph, size_cap: Option<usize>, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let mut e = Enumerator {
        g,
        state: vec![State::Open; g.vertex_count()],
        m: Matching::empty(g.vertex_count()),
        size: 0,
        cap: size_cap.unwrap_or(usize::MAX),
    };
    e.run(0, &mut |m| match f(m) {
        ControlFlow::Continue(()) => Visit::Continue,
        ControlFlow::Break(()) => Visit::Stop,
    })
}

pub fn enumerate_maximal_matchings(g: &Graph, size_cap: Option<usize>) -> Vec<Matching> {
    let mut out = Vec::new();
    let _ = for_each_maximal_matching(g, size_cap, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    });
    out
}

/// A minimum maximal matching and `beta(g)`, by branch and bound over the
/// enumeration (the cap shrinks below every matching found).
pub fn minimum_maximal_matching_oracle(g: &Graph) -> (Matching, usize) {
    let mut best: Option<Matching> = None;
    let mut e = Enumerator {
        g,
        state: vec![State::Open; g.vertex_count()],
        m: Matching::empty(g.vertex_count()),
        size: 0,
        cap: usize::MAX,
    };
    let _ = e.run(0, &mut |m| {
        let size = m.len();
        best = Some(m.clone());
        if size == 0 {
            Visit::Stop
        } else {
            Visit::Tighten(size - 1)
        }
    });
    let best = best.expect("every graph has a maximal matching");
    let beta = best.len();
    (best, beta)
}
