//! Lexicographic enumeration of fixed-size subsets.

use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex};

/// Calls `f` on every `size`-subset of `candidates` (in the given order) that passes
/// `accept(chosen_so_far, next)`, lexicographically by position.
fn walk<A, F>(
    candidates: &[Vertex],
    size: usize,
    start: usize,
    chosen: &mut Vec<Vertex>,
    accept: &A,
    f: &mut F,
) -> ControlFlow<()>
where
    A: Fn(&[Vertex], Vertex) -> bool,
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    if chosen.len() == size {
        return f(chosen);
    }
    let needed = size - chosen.len();
    for i in start..candidates.len() {
        if candidates.len() - i < needed {
            break;
        }
        let v = candidates[i];
        if !accept(chosen, v) {
            continue;
        }
        chosen.push(v);
        let flow = walk(candidates, size, i + 1, chosen, accept, f);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

pub(crate) fn for_each_subset<F>(candidates: &[Vertex], size: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    walk(candidates, size, 0, &mut Vec::new(), &|_, _| true, &mut f)
}

pub(crate) fn for_each_independent_subset<F>(
    g: &Graph,
    candidates: &[Vertex],
    size: usize,
    mut f: F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let accept = |chosen: &[Vertex], v: Vertex| chosen.iter().all(|&u| !g.has_edge(u, v));
    walk(candidates, size, 0, &mut Vec::new(), &accept, &mut f)
}
