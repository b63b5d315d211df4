use std::ops::ControlFlow;

use super::{augment_once, for_each_maximal_matching, is_maximal, maximum_matching, Matching};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Grows the maximal matching `m` to a maximal matching of exactly `k` edges that
/// covers `V(m)`.
///
/// Each step applies one augmenting path. Its endpoints were exposed, so the
/// covered set only grows and the exposed set stays independent.
pub fn extend_maximal_preserving_coverage(g: &Graph, m: &Matching, k: usize) -> Result<Matching> {
    if !is_maximal(g, m)? {
        return Err(Error::Hypothesis("input matching is not maximal".into()));
    }
    let nu = maximum_matching(g).len();
    if k < m.len() || k > nu {
        return Err(Error::SizeOutOfRange {
            k,
            low: m.len(),
            high: nu,
        });
    }
    let alive = vec![true; g.vertex_count()];
    let mut out = m.clone();
    while out.len() < k {
        let grew = augment_once(g, &alive, &mut out);
        assert!(grew, "a non-maximum matching has an augmenting path");
    }
    Ok(out)
}

/// A maximal matching with exactly `k` edges; exists iff `beta(g) <= k <= nu(g)`.
/// Exponential in the worst case (searches for a maximal matching of size at most `k`).
pub fn maximal_matching_of_size(g: &Graph, k: usize) -> Option<Matching> {
    if k > maximum_matching(g).len() {
        return None;
    }
    let mut small = None;
    let _ = for_each_maximal_matching(g, Some(k), |m| {
        small = Some(m.clone());
        ControlFlow::Break(())
    });
    let small = small?;
    Some(extend_maximal_preserving_coverage(g, &small, k).expect("k lies in [|small|, nu]"))
}
