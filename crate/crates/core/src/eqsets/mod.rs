//! Equimatchable sets and the equimatchability defect `eta(G)`.
//!
//! A set `S` is equimatchable when all maximal matchings covering it have the same
//! size; sets no matching covers are vacuously equimatchable. `eta(G)` is the size of
//! a smallest equimatchable set.

mod bounds;
mod exp2;

pub use bounds::{check_bounds, eta_cycle_closed_form, BoundsReport};
pub use exp2::{
    build_exp2, eta_expandable_shortcut, eta_via_hitting_set, is_expandable, Exp2Hypergraph,
};

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::Result;
use crate::gap::equimatchability_obstruction;
use crate::graph::{check_vertices, Graph, Vertex};
use crate::matching::{has_matching_covering, maximum_matching, Matching};
use crate::subsets::for_each_subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equimatchable,
    NotEquimatchable,
    /// No matching covers the set.
    Vacuous,
}

impl Verdict {
    /// Vacuous sets count as equimatchable.
    pub fn is_equimatchable(self) -> bool {
        self != Verdict::NotEquimatchable
    }
}

/// Two maximal matchings covering the set, `smaller.len() < larger.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub smaller: Matching,
    pub larger: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquimatchableSetReport {
    pub set: Vec<Vertex>,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

/// Every inclusion-minimal matching covering `s`: the lowest uncovered vertex of `s`
/// takes each free neighbour in turn.
fn for_each_minimal_covering<F>(g: &Graph, s: &[Vertex], m: &mut Matching, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let Some(pos) = s.iter().position(|&v| !m.covers(v)) else {
        return f(m);
    };
    let v = s[pos];
    for &w in g.neighbors(v) {
        if m.covers(w) {
            continue;
        }
        m.insert(v, w);
        let flow = for_each_minimal_covering(g, &s[pos + 1..], m, f);
        m.remove(v);
        flow?;
    }
    ControlFlow::Continue(())
}

/// `m` plus a maximal matching of `g - V(m)` (given in `map` labels of that subgraph).
fn combine(m: &Matching, rest: &Matching, map: &[Vertex]) -> Matching {
    m.union(&rest.lift(map, m.vertex_count()))
        .expect("rest avoids V(m)")
}

/// Decides whether `s` is equimatchable in `g`.
///
/// Each maximal matching covering `s` splits as a minimal covering matching `M` plus a
/// maximal matching of `G - V(M)`, so `s` is equimatchable iff every such `G - V(M)`
/// is equimatchable and `|M| + nu(G - V(M))` is the same for all `M`.
pub fn is_equimatchable_set(g: &Graph, s: &[Vertex]) -> Result<EquimatchableSetReport> {
    check_vertices(s, g.vertex_count())?;
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if has_matching_covering(g, &set)?.is_none() {
        return Ok(EquimatchableSetReport {
            set,
            verdict: Verdict::Vacuous,
            counterexample: None,
        });
    }
    let mut seen: Option<(usize, Matching)> = None;
    let mut counterexample = None;
    let mut m = Matching::empty(g.vertex_count());
    let _ = for_each_minimal_covering(g, &set, &mut m, &mut |m| {
        let (rest, map) = g.without_vertices(&m.covered());
        if let Some(w) = equimatchability_obstruction(&rest) {
            counterexample = Some(Counterexample {
                smaller: combine(m, &w.matching, &map),
                larger: combine(m, &w.augmented(), &map),
            });
            return ControlFlow::Break(());
        }
        let best = combine(m, &maximum_matching(&rest), &map);
        match &seen {
            None => {
                seen = Some((best.len(), best));
                ControlFlow::Continue(())
            }
            Some((size, _)) if *size == best.len() => ControlFlow::Continue(()),
            Some((_, other)) => {
                let (smaller, larger) = if other.len() < best.len() {
                    (other.clone(), best)
                } else {
                    (best, other.clone())
                };
                counterexample = Some(Counterexample { smaller, larger });
                ControlFlow::Break(())
            }
        }
    });
    let verdict = if counterexample.is_some() {
        Verdict::NotEquimatchable
    } else {
        Verdict::Equimatchable
    };
    Ok(EquimatchableSetReport {
        set,
        verdict,
        counterexample,
    })
}

/// `eta(g)` and a smallest equimatchable set, trying sizes `0, 1, 2, ...` and subsets
/// in lexicographic order.
pub fn compute_eta_xp(g: &Graph) -> (usize, Vec<Vertex>) {
    let all: Vec<Vertex> = g.vertices().collect();
    for size in 0..=all.len() {
        let mut found = None;
        let _ = for_each_subset(&all, size, |s| {
            let report = is_equimatchable_set(g, s).expect("subset of V");
            if report.verdict.is_equimatchable() {
                found = Some(s.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(s) = found {
            return (size, s);
        }
    }
    unreachable!("V(G) is always equimatchable")
}
