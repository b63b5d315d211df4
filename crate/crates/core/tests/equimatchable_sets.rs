mod common;

use std::collections::BTreeSet;

use equimatch::eqsets::{
    build_exp2, check_bounds, compute_eta_xp, eta_cycle_closed_form, eta_via_hitting_set,
    is_equimatchable_set, Verdict,
};
use equimatch::gap::{augmenting_p4s, is_equimatchable};
use equimatch::graph::{build_family, Family};
use equimatch::hitting_set::is_hitting_set;
use equimatch::matching::{enumerate_maximal_matchings, has_matching_covering, is_maximal, maximum_matching};
use equimatch::Graph;
use proptest::prelude::*;

use common::{arb_graph, mask_of};

fn subset(n: usize, raw: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = raw.iter().copied().filter(|&v| v < n).collect();
    s.sort_unstable();
    s.dedup();
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn report_matches_definition(g in arb_graph(0, 11), raw in proptest::collection::vec(0usize..11, 0..5)) {
        let s = subset(g.vertex_count(), &raw);
        let r = is_equimatchable_set(&g, &s).unwrap();
        prop_assert_eq!(r.verdict.is_equimatchable(), common::is_equimatchable_set(&g, &s));
        match r.verdict {
            Verdict::Vacuous => prop_assert!(has_matching_covering(&g, &s).unwrap().is_none()),
            Verdict::NotEquimatchable => {
                let c = r.counterexample.unwrap();
                for m in [&c.smaller, &c.larger] {
                    prop_assert!(is_maximal(&g, m).unwrap());
                    prop_assert!(m.covers_all(&s));
                }
                prop_assert!(c.smaller.len() < c.larger.len());
            }
            Verdict::Equimatchable => {
                prop_assert!(r.counterexample.is_none());
                let nu = maximum_matching(&g).len();
                let want = mask_of(&s);
                for m in common::all_maximal_matchings(&g) {
                    if m.covered & want == want {
                        prop_assert_eq!(m.len(), nu);
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_under_supersets(g in arb_graph(1, 12), a in proptest::collection::vec(0usize..12, 0..4), b in proptest::collection::vec(0usize..12, 0..4)) {
        let n = g.vertex_count();
        let small = subset(n, &a);
        let mut big = small.clone();
        big.extend(subset(n, &b));
        big.sort_unstable();
        big.dedup();
        if is_equimatchable_set(&g, &small).unwrap().verdict.is_equimatchable() {
            prop_assert!(is_equimatchable_set(&g, &big).unwrap().verdict.is_equimatchable());
        }
    }

    #[test]
    fn triple_equivalence(g in arb_graph(0, 10), samples in proptest::collection::vec(proptest::collection::vec(0usize..10, 0..6), 8)) {
        let eq = is_equimatchable(&g);
        prop_assert_eq!(eq, compute_eta_xp(&g).0 == 0);
        let empty_ok = is_equimatchable_set(&g, &[]).unwrap().verdict.is_equimatchable();
        prop_assert_eq!(eq, empty_ok);
        if eq {
            for raw in samples {
                let s = subset(g.vertex_count(), &raw);
                prop_assert!(is_equimatchable_set(&g, &s).unwrap().verdict.is_equimatchable());
            }
        }
    }

    #[test]
    fn hitting_sets_are_equimatchable_sets(g in arb_graph(0, 10)) {
        let h = build_exp2(&g);
        let n = g.vertex_count();
        let mut all = Vec::new();
        for a in 0..n {
            all.push(vec![a]);
            for b in a + 1..n {
                all.push(vec![a, b]);
                for c in b + 1..n {
                    all.push(vec![a, b, c]);
                }
            }
        }
        all.push(vec![]);
        for s in all {
            let eq = is_equimatchable_set(&g, &s).unwrap().verdict.is_equimatchable();
            prop_assert_eq!(eq, is_hitting_set(&s, &h.hyperedges), "S = {:?}", s);
        }
    }

    #[test]
    fn exp2_is_uniform_and_independent(g in arb_graph(0, 12)) {
        let h = build_exp2(&g);
        let nu = maximum_matching(&g).len();
        for e in &h.hyperedges {
            prop_assert_eq!(e.len(), g.vertex_count() + 2 - 2 * nu);
            prop_assert!(g.is_independent(e));
        }
        let dedup: BTreeSet<_> = h.hyperedges.iter().collect();
        prop_assert_eq!(dedup.len(), h.hyperedges.len());
    }

    #[test]
    fn eta_three_ways(g in arb_graph(0, 11)) {
        let (eta, witness) = compute_eta_xp(&g);
        prop_assert_eq!(witness.len(), eta);
        prop_assert!(common::is_equimatchable_set(&g, &witness));
        prop_assert_eq!(eta_via_hitting_set(&g), eta);
        prop_assert_eq!(common::eta(&g), eta);
    }

    #[test]
    fn both_bounds(g in arb_graph(0, 12)) {
        let r = check_bounds(&g);
        prop_assert_eq!(r.mu, common::mu(&g));
        prop_assert_eq!(r.eta, common::eta(&g));
        prop_assert!(r.mu <= common::eta_covered(&g));
        let upper = r.two_nu_minus_2.map_or(true, |b| r.eta <= b);
        prop_assert!(upper);
        prop_assert_eq!(r.holds, r.mu <= r.eta && upper);
    }

    #[test]
    fn covering_sizes_after_p4_removal(g in arb_graph(0, 10)) {
        let n = g.vertex_count();
        let mut paths = BTreeSet::new();
        for m in enumerate_maximal_matchings(&g, None) {
            paths.extend(augmenting_p4s(&g, &m));
        }
        let mut sizes = BTreeSet::new();
        for p in &paths {
            let [u, w, y, v] = *p;
            let (h, map) = g.without_vertices(p);
            let mut local = vec![None; n];
            for (i, &x) in map.iter().enumerate() {
                local[x] = Some(i);
            }
            let s: Vec<usize> = g
                .neighborhood_of_set(&[u, v])
                .into_iter()
                .filter(|&x| x != w && x != y)
                .map(|x| local[x].unwrap())
                .collect();
            let want = mask_of(&s);
            let covering: Vec<usize> = common::all_maximal_matchings(&h)
                .into_iter()
                .filter(|m| m.covered & want == want)
                .map(|m| m.len())
                .collect();
            prop_assert!(!covering.is_empty());
            sizes.extend(covering);
        }
        prop_assert_eq!(sizes.len() <= 1, common::mu(&g) <= 1);
    }
}

#[test]
fn cycles_match_closed_form() {
    for n in 3..=16 {
        let c = build_family(Family::Cycle, &[n]).unwrap();
        let want = eta_cycle_closed_form(n).unwrap();
        assert_eq!(eta_via_hitting_set(&c), want, "C{n}");
        if n <= 12 {
            assert_eq!(common::eta(&c), want, "C{n}");
        }
    }
}

#[test]
fn separation_family() {
    for k in 3..=6 {
        let g = build_family(Family::MatchingKK2, &[k]).unwrap().complement();
        let h = build_exp2(&g);
        let non_edges: Vec<Vec<usize>> = (0..k).map(|i| vec![2 * i, 2 * i + 1]).collect();
        assert_eq!(h.hyperedges, non_edges);
        assert_eq!(eta_via_hitting_set(&g), k);
        assert!(common::mu(&g) <= 1);
    }
}

#[test]
fn maximum_minus_one_edge_is_equimatchable() {
    for g in common::pool(11, 60, 2, 11) {
        let m = maximum_matching(&g);
        let edges = m.edges();
        if edges.is_empty() {
            continue;
        }
        let s: Vec<usize> = edges[1..].iter().flat_map(|&(u, v)| [u, v]).collect();
        let r = is_equimatchable_set(&g, &s).unwrap();
        assert_eq!(r.verdict, Verdict::Equimatchable, "{:?}", g.edges());
    }
}

#[test]
fn vacuous_set_undercuts_the_gap() {
    let g = build_family(Family::Path, &[4]).unwrap().copies(2).disjoint_union(&Graph::empty(1));
    let r = is_equimatchable_set(&g, &[8]).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
    let b = check_bounds(&g);
    assert_eq!((b.mu, b.eta), (2, 1));
    assert!(!b.holds);
    assert_eq!(common::eta_covered(&g), 2);
}

#[test]
fn empty_graph() {
    let g = Graph::empty(0);
    assert_eq!(compute_eta_xp(&g), (0, vec![]));
    assert_eq!(eta_via_hitting_set(&g), 0);
}
