mod common;

use equimatch::gallai_edmonds::{decompose, is_factor_critical};
use equimatch::matching::{maximum_matching, perfect_matching};
use proptest::prelude::*;

use common::{arb_graph, bits, has_perfect_matching_on, mask_of, maximum_matchings};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn d_is_the_exposable_set(g in arb_graph(0, 12)) {
        let ge = decompose(&g);
        prop_assert_eq!(&ge.d, &common::d_set(&g));
        let nu = maximum_matching(&g).len();
        for v in g.vertices() {
            let (h, _) = g.without_vertices(&[v]);
            let keeps = maximum_matching(&h).len() == nu;
            prop_assert_eq!(keeps, ge.d.contains(&v));
        }
    }

    #[test]
    fn structure_theorem(g in arb_graph(0, 12)) {
        let ge = decompose(&g);
        let n = g.vertex_count();
        let a_mask = mask_of(&ge.a);
        for comp in &ge.d_components {
            let (h, _) = g.induced_subgraph(comp);
            prop_assert!(is_factor_critical(&h));
        }
        let (gc, _) = g.induced_subgraph(&ge.c);
        prop_assert!(perfect_matching(&gc).is_some());
        prop_assert!(has_perfect_matching_on(&g, mask_of(&ge.c)));
        for v in bits(a_mask) {
            prop_assert!(g.neighbors(v).iter().any(|w| ge.d.contains(w)));
        }

        for m in maximum_matchings(&g).iter().take(40) {
            let mut hit = vec![0usize; ge.d_components.len()];
            for &(u, v) in &m.edges {
                let (a, other) = if a_mask >> u & 1 == 1 { (u, v) } else { (v, u) };
                if a_mask >> a & 1 == 1 && a_mask >> other & 1 == 0 {
                    let j = ge.component_of[other].expect("A is matched into D");
                    hit[j] += 1;
                }
            }
            for &a in &ge.a {
                let partner = m.edges.iter().find_map(|&(u, v)| {
                    if u == a { Some(v) } else if v == a { Some(u) } else { None }
                });
                let partner = partner.expect("A is saturated");
                prop_assert!(ge.component_of[partner].is_some());
            }
            prop_assert!(hit.iter().all(|&h| h <= 1));
            let c_mask = mask_of(&ge.c);
            let c_inside = m.edges.iter().filter(|&&(u, v)| c_mask >> u & 1 == 1 && c_mask >> v & 1 == 1).count();
            prop_assert_eq!(2 * c_inside, ge.c.len());
            let exposed = m.exposed(n);
            for comp in &ge.d_components {
                prop_assert!((exposed & mask_of(comp)).count_ones() <= 1);
            }
            prop_assert_eq!(exposed.count_ones() as usize, ge.d_components.len() - ge.a.len());
        }
    }

    #[test]
    fn rho_counts_components(g in arb_graph(0, 12)) {
        let ge = decompose(&g);
        let expected = ge
            .a
            .iter()
            .map(|&a| ge.adjacent_components(&g, a).len())
            .max()
            .unwrap_or(1);
        prop_assert_eq!(ge.rho, expected);
        prop_assert_eq!(ge.g_ad.vertex_count(), ge.a.len() + ge.d_components.len());
    }
}
