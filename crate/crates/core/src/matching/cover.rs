use super::{perfect_matching, Matching};
use crate::error::Result;
use crate::graph::{check_vertices, Graph, Vertex};

/// A matching of `g` that covers every vertex of `s`, if one exists.
///
/// Reduction to perfect matching: every vertex `v` outside `s` gets a private
/// partner `v'`, the partners form a clique (padded by one dummy when the total
/// order is odd), and `g` has a matching covering `s` iff this augmented graph has
/// a perfect matching. The witness is the perfect matching restricted to `g`.
pub fn has_matching_covering(g: &Graph, s: &[Vertex]) -> Result<Option<Matching>> {
    let n = g.vertex_count();
    check_vertices(s, n)?;
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let outside: Vec<Vertex> = g.vertices().filter(|&v| !in_s[v]).collect();
    let mut extra = outside.len();
    if (n + extra) % 2 == 1 {
        extra += 1;
    }
    let mut edges = g.edges().to_vec();
    for (i, &v) in outside.iter().enumerate() {
        edges.push((v, n + i));
    }
    for a in n..n + extra {
        for b in a + 1..n + extra {
            edges.push((a, b));
        }
    }
    let augmented = Graph::from_simple_edges(n + extra, edges);
    Ok(perfect_matching(&augmented).map(|pm| {
        let mut m = Matching::empty(n);
        for (u, v) in pm.edges() {
            if v < n {
                m.insert(u, v);
            }
        }
        debug_assert!(m.covers_all(s));
        m
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};

    #[test]
    fn examples() {
        let p4 = build_family(Family::Path, &[4]).unwrap();
        let w = has_matching_covering(&p4, &[1, 2]).unwrap().unwrap();
        assert!(w.covers_all(&[1, 2]));
        assert!(w.validate_in(&p4).is_ok());

        // isolated vertex 0 next to the edge 1-2
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(has_matching_covering(&g, &[0]).unwrap(), None);

        let c5 = build_family(Family::Cycle, &[5]).unwrap();
        let all: Vec<_> = c5.vertices().collect();
        assert_eq!(has_matching_covering(&c5, &all).unwrap(), None);
        assert!(has_matching_covering(&c5, &all[..4]).unwrap().is_some());
    }

    #[test]
    fn empty_set_and_bad_input() {
        let g = Graph::empty(2);
        assert_eq!(has_matching_covering(&g, &[]).unwrap(), Some(Matching::empty(2)));
        assert!(has_matching_covering(&g, &[2]).is_err());
    }

    #[test]
    fn star_covers_one_leaf_only() {
        let star = build_family(Family::Star, &[3]).unwrap();
        assert!(has_matching_covering(&star, &[0, 2]).unwrap().is_some());
        assert!(has_matching_covering(&star, &[1, 2]).unwrap().is_none());
    }
}
