//! Extremal families and reduction gadgets.

use crate::error::{Error, Result};
use crate::graph::{build_family, Family, Graph};

/// `K(G) = (G + G) * K_{2n}`: two disjoint copies of `g` joined to a clique on
/// `2|V(g)|` vertices. The clique occupies the last `2n` labels.
pub fn make_k_of(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter {
            family: "K(G)",
            message: "needs at least one vertex".into(),
        });
    }
    let clique = build_family(Family::Complete, &[2 * n])?;
    Ok(g.copies(2).join(&clique))
}

/// The prism `C_{2k+1} x K2`; vertex `2i + j` is cycle position `i` on layer `j`.
pub fn make_prism(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter {
            family: "prism",
            message: format!("k = {k}, need k >= 2"),
        });
    }
    let cycle = build_family(Family::Cycle, &[2 * k + 1])?;
    let k2 = build_family(Family::Path, &[2])?;
    Ok(cycle.cartesian_product(&k2))
}

/// Complement of the graph obtained by subdividing every edge of the cubic graph `g`
/// twice. Original vertices keep their labels.
pub fn make_poljak_instance(g: &Graph) -> Result<Graph> {
    if g.vertex_count() < 4 || !g.is_regular(3) {
        return Err(Error::InvalidParameter {
            family: "poljak",
            message: "input must be cubic with at least 4 vertices".into(),
        });
    }
    Ok(g.double_subdivide().complement())
}

/// `k` disjoint copies of `P4`; copy `i` is the path `4i, 4i+1, 4i+2, 4i+3`.
pub fn make_kp4(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            family: "kP4",
            message: "k must be positive".into(),
        });
    }
    Ok(build_family(Family::Path, &[4])?.copies(k))
}

/// `kP4` made connected: with `S` the leaves `4i`, the neighbours `4i+1` of `S`
/// form a clique.
pub fn make_kp4_connected(k: usize) -> Result<Graph> {
    let base = make_kp4(k)?;
    let mut edges = base.edges().to_vec();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((4 * i + 1, 4 * j + 1));
        }
    }
    Ok(Graph::from_simple_edges(4 * k, edges))
}

/// The 10-vertex graph with `mu = 2` and no maximal matching having two disjoint
/// augmenting `P4`s. Vertex `i` here is `v_{i+1}` of the drawing.
pub fn figure2_fixture() -> Graph {
    Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (3, 8),
            (8, 9),
        ],
    )
    .expect("fixture is a simple graph")
}
