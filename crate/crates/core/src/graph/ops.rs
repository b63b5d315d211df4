use super::{Edge, Graph};

impl Graph {
    /// `self + other`: vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        Graph::from_simple_edges(self.n + other.n, edges)
    }

    /// `k` disjoint copies; copy `i` occupies `i*n .. (i+1)*n`.
    pub fn copies(&self, k: usize) -> Graph {
        (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    /// `self * other`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let mut edges = self.disjoint_union(other).edges;
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + offset));
            }
        }
        Graph::from_simple_edges(self.n + other.n, edges)
    }

    /// Cartesian product. Vertex `(i, j)` gets label `i * other.n + j` (row-major).
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let label = |i: usize, j: usize| i * m + j;
        let mut edges: Vec<Edge> = Vec::new();
        for i in 0..self.n {
            for &(a, b) in &other.edges {
                edges.push((label(i, a), label(i, b)));
            }
        }
        for &(a, b) in &self.edges {
            for j in 0..m {
                edges.push((label(a, j), label(b, j)));
            }
        }
        Graph::from_simple_edges(self.n * m, edges)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_simple_edges(self.n, edges)
    }

    /// Replaces every edge `uv` (the `e`-th in lexicographic order, `u < v`) by the path
    /// `u - x - y - v` with `x = n + 2e` and `y = n + 2e + 1`.
    pub fn double_subdivide(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::with_capacity(3 * self.edges.len());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let x = n + 2 * e;
            let y = x + 1;
            edges.extend([(u, x), (x, y), (y, v)]);
        }
        Graph::from_simple_edges(n + 2 * self.edges.len(), edges)
    }
}
