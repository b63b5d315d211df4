//! The decider over the Gallai-Edmonds structure: guess an independent set `I` of
//! `2k` vertices, a minimal matching `M_A` saturating `A - I` and exposing `I`, and
//! which `D`-components the vertices of `A` are matched into; then every component
//! must be (near-)perfectly matchable on what is left.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gallai_edmonds::{decompose, GallaiEdmondsDecomposition};
use crate::graph::{Edge, Graph, Vertex};
use crate::matching::{perfect_matching_within, Matching};
use crate::subsets::for_each_independent_subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    /// Component of `G[C]`.
    C,
    /// Component of `G[D]` reached by `M_A*`.
    CoveredD,
    /// Component of `G[D]` not reached by `M_A*`; leaves one root exposed.
    UncoveredD,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentMatching {
    pub component: Vec<Vertex>,
    pub kind: ComponentKind,
    /// `M_X`, a matching of the host graph inside `X - (I + V(M_A))`.
    pub matching: Matching,
    pub exposed_root: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapCertificateA {
    pub k: usize,
    pub independent_set: Vec<Vertex>,
    pub m_a: Matching,
    pub m_a_star: Matching,
    pub component_matchings: Vec<ComponentMatching>,
    pub exposed_roots: Vec<Vertex>,
}

fn reject<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Certificate(msg.into()))
}

impl GapCertificateA {
    /// `M_A` together with every `M_X`.
    pub fn reassemble(&self, g: &Graph) -> Result<Matching> {
        let mut m = self.m_a.clone();
        for cm in &self.component_matchings {
            m = m
                .union(&cm.matching)
                .ok_or_else(|| Error::Certificate("component matchings overlap".into()))?;
        }
        m.validate_in(g)?;
        Ok(m)
    }

    /// Checks the five conditions one by one against a fresh decomposition of `g`.
    pub fn verify(&self, g: &Graph, k: usize) -> Result<Matching> {
        let n = g.vertex_count();
        let ge = decompose(g);
        let i_set = &self.independent_set;
        crate::graph::check_vertices(i_set, n)?;
        let mut in_i = vec![false; n];
        for &v in i_set {
            in_i[v] = true;
        }
        if self.k != k || i_set.len() != 2 * k || !g.is_independent(i_set) {
            return reject("I is not an independent set of 2k vertices");
        }
        if in_i.iter().filter(|&&b| b).count() != i_set.len() {
            return reject("I repeats a vertex");
        }

        self.m_a.validate_in(g)?;
        let mut in_a = vec![false; n];
        for &a in &ge.a {
            in_a[a] = true;
        }
        if ge.a.iter().any(|&a| !in_i[a] && !self.m_a.covers(a)) {
            return reject("M_A does not saturate A - I");
        }
        if i_set.iter().any(|&v| self.m_a.covers(v)) {
            return reject("M_A covers a vertex of I");
        }
        let touches_free_a = |v: Vertex| in_a[v] && !in_i[v];
        if self
            .m_a
            .edges()
            .iter()
            .any(|&(u, v)| !touches_free_a(u) && !touches_free_a(v))
        {
            return reject("M_A is not minimal");
        }

        self.m_a_star.validate_in(g)?;
        let star = self.m_a_star.edges();
        if star.len() != ge.a.len() {
            return reject("M_A* does not have |A| edges");
        }
        let mut covered_comp = vec![false; ge.d_components.len()];
        for &(u, v) in &star {
            let (a, d) = if in_a[u] { (u, v) } else { (v, u) };
            let Some(j) = ge.component_of[d].filter(|_| in_a[a]) else {
                return reject("M_A* edge does not join A to D");
            };
            if std::mem::replace(&mut covered_comp[j], true) {
                return reject("M_A* reaches a D-component twice");
            }
        }

        let mut removed = in_i.clone();
        for v in self.m_a.covered() {
            removed[v] = true;
        }
        let closed_i = {
            let mut mask = in_i.clone();
            for v in g.neighborhood_of_set(i_set) {
                mask[v] = true;
            }
            mask
        };
        let mut expected: Vec<(Vec<Vertex>, ComponentKind)> = ge
            .c_components
            .iter()
            .map(|x| (x.clone(), ComponentKind::C))
            .collect();
        for (j, x) in ge.d_components.iter().enumerate() {
            let kind = if covered_comp[j] {
                ComponentKind::CoveredD
            } else {
                ComponentKind::UncoveredD
            };
            expected.push((x.clone(), kind));
        }
        expected.sort();
        let mut given: Vec<(Vec<Vertex>, ComponentKind)> = self
            .component_matchings
            .iter()
            .map(|cm| (cm.component.clone(), cm.kind))
            .collect();
        given.sort();
        if given != expected {
            return reject("component list does not match the decomposition");
        }

        let mut roots = Vec::new();
        for cm in &self.component_matchings {
            cm.matching.validate_in(g)?;
            let mut target: Vec<Vertex> = cm
                .component
                .iter()
                .copied()
                .filter(|&v| !removed[v])
                .collect();
            match (cm.kind, cm.exposed_root) {
                (ComponentKind::UncoveredD, Some(r)) => {
                    if closed_i[r] || !target.contains(&r) {
                        return reject(format!("root {r} is not in X - (N[I] + V(M_A))"));
                    }
                    target.retain(|&v| v != r);
                    roots.push(r);
                }
                (ComponentKind::UncoveredD, None) => {
                    return reject("uncovered D-component without a root");
                }
                (_, Some(_)) => return reject("root on a perfectly matched component"),
                (_, None) => {}
            }
            let covered = cm.matching.covered();
            if covered != target {
                return reject("M_X is not perfect on its part of the component");
            }
        }
        if roots != self.exposed_roots {
            return reject("exposed roots disagree with the components");
        }
        self.reassemble(g)
    }
}

/// Sets of `D`-components that `A` can be matched into, each with one representative
/// `M_A*`. Only the set of reached components matters to the component checks.
fn star_options(g: &Graph, ge: &GallaiEdmondsDecomposition) -> BTreeMap<Vec<usize>, Vec<Edge>> {
    fn walk(
        g: &Graph,
        ge: &GallaiEdmondsDecomposition,
        i: usize,
        used: &mut Vec<bool>,
        edges: &mut Vec<Edge>,
        out: &mut BTreeMap<Vec<usize>, Vec<Edge>>,
    ) {
        if i == ge.a.len() {
            let key: Vec<usize> = (0..used.len()).filter(|&j| used[j]).collect();
            out.entry(key).or_insert_with(|| edges.clone());
            return;
        }
        let a = ge.a[i];
        for j in ge.adjacent_components(g, a) {
            if used[j] {
                continue;
            }
            let d = *g
                .neighbors(a)
                .iter()
                .find(|&&w| ge.component_of[w] == Some(j))
                .expect("adjacent component has a neighbour");
            used[j] = true;
            edges.push((a.min(d), a.max(d)));
            walk(g, ge, i + 1, used, edges, out);
            edges.pop();
            used[j] = false;
        }
    }
    let mut out = BTreeMap::new();
    walk(
        g,
        ge,
        0,
        &mut vec![false; ge.d_components.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Every minimal matching saturating `A - I` and avoiding `I`: the lowest unsaturated
/// vertex of `A - I` picks a partner, in increasing order.
fn for_each_minimal_a_matching<F>(
    g: &Graph,
    free_a: &[Vertex],
    blocked: &[bool],
    m: &mut Matching,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let Some(pos) = free_a.iter().position(|&a| !m.covers(a)) else {
        return f(m);
    };
    let a = free_a[pos];
    for &w in g.neighbors(a) {
        if blocked[w] || m.covers(w) {
            continue;
        }
        m.insert(a, w);
        let flow = for_each_minimal_a_matching(g, &free_a[pos + 1..], blocked, m, f);
        m.remove(a);
        flow?;
    }
    ControlFlow::Continue(())
}

struct Search<'a> {
    g: &'a Graph,
    ge: GallaiEdmondsDecomposition,
    options: BTreeMap<Vec<usize>, Vec<Edge>>,
    k: usize,
}

impl Search<'_> {
    fn component_mask(&self, x: &[Vertex], removed: &[bool]) -> Vec<bool> {
        let mut alive = vec![false; self.g.vertex_count()];
        for &v in x {
            alive[v] = !removed[v];
        }
        alive
    }

    fn try_guess(&self, i_set: &[Vertex], m_a: &Matching) -> Option<GapCertificateA> {
        let g = self.g;
        let n = g.vertex_count();
        let mut removed = vec![false; n];
        for &v in i_set {
            removed[v] = true;
        }
        for v in m_a.covered() {
            removed[v] = true;
        }
        let mut closed_i = removed.clone();
        for v in g.neighborhood_of_set(i_set) {
            closed_i[v] = true;
        }

        let mut component_matchings = Vec::new();
        for x in &self.ge.c_components {
            let matching = perfect_matching_within(g, &self.component_mask(x, &removed))?;
            component_matchings.push(ComponentMatching {
                component: x.clone(),
                kind: ComponentKind::C,
                matching,
                exposed_root: None,
            });
        }

        let mut perfect = Vec::new();
        let mut near = Vec::new();
        for x in &self.ge.d_components {
            let mut alive = self.component_mask(x, &removed);
            perfect.push(perfect_matching_within(g, &alive));
            let mut found = None;
            for &r in x {
                if closed_i[r] {
                    continue;
                }
                alive[r] = false;
                if let Some(m) = perfect_matching_within(g, &alive) {
                    found = Some((r, m));
                    break;
                }
                alive[r] = true;
            }
            near.push(found);
        }

        let (covered, star) = self.options.iter().find(|(covered, _)| {
            (0..self.ge.d_components.len()).all(|j| {
                if covered.binary_search(&j).is_ok() {
                    perfect[j].is_some()
                } else {
                    near[j].is_some()
                }
            })
        })?;

        let mut exposed_roots = Vec::new();
        for (j, x) in self.ge.d_components.iter().enumerate() {
            let cm = if covered.binary_search(&j).is_ok() {
                ComponentMatching {
                    component: x.clone(),
                    kind: ComponentKind::CoveredD,
                    matching: perfect[j].clone().expect("checked above"),
                    exposed_root: None,
                }
            } else {
                let (r, m) = near[j].clone().expect("checked above");
                exposed_roots.push(r);
                ComponentMatching {
                    component: x.clone(),
                    kind: ComponentKind::UncoveredD,
                    matching: m,
                    exposed_root: Some(r),
                }
            };
            component_matchings.push(cm);
        }
        let m_a_star = Matching::from_edges(g, star).expect("representative is a matching");
        Some(GapCertificateA {
            k: self.k,
            independent_set: i_set.to_vec(),
            m_a: m_a.clone(),
            m_a_star,
            component_matchings,
            exposed_roots,
        })
    }
}

/// Decides `mu(g) >= k` by the guesses above; the first certificate in lexicographic
/// order of `I`, then `M_A`, then the reached component set.
pub fn gap_decide_alg1(g: &Graph, k: usize) -> Option<GapCertificateA> {
    let ge = decompose(g);
    let options = star_options(g, &ge);
    let search = Search { g, ge, options, k };
    let all: Vec<Vertex> = g.vertices().collect();
    let mut found = None;
    let _ = for_each_independent_subset(g, &all, 2 * k, |i_set| {
        let mut blocked = vec![false; g.vertex_count()];
        for &v in i_set {
            blocked[v] = true;
        }
        let free_a: Vec<Vertex> = search.ge.a.iter().copied().filter(|&a| !blocked[a]).collect();
        let mut m = Matching::empty(g.vertex_count());
        for_each_minimal_a_matching(g, &free_a, &blocked, &mut m, &mut |m_a| {
            match search.try_guess(i_set, m_a) {
                Some(cert) => {
                    found = Some(cert);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })
    });
    found
}
