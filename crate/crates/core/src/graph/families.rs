use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families with canonical numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[n]`: `0 - 1 - ... - (n-1)`.
    Path,
    /// `[n]`, `n >= 3`: the path closed by the edge `0 (n-1)`.
    Cycle,
    /// `[n]`.
    Complete,
    /// `[a, b]`: sides `0..a` and `a..a+b`.
    CompleteBipartite,
    /// `[k]`: center `0`, leaves `1..=k`.
    Star,
    /// `[k]`: edges `(2i, 2i+1)`.
    MatchingKK2,
    /// `[n]`: no edges.
    Edgeless,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Star => "star",
            Family::MatchingKK2 => "kK2",
            Family::Edgeless => "edgeless",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete-bipartite" | "bipartite" => Family::CompleteBipartite,
            "star" => Family::Star,
            "kk2" | "matching" => Family::MatchingKK2,
            "edgeless" | "empty" => Family::Edgeless,
            _ => {
                return Err(Error::InvalidParameter {
                    family: "family",
                    message: format!("unknown family `{s}`"),
                })
            }
        })
    }
}

pub fn build_family(kind: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != kind.arity() {
        return Err(Error::InvalidParameter {
            family: kind.name(),
            message: format!("expected {} parameter(s), got {}", kind.arity(), params.len()),
        });
    }
    let n = params[0];
    let edges = match kind {
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter {
                    family: kind.name(),
                    message: format!("cycle length must be at least 3, got {n}"),
                });
            }
            let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            e.push((0, n - 1));
            e
        }
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            return Ok(Graph::from_simple_edges(
                a + b,
                (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect(),
            ));
        }
        Family::Star => {
            return Ok(Graph::from_simple_edges(
                n + 1,
                (1..=n).map(|v| (0, v)).collect(),
            ))
        }
        Family::MatchingKK2 => {
            return Ok(Graph::from_simple_edges(
                2 * n,
                (0..n).map(|i| (2 * i, 2 * i + 1)).collect(),
            ))
        }
        Family::Edgeless => Vec::new(),
    };
    Ok(Graph::from_simple_edges(n, edges))
}
