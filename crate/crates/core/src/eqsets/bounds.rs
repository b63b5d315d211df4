use serde::Serialize;

use super::eta_via_hitting_set;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::MatchingMetrics;

/// `eta(C_n)` in closed form.
pub fn eta_cycle_closed_form(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidParameter {
            family: "cycle",
            message: format!("n = {n}, need n >= 3"),
        }),
        3 | 4 | 5 | 7 => Ok(0),
        _ if n % 2 == 0 => Ok(n / 2),
        _ => Ok((n - 3) / 2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub nu: usize,
    pub mu: usize,
    pub eta: usize,
    /// `None` for edgeless graphs, where the upper bound does not apply.
    pub two_nu_minus_2: Option<usize>,
    pub holds: bool,
}

/// `mu <= eta`, and `eta <= 2 nu - 2` when `g` has an edge; exhaustive oracles.
pub fn check_bounds(g: &Graph) -> BoundsReport {
    let metrics = MatchingMetrics::compute(g, true);
    let mu = metrics.mu.expect("beta requested");
    let eta = eta_via_hitting_set(g);
    let two_nu_minus_2 = (g.edge_count() > 0).then(|| 2 * metrics.nu - 2);
    let holds = mu <= eta && two_nu_minus_2.map_or(true, |b| eta <= b);
    BoundsReport {
        nu: metrics.nu,
        mu,
        eta,
        two_nu_minus_2,
        holds,
    }
}
