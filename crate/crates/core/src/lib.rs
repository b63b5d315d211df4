//! Matching gap and equimatchability defect of simple graphs.
//!
//! The matching gap `mu(G) = nu(G) - beta(G)` is the difference between the largest
//! and smallest maximal matching; the equimatchability defect `eta(G)` is the size of
//! a smallest vertex set all of whose covering maximal matchings have one size. Both
//! vanish exactly on equimatchable graphs.

pub mod eqsets;
pub mod error;
pub mod gadgets;
pub mod gallai_edmonds;
pub mod gap;
pub mod graph;
pub mod hitting_set;
pub mod invariants;
pub mod matching;
pub(crate) mod subsets;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use matching::Matching;
