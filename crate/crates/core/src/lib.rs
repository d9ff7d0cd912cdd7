//! Exact engine for the total domination game on small graphs.
//!
//! * [`graph`]: graphs, partially dominated states and the edge-list format.
//! * [`canon`]: canonical codes for trees and forests.
//! * [`solver`]: memoized minimax for `Dtg`/`Stg` and branch and bound for
//!   the total domination number.
//! * [`family`]: recognizers for the tree families `F1`, `F` and `F*`.
//! * [`enumerate`]: all free trees and isolate-free forests of a given order.
//! * [`verify`]: exhaustive and sampled checks of the structural results,
//!   producing JSON reports.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod solver;
pub mod verify;

pub use canon::{canonical_form, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{is_td_set, parse_graph, DominationState, Graph, RootedTree, Vertex, VertexSet};
pub use solver::{gamma_t, solve, Mover, SolveResult, Solver};
