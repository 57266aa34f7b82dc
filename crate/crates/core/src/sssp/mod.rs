//! Building-block shortest-path routines.

mod bellman_ford;
mod budget;
mod dijkstra;
mod elim_neg;
mod few_neg;
mod fix_dag;
mod tree;

pub use bellman_ford::{bellman_ford, bellman_ford_counted, BellmanFordOutcome};
pub use budget::StepBudget;
pub use dijkstra::dijkstra;
pub(crate) use dijkstra::dijkstra_run;
pub use elim_neg::{elim_neg, elim_neg_with_stats, ElimNegStats};
pub use few_neg::sp_with_few_neg_edges;
pub use fix_dag::fix_dag_edges;
pub use tree::{NegativeCycle, ShortestPathTree};
pub(crate) use tree::closed_walk_vertices;

use crate::graph::Weight;

/// Sentinel for an unreached label inside the hot loops.
pub(crate) const INF: Weight = Weight::MAX;
/// Sentinel for "no parent edge".
pub(crate) const NO_EDGE: usize = usize::MAX;
