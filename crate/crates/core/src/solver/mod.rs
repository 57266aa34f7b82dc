//! Outer algorithms: scaling, potential extraction, bit-scaling ladder,
//! Monte-Carlo and Las-Vegas wrappers, and the top-level solver.

mod goldberg;
mod las_vegas;
mod monte_carlo;
mod solve;
mod spmain;

pub use goldberg::{goldberg_solve, goldberg_solve_traced, ladder_height, level_graph, level_min_weight, LadderLevel};
pub use las_vegas::{find_any_cycle, find_thresh, find_thresh_traced, las_vegas_level, sp_las_vegas, LevelOutcome, ThreshProbe};
pub use monte_carlo::{attempt_budget, attempt_count, monte_carlo_potentials, sp_monte_carlo};
pub use solve::{solve, SolveConfig, SsspOutcome, SsspResult};
pub use spmain::{make_nonneg_potentials, sp_main};
