//! Shared state threaded through the randomized routines.

use crate::rng::Rng;
use crate::sssp::StepBudget;

/// Tunable constants of the randomized algorithms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Constants {
    /// Sample count factor in the decomposition: `k = ceil(c_sample * ln n)`.
    pub c_sample: f64,
    /// Ball radius parameter `p = min(1, p_numerator * log2(n) / D)`.
    pub p_numerator: u32,
    /// Per-attempt step budget is `budget_factor * m * ceil(log2 n)^5`.
    pub budget_factor: u64,
    /// Monte-Carlo attempts are `mc_attempts_factor * ceil(log2 n)`.
    pub mc_attempts_factor: u64,
    pub max_restarts: u32,
}

impl Default for Constants {
    fn default() -> Self {
        Constants { c_sample: 4.0, p_numerator: 80, budget_factor: 64, mc_attempts_factor: 3, max_restarts: 100 }
    }
}

/// Counters collected across one solver run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub ldd_calls: u64,
    pub ldd_premature_terminations: u64,
    pub scale_down_calls: u64,
    pub scale_down_max_depth: u32,
    pub elim_neg_rounds: u64,
    pub monte_carlo_attempts: u64,
    /// Steps charged across all Monte-Carlo attempts.
    pub steps_used: u64,
    pub restarts: u32,
}

#[derive(Clone, Debug)]
pub struct ExecutionContext {
    pub rng: Rng,
    pub budget: StepBudget,
    /// Vertex count of the top-level problem; sets the decomposition's
    /// sample count and radius parameter at every recursion level.
    pub global_n: usize,
    pub constants: Constants,
    pub diagnostics: Diagnostics,
}

impl ExecutionContext {
    pub fn new(seed: u64, global_n: usize) -> Self {
        ExecutionContext {
            rng: Rng::new(seed),
            budget: StepBudget::unlimited(),
            global_n: global_n.max(2),
            constants: Constants::default(),
            diagnostics: Diagnostics::default(),
        }
    }

    pub fn with_budget(mut self, budget: StepBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_constants(mut self, constants: Constants) -> Self {
        self.constants = constants;
        self
    }
}

/// `ceil(log2(max(n, 2)))`.
pub fn ceil_log2(n: usize) -> u32 {
    let n = n.max(2);
    usize::BITS - (n - 1).leading_zeros()
}
