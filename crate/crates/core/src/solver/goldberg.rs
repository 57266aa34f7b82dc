use super::spmain::make_nonneg_potentials;
use crate::context::ExecutionContext;
use crate::error::{Error, Result};
use crate::graph::{max_neg_magnitude, Graph, Weight};
use crate::price::{apply_price, PriceFunction};

/// One rung of the bit-scaling ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderLevel {
    /// Weights of this level are `ceil(w / 2^shift)`.
    pub shift: u32,
    /// Potential making this level's weights non-negative.
    pub potential: PriceFunction,
}

/// `t = ceil(log2 W_G)` with `W_G = max(2, -min w)`.
pub fn ladder_height(g: &Graph) -> u32 {
    let w = max_neg_magnitude(g) as u128;
    128 - (w - 1).leading_zeros()
}

/// `ceil(w / 2^shift)` for every edge.
pub fn level_graph(g: &Graph, shift: u32) -> Graph {
    g.map_weights(|e| -((-e.weight) >> shift))
}

/// Potential with `w_φ >= 0` for arbitrary integer weights, by solving the
/// rounded problems `ceil(w / 2^(t-i))` for `i = 0..=t`, each with weights
/// `>= -1` after reweighting by twice the previous potential.
pub fn goldberg_solve(g: &Graph, ctx: &mut ExecutionContext) -> Result<PriceFunction> {
    let mut phi = None;
    run_ladder(g, ctx, |level| {
        phi = Some(level.potential);
    })?;
    phi.ok_or_else(|| Error::internal("empty ladder"))
}

/// As [`goldberg_solve`], returning every level's potential.
pub fn goldberg_solve_traced(g: &Graph, ctx: &mut ExecutionContext) -> Result<Vec<LadderLevel>> {
    let mut levels = Vec::new();
    run_ladder(g, ctx, |level| levels.push(level))?;
    Ok(levels)
}

fn run_ladder(g: &Graph, ctx: &mut ExecutionContext, mut visit: impl FnMut(LadderLevel)) -> Result<()> {
    let t = ladder_height(g);
    let mut phi: Option<PriceFunction> = None;
    for i in 0..=t {
        let shift = t - i;
        let rounded = level_graph(g, shift);
        let base = match &phi {
            None => PriceFunction::zeros(g.n()),
            Some(p) => p.scaled(2)?,
        };
        let reweighted = apply_price(&rounded, &base)?;
        debug_assert!(reweighted.edges().iter().all(|e| e.weight >= -1));
        let psi = make_nonneg_potentials(&reweighted, ctx)?;
        let next = base.compose(&psi)?;
        visit(LadderLevel { shift, potential: next.clone() });
        phi = Some(next);
    }
    Ok(())
}

/// Smallest level weight, for checking the rounding identity.
pub fn level_min_weight(g: &Graph, shift: u32) -> Option<Weight> {
    level_graph(g, shift).min_weight()
}
