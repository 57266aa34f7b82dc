use super::goldberg::goldberg_solve;
use super::spmain::make_nonneg_potentials;
use crate::context::{ceil_log2, ExecutionContext};
use crate::error::{Error, Exhaustion, Result};
use crate::graph::{Graph, VertexId};
use crate::price::{apply_price, PriceFunction};
use crate::sssp::{dijkstra_run, ShortestPathTree, StepBudget, INF, NO_EDGE};
use crate::verify::verify_tree;

/// Step budget of one attempt: `budget_factor * m * ceil(log2 n)^5`.
pub fn attempt_budget(g: &Graph, ctx: &ExecutionContext) -> u64 {
    let log = ceil_log2(g.n()) as u64;
    ctx.constants
        .budget_factor
        .saturating_mul(g.m().max(1) as u64)
        .saturating_mul(log.pow(5))
}

/// Number of attempts: `mc_attempts_factor * ceil(log2 n)`.
pub fn attempt_count(g: &Graph, ctx: &ExecutionContext) -> u64 {
    ctx.constants.mc_attempts_factor.max(1) * ceil_log2(g.n()) as u64
}

/// Verified potential with `w_φ >= 0`, or `MonteCarloFailure`.
///
/// Each attempt runs under its own step budget. A negative cycle makes
/// every attempt fail; an attempt stopped by the round cap proves one, so
/// the remaining attempts are skipped.
pub fn monte_carlo_potentials(g: &Graph, ctx: &mut ExecutionContext) -> Result<PriceFunction> {
    let attempts = attempt_count(g, ctx);
    let limit = attempt_budget(g, ctx);
    let saved = std::mem::replace(&mut ctx.budget, StepBudget::new(limit));
    let mut result = Err(Error::MonteCarloFailure { attempts });
    for attempt in 1..=attempts {
        ctx.budget = StepBudget::new(limit);
        ctx.diagnostics.monte_carlo_attempts += 1;
        let outcome = potentials_once(g, ctx);
        ctx.diagnostics.steps_used = ctx.diagnostics.steps_used.saturating_add(ctx.budget.used());
        match outcome {
            Ok(phi) if phi.is_feasible_above(g, 0) => {
                result = Ok(phi);
                break;
            }
            Ok(_) => {
                result = Err(Error::internal("Monte-Carlo potential failed verification"));
                break;
            }
            Err(Error::BudgetExhausted(Exhaustion::Rounds { .. })) => {
                result = Err(Error::MonteCarloFailure { attempts: attempt });
                break;
            }
            Err(Error::BudgetExhausted(Exhaustion::Steps { .. })) => continue,
            Err(e) => {
                result = Err(e);
                break;
            }
        }
    }
    ctx.budget = saved;
    result
}

fn potentials_once(g: &Graph, ctx: &mut ExecutionContext) -> Result<PriceFunction> {
    if g.edges().iter().all(|e| e.weight >= -1) {
        make_nonneg_potentials(g, ctx)
    } else {
        goldberg_solve(g, ctx)
    }
}

/// Shortest-path tree from `s`, certified before it is returned. Fails with
/// `MonteCarloFailure` whenever `g` has a negative cycle, reachable or not.
pub fn sp_monte_carlo(g: &Graph, s: VertexId, ctx: &mut ExecutionContext) -> Result<ShortestPathTree> {
    g.check_vertex(s)?;
    let phi = monte_carlo_potentials(g, ctx)?;
    tree_from_potentials(g, s, &phi)
}

/// Dijkstra on `g_φ` from `s`, mapped back to `g`'s weights and certified.
pub(crate) fn tree_from_potentials(g: &Graph, s: VertexId, phi: &PriceFunction) -> Result<ShortestPathTree> {
    let reduced = apply_price(g, phi)?;
    let run = dijkstra_run(&reduced, s, &mut StepBudget::unlimited())?;
    let mut dist = Vec::with_capacity(g.n());
    for (v, &d) in run.dist.iter().enumerate() {
        dist.push(if d == INF {
            None
        } else {
            Some(d.checked_sub(phi.get(s)).and_then(|x| x.checked_add(phi.get(v))).ok_or(Error::Overflow)?)
        });
    }
    let tree = ShortestPathTree {
        source: s,
        dist,
        parent: run.parent.iter().map(|&e| (e != NO_EDGE).then_some(e)).collect(),
    };
    verify_tree(g, &tree).map_err(|v| Error::internal(format!("tree certificate failed: {v}")))?;
    Ok(tree)
}
