use super::monte_carlo::{monte_carlo_potentials, tree_from_potentials};
use super::solve::SsspOutcome;
use crate::context::ExecutionContext;
use crate::error::{Error, Result};
use crate::graph::{keep_edges, max_neg_magnitude, scale_weights, shift_all_weights, EdgeId, Graph, VertexId, Weight};
use crate::price::{apply_price, PriceFunction};
use crate::sssp::NegativeCycle;

/// One binary-search step of [`find_thresh_traced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreshProbe {
    pub q: Weight,
    /// The Monte-Carlo run on `H^{+q}` succeeded.
    pub clean: bool,
}

/// Smallest `B >= 0` for which `H^{+B}` has no negative cycle, by binary
/// search on `[0, W_H]` with Monte-Carlo probes.
pub fn find_thresh(h: &Graph, s: VertexId, ctx: &mut ExecutionContext) -> Result<Weight> {
    find_thresh_traced(h, s, ctx).map(|(b, _)| b)
}

pub fn find_thresh_traced(h: &Graph, s: VertexId, ctx: &mut ExecutionContext) -> Result<(Weight, Vec<ThreshProbe>)> {
    h.check_vertex(s)?;
    thresh_search(h, ctx).map(|(b, probes, _)| (b, probes))
}

/// The binary search, also returning the verified potential of `H^{+B}`.
fn thresh_search(h: &Graph, ctx: &mut ExecutionContext) -> Result<(Weight, Vec<ThreshProbe>, PriceFunction)> {
    let (mut lo, mut hi) = (0, max_neg_magnitude(h));
    // Potential certifying H^{+hi}; H^{+W_H} is already non-negative.
    let mut clean_phi = PriceFunction::zeros(h.n());
    let mut probes = Vec::new();
    while lo < hi {
        let q = lo + (hi - lo) / 2;
        // Warm start: H^{+q} priced by the potential of H^{+hi} has weights
        // >= q - hi, and the same cycle weights as H^{+q}.
        let shifted = shift_all_weights(h, q)?;
        let warm = apply_price(&shifted, &clean_phi)?;
        match monte_carlo_potentials(&warm, ctx) {
            Ok(psi) => {
                clean_phi = clean_phi.compose(&psi)?;
                hi = q;
                probes.push(ThreshProbe { q, clean: true });
            }
            Err(Error::MonteCarloFailure { .. }) => {
                lo = q + 1;
                probes.push(ThreshProbe { q, clean: false });
            }
            Err(e) => return Err(e),
        }
    }
    Ok((hi, probes, clean_phi))
}

/// Result of the Las-Vegas procedure on a graph with weights `>= -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelOutcome {
    /// Verified potential with `w_φ >= 0`.
    Potentials(PriceFunction),
    /// A cycle that is negative in the input graph.
    Cycle(NegativeCycle),
}

/// Potentials or a negative cycle, restarting on any failed check up to
/// `max_restarts` times.
pub fn las_vegas_level(g: &Graph, ctx: &mut ExecutionContext) -> Result<LevelOutcome> {
    if let Some(id) = g.edges().iter().position(|e| e.weight < -1) {
        return Err(Error::WeightBelowMinimum { edge: id, weight: g.edge(id).weight, min: -1 });
    }
    if g.n() == 0 {
        return Ok(LevelOutcome::Potentials(PriceFunction::zeros(0)));
    }
    let n = g.n() as Weight;
    let cube = n.checked_pow(3).ok_or(Error::Overflow)?;
    let scaled = scale_weights(g, cube)?;
    let mut restarts = 0;
    loop {
        if let Some(outcome) = las_vegas_once(g, &scaled, n, ctx)? {
            return Ok(outcome);
        }
        restarts += 1;
        ctx.diagnostics.restarts += 1;
        if restarts > ctx.constants.max_restarts {
            return Err(Error::RestartLimit(ctx.constants.max_restarts));
        }
    }
}

/// One pass; `None` asks for a restart.
fn las_vegas_once(g: &Graph, scaled: &Graph, n: Weight, ctx: &mut ExecutionContext) -> Result<Option<LevelOutcome>> {
    let (b, _, phi) = thresh_search(scaled, ctx)?;
    if b == 0 {
        return match monte_carlo_potentials(g, ctx) {
            Ok(phi) => Ok(Some(LevelOutcome::Potentials(phi))),
            Err(Error::MonteCarloFailure { .. }) => Ok(None),
            Err(e) => Err(e),
        };
    }
    // The search already certified a potential for H^{+B}.
    let shifted = shift_all_weights(scaled, b)?;
    let nonneg = apply_price(&shifted, &phi)?;
    if nonneg.has_negative_edge() {
        return Err(Error::internal("threshold potential leaves a negative edge"));
    }
    let light = keep_edges(&nonneg, |id| nonneg.edge(id).weight <= n);
    let Some(local) = find_any_cycle(&light.graph) else {
        return Ok(None);
    };
    let edges: Vec<EdgeId> = local.iter().map(|&e| light.edge_origin[e]).collect();
    match NegativeCycle::from_edges(g, edges) {
        Ok(cycle) => {
            // A clean H^{+B} with a negative cycle in G forces B >= n^2.
            debug_assert!(b >= n * n);
            Ok(Some(LevelOutcome::Cycle(cycle)))
        }
        Err(_) => Ok(None),
    }
}

/// Shortest-path tree from `s`, or a negative cycle anywhere in `g`.
/// Weights must be `>= -1`.
pub fn sp_las_vegas(g: &Graph, s: VertexId, ctx: &mut ExecutionContext) -> Result<SsspOutcome> {
    g.check_vertex(s)?;
    Ok(match las_vegas_level(g, ctx)? {
        LevelOutcome::Potentials(phi) => SsspOutcome::Tree(tree_from_potentials(g, s, &phi)?),
        LevelOutcome::Cycle(c) => SsspOutcome::Cycle(c),
    })
}

/// Edges of some directed cycle, in order, or `None` if `g` is acyclic.
pub fn find_any_cycle(g: &Graph) -> Option<Vec<EdgeId>> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let n = g.n();
    let mut color = vec![WHITE; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut frames: Vec<(VertexId, usize)> = Vec::new();
    for root in 0..n {
        if color[root] != WHITE {
            continue;
        }
        color[root] = GREY;
        frames.push((root, 0));
        while let Some(top) = frames.last_mut() {
            let v = top.0;
            let out = g.out_edges(v);
            if top.1 == out.len() {
                color[v] = BLACK;
                frames.pop();
                continue;
            }
            let id = out[top.1];
            top.1 += 1;
            let x = g.edge(id).dst;
            match color[x] {
                WHITE => {
                    color[x] = GREY;
                    parent_edge[x] = id;
                    frames.push((x, 0));
                }
                GREY => {
                    let mut cycle = vec![id];
                    let mut y = v;
                    while y != x {
                        let e = parent_edge[y];
                        cycle.push(e);
                        y = g.edge(e).src;
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                _ => {}
            }
        }
    }
    None
}
