use crate::context::ExecutionContext;
use crate::error::{Error, Result};
use crate::graph::{add_dummy_source, scale_weights, Graph, VertexId, Weight};
use crate::price::{apply_price, PriceFunction};
use crate::scaledown::{scale_down, ScaleDownInput};
use crate::sssp::{dijkstra_run, ShortestPathTree, INF, NO_EDGE};

/// Shortest-path tree from `s` for weights `>= -1`, with exact distances in
/// the original weights, plus the final scaling potential `φ_t`.
///
/// Does not return on a negative cycle other than through budget
/// exhaustion.
pub fn sp_main(g: &Graph, s: VertexId, ctx: &mut ExecutionContext) -> Result<(ShortestPathTree, PriceFunction)> {
    g.check_vertex(s)?;
    require_at_least_minus_one(g)?;
    let (scaled, phi) = scaling_potentials(g, ctx)?;
    let star = star_graph(&scaled, &phi)?;
    let run = dijkstra_run(&star, s, &mut ctx.budget)?;
    let tree = resum_tree(g, s, &run.parent, &run.order)?;
    Ok((tree, phi))
}

/// Integral `φ` with `w_φ(e) >= 0` for every edge, where `φ(v)` is the
/// distance from a dummy source.
pub fn make_nonneg_potentials(g: &Graph, ctx: &mut ExecutionContext) -> Result<PriceFunction> {
    require_at_least_minus_one(g)?;
    if !g.has_negative_edge() {
        return Ok(PriceFunction::zeros(g.n()));
    }
    let n = g.n();
    let (scaled, phi) = scaling_potentials(g, ctx)?;

    // Dummy source priced at max φ keeps its edges non-negative in G*.
    let (scaled_s, s) = add_dummy_source(&scaled);
    let top = phi.values().iter().copied().max().unwrap_or(0);
    let star = star_graph(&scaled_s, &phi.extended(top))?;
    let run = dijkstra_run(&star, s, &mut ctx.budget)?;
    let two_n = 2 * n as Weight;
    let mut dist = vec![0 as Weight; n + 1];
    for &v in run.order.iter().skip(1) {
        let e = scaled_s.edge(run.parent[v]);
        dist[v] = dist[e.src].checked_add(e.weight).ok_or(Error::Overflow)?;
    }
    let mut values = Vec::with_capacity(n);
    for &d in &dist[..n] {
        if d % two_n != 0 {
            return Err(Error::internal("dummy-source distance is not a multiple of 2n"));
        }
        values.push(d / two_n);
    }
    let psi = PriceFunction::from_vec(values);
    if !psi.is_feasible_above(g, 0) {
        return Err(Error::internal("potentials leave a negative edge"));
    }
    Ok(psi)
}

fn require_at_least_minus_one(g: &Graph) -> Result<()> {
    match g.edges().iter().position(|e| e.weight < -1) {
        None => Ok(()),
        Some(id) => Err(Error::WeightBelowMinimum { edge: id, weight: g.edge(id).weight, min: -1 }),
    }
}

/// `w̄ = 2n·w` and `φ_t` with `w̄_{φ_t} >= -1`.
fn scaling_potentials(g: &Graph, ctx: &mut ExecutionContext) -> Result<(Graph, PriceFunction)> {
    let n = g.n();
    let scaled = scale_weights(g, 2 * n.max(1) as Weight)?;
    let b = (2 * n.max(1) as u128).next_power_of_two() as Weight;
    let mut phi = PriceFunction::zeros(n);
    let mut level = b;
    while level > 1 {
        level /= 2;
        let current = apply_price(&scaled, &phi)?;
        let psi = scale_down(&ScaleDownInput { graph: &current, delta: n as u64, b: level }, ctx)?;
        phi = phi.compose(&psi)?;
    }
    Ok((scaled, phi))
}

/// `w* = w̄_φ + 1`, checked non-negative.
fn star_graph(scaled: &Graph, phi: &PriceFunction) -> Result<Graph> {
    let star = scaled.try_map_weights(|e| phi.reduced_weight(e)?.checked_add(1))?;
    star.require_nonnegative().map_err(|_| Error::internal("w* has a negative edge"))?;
    Ok(star)
}

/// Tree with the parent edges of a Dijkstra run, distances re-summed under
/// the weights of `g` in settle order.
fn resum_tree(g: &Graph, s: VertexId, parent: &[usize], order: &[VertexId]) -> Result<ShortestPathTree> {
    let n = g.n();
    let mut dist = vec![INF; n];
    dist[s] = 0;
    for &v in order.iter().skip(1) {
        let e = g.edge(parent[v]);
        dist[v] = dist[e.src].checked_add(e.weight).ok_or(Error::Overflow)?;
    }
    Ok(ShortestPathTree {
        source: s,
        dist: dist.iter().map(|&d| (d != INF).then_some(d)).collect(),
        parent: parent.iter().map(|&e| (e != NO_EDGE).then_some(e)).collect(),
    })
}
