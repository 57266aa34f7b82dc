//! The recursive scaling step: from `w >= -2B` to `w_phi >= -B`.

use crate::context::ExecutionContext;
use crate::error::{Error, Result};
use crate::graph::{add_dummy_source, keep_edges, shift_negative_weights, Edge, Graph, VertexId, Weight};
use crate::ldd::{low_diam_decomposition_budgeted, LddParams};
use crate::price::{apply_price, PriceFunction};
use crate::scc::scc_filtered;
use crate::sssp::{elim_neg_with_stats, fix_dag_edges};

#[derive(Clone, Debug)]
pub struct ScaleDownInput<'a> {
    pub graph: &'a Graph,
    /// Bound on the number of negative edges on shortest paths of `G^B`
    /// from a dummy source. Trusted, not checked.
    pub delta: u64,
    pub b: Weight,
}

/// Integral `φ` with `w_φ(e) >= -B` for every edge.
///
/// Requires `w(e) >= -2B`. Fails with `BudgetExhausted` when the shared
/// budget runs out, which is what happens on a negative cycle.
pub fn scale_down(inp: &ScaleDownInput<'_>, ctx: &mut ExecutionContext) -> Result<PriceFunction> {
    let g = inp.graph;
    if inp.b < 1 {
        return Err(Error::InvalidParameter(format!("B must be positive, got {}", inp.b)));
    }
    if inp.delta < 1 {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let floor = inp.b.checked_mul(-2).ok_or(Error::Overflow)?;
    for (id, e) in g.edges().iter().enumerate() {
        if e.weight < floor {
            return Err(Error::WeightBelowMinimum { edge: id, weight: e.weight, min: floor });
        }
    }
    let phi = scale_down_rec(g, inp.delta, inp.b, ctx, 1)?;
    if !phi.is_feasible_above(g, -inp.b) {
        return Err(Error::internal("scale_down output violates w_phi >= -B"));
    }
    Ok(phi)
}

fn scale_down_rec(g: &Graph, delta: u64, b: Weight, ctx: &mut ExecutionContext, depth: u32) -> Result<PriceFunction> {
    ctx.diagnostics.scale_down_calls += 1;
    ctx.diagnostics.scale_down_max_depth = ctx.diagnostics.scale_down_max_depth.max(depth);
    let n = g.n();
    if g.min_weight().map_or(true, |w| w >= -b) {
        return Ok(PriceFunction::zeros(n));
    }
    let negative = g.edges().iter().filter(|e| e.weight < 0).count() as u64;
    // A simple path uses each negative edge at most once.
    let delta = delta.min(negative);
    let gb = shift_negative_weights(g, b)?;

    let phi2 = if delta <= 2 {
        PriceFunction::zeros(n)
    } else {
        let d = delta.div_ceil(2);
        let diameter = (d as Weight).checked_mul(b).ok_or(Error::Overflow)?;

        // Phase 0: decompose G^B with negative weights clamped to zero.
        let gb_nonneg = gb.map_weights(|e| e.weight.max(0));
        let params = LddParams {
            diameter,
            global_n: ctx.global_n,
            c_sample: ctx.constants.c_sample,
            p_numerator: ctx.constants.p_numerator,
        };
        let ldd = low_diam_decomposition_budgeted(&gb_nonneg, &params, &mut ctx.rng, &mut ctx.budget)?;
        ctx.diagnostics.ldd_calls += ldd.stats.calls;
        ctx.diagnostics.ldd_premature_terminations += ldd.stats.premature_terminations;
        let mut removed = vec![false; g.m()];
        for &id in &ldd.removed {
            removed[id] = true;
        }
        let parts = scc_filtered(&gb, |id| !removed[id]);

        // Phase 1: recurse on the edges inside SCCs, with the original
        // weights. Vertices without such edges are left out.
        let (h, local) = intra_part_graph(g, |v| parts.part_of(v));
        let phi1_local = scale_down_rec(&h, d, b, ctx, depth + 1)?;
        let phi1 = PriceFunction::from_vec(
            local.iter().map(|&x| if x == NO_VERTEX { 0 } else { phi1_local.get(x) }).collect(),
        );

        // Phase 2: fix the edges between SCCs.
        let gb_phi1 = apply_price(&gb, &phi1)?;
        let dag = keep_edges(&gb_phi1, |id| !removed[id]);
        let psi = fix_dag_edges(&dag.graph, &parts)?;
        let phi2 = phi1.compose(&psi)?;
        debug_assert!(gb.edges().iter().enumerate().all(|(id, e)| removed[id]
            || phi2.reduced_weight(e).is_some_and(|w| w >= 0)));
        phi2
    };

    // Phase 3: a dummy source with φ2(s) = 0, then ElimNeg.
    let (gbs, s) = add_dummy_source(&gb);
    let phi2_s = phi2.extended(0);
    let gbs_phi2 = apply_price(&gbs, &phi2_s)?;
    let (psi, stats) = elim_neg_with_stats(&gbs_phi2, s, &mut ctx.budget)?;
    ctx.diagnostics.elim_neg_rounds += stats.rounds;
    let phi3 = phi2_s.compose(&psi)?.truncated(n);
    if !phi3.is_feasible_above(&gb, 0) {
        return Err(Error::internal("scale_down phase 3 left a negative edge in G^B"));
    }
    Ok(phi3)
}

const NO_VERTEX: VertexId = VertexId::MAX;

/// Edges whose endpoints share a part, on a compacted vertex set; also the
/// compact id of every vertex, or `NO_VERTEX`.
fn intra_part_graph(g: &Graph, part_of: impl Fn(VertexId) -> usize) -> (Graph, Vec<VertexId>) {
    let mut local = vec![NO_VERTEX; g.n()];
    let mut next = 0;
    let mut id = |v: VertexId, local: &mut Vec<VertexId>| {
        if local[v] == NO_VERTEX {
            local[v] = next;
            next += 1;
        }
        local[v]
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        if part_of(e.src) == part_of(e.dst) {
            let (u, v) = (id(e.src, &mut local), id(e.dst, &mut local));
            edges.push(Edge::new(u, v, e.weight));
        }
    }
    (Graph::from_edges(next, edges), local)
}
