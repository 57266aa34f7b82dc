use super::goldberg::{ladder_height, level_graph};
use super::las_vegas::{las_vegas_level, LevelOutcome};
use super::monte_carlo::monte_carlo_potentials;
use crate::context::{Constants, Diagnostics, ExecutionContext};
use crate::error::{Error, Result};
use crate::gadget::{reduce_out_degree, GadgetEdge, GadgetMapping};
use crate::graph::{Graph, VertexId};
use crate::price::{apply_price, PriceFunction};
use crate::sssp::{dijkstra_run, NegativeCycle, ShortestPathTree, StepBudget, INF, NO_EDGE};
use crate::verify::{verify_negative_cycle, verify_tree};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SsspOutcome {
    Tree(ShortestPathTree),
    Cycle(NegativeCycle),
}

impl SsspOutcome {
    pub fn tree(&self) -> Option<&ShortestPathTree> {
        match self {
            SsspOutcome::Tree(t) => Some(t),
            SsspOutcome::Cycle(_) => None,
        }
    }

    pub fn cycle(&self) -> Option<&NegativeCycle> {
        match self {
            SsspOutcome::Tree(_) => None,
            SsspOutcome::Cycle(c) => Some(c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsspResult {
    pub outcome: SsspOutcome,
    pub diagnostics: Diagnostics,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveConfig {
    pub seed: u64,
    pub constants: Constants,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { seed: 0, constants: Constants::default() }
    }
}

impl SolveConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolveConfig { seed, ..Self::default() }
    }
}

/// Shortest-path tree from `s`, or a negative cycle anywhere in `g`.
/// Either answer is certified before it is returned.
pub fn solve(g: &Graph, s: VertexId, config: &SolveConfig) -> Result<SsspResult> {
    g.check_vertex(s)?;
    let (reduced, map) = reduce_out_degree(g);
    let mut ctx = ExecutionContext::new(config.seed, reduced.n()).with_constants(config.constants);

    // Bit-scaling ladder over the reduced graph; each level has weights
    // >= -1 after reweighting by twice the previous potential.
    let t = ladder_height(&reduced);
    let mut phi = PriceFunction::zeros(reduced.n());
    for i in 0..=t {
        let base = phi.scaled(2)?;
        let level = apply_price(&level_graph(&reduced, t - i), &base)?;
        let psi = match monte_carlo_potentials(&level, &mut ctx) {
            Ok(psi) => psi,
            Err(Error::MonteCarloFailure { .. }) => match las_vegas_level(&level, &mut ctx)? {
                LevelOutcome::Potentials(psi) => psi,
                LevelOutcome::Cycle(c) => {
                    // Negative at a rounded level means negative in G: the
                    // level weights are ceilings of w / 2^(t-i).
                    let cycle = NegativeCycle::from_edges(g, map.project_edges(&c.edges))?;
                    verify_negative_cycle(g, &cycle)
                        .map_err(|v| Error::internal(format!("cycle certificate failed: {v}")))?;
                    return Ok(SsspResult { outcome: SsspOutcome::Cycle(cycle), diagnostics: ctx.diagnostics });
                }
            },
            Err(e) => return Err(e),
        };
        phi = base.compose(&psi)?;
    }

    let tree = final_tree(g, &reduced, &map, s, &phi)?;
    verify_tree(g, &tree).map_err(|v| Error::internal(format!("tree certificate failed: {v}")))?;
    Ok(SsspResult { outcome: SsspOutcome::Tree(tree), diagnostics: ctx.diagnostics })
}

/// Dijkstra on the reweighted reduced graph from `rep(s)`, mapped back to
/// the original vertices and edges.
fn final_tree(
    g: &Graph,
    reduced: &Graph,
    map: &GadgetMapping,
    s: VertexId,
    phi: &PriceFunction,
) -> Result<ShortestPathTree> {
    let nonneg = apply_price(reduced, phi)?;
    let rs = map.rep(s);
    let run = dijkstra_run(&nonneg, rs, &mut StepBudget::unlimited())?;
    let mut dist = vec![None; g.n()];
    let mut parent = vec![None; g.n()];
    for v in 0..g.n() {
        let x = map.rep(v);
        if run.dist[x] == INF {
            continue;
        }
        let d = run.dist[x]
            .checked_sub(phi.get(rs))
            .and_then(|d| d.checked_add(phi.get(x)))
            .ok_or(Error::Overflow)?;
        dist[v] = Some(d);
        // Last original edge on the tree path to rep(v).
        let mut y = x;
        while y != rs {
            let e = run.parent[y];
            if e == NO_EDGE {
                return Err(Error::internal("broken parent chain"));
            }
            if let GadgetEdge::Original(id) = map.edge(e) {
                parent[v] = Some(id);
                break;
            }
            y = reduced.edge(e).src;
        }
    }
    Ok(ShortestPathTree { source: s, dist, parent })
}
