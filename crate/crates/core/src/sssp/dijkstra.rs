use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{ShortestPathTree, StepBudget, INF, NO_EDGE};
use crate::error::Result;
use crate::graph::{EdgeId, Graph, VertexId, Weight};

/// Raw Dijkstra output: labels, parent edges and settle order.
pub(crate) struct DijkstraRun {
    pub dist: Vec<Weight>,
    pub parent: Vec<EdgeId>,
    /// Vertices in the order they were settled; parents precede children.
    pub order: Vec<VertexId>,
}

impl DijkstraRun {
    pub fn into_tree(self, source: VertexId) -> ShortestPathTree {
        ShortestPathTree {
            source,
            dist: self.dist.iter().map(|&d| (d != INF).then_some(d)).collect(),
            parent: self.parent.iter().map(|&e| (e != NO_EDGE).then_some(e)).collect(),
        }
    }
}

/// Binary-heap Dijkstra with lazy deletion. Weights must be non-negative;
/// the caller checks. Ties are broken by vertex id.
pub(crate) fn dijkstra_run(g: &Graph, s: VertexId, budget: &mut StepBudget) -> Result<DijkstraRun> {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut parent = vec![NO_EDGE; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();
    dist[s] = 0;
    heap.push(Reverse((0 as Weight, s)));
    budget.charge(1)?;
    while let Some(Reverse((d, v))) = heap.pop() {
        budget.charge(1)?;
        if done[v] || d != dist[v] {
            continue;
        }
        done[v] = true;
        order.push(v);
        for &id in g.out_edges(v) {
            budget.charge(1)?;
            let e = g.edge(id);
            let nd = d + e.weight;
            if nd < dist[e.dst] {
                dist[e.dst] = nd;
                parent[e.dst] = id;
                heap.push(Reverse((nd, e.dst)));
                budget.charge(1)?;
            }
        }
    }
    Ok(DijkstraRun { dist, parent, order })
}

/// Exact single-source shortest paths for non-negative weights.
pub fn dijkstra(g: &Graph, s: VertexId) -> Result<ShortestPathTree> {
    g.check_vertex(s)?;
    g.require_nonnegative()?;
    Ok(dijkstra_run(g, s, &mut StepBudget::unlimited())?.into_tree(s))
}
