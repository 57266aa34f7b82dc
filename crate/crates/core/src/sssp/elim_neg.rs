use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{StepBudget, INF};
use crate::error::{Error, Exhaustion, Result};
use crate::graph::{Graph, VertexId, Weight};
use crate::price::PriceFunction;

/// Operation counts of one ElimNeg run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ElimNegStats {
    pub pushes: u64,
    pub pops: u64,
    pub relaxations: u64,
    /// Dijkstra phase + Bellman-Ford phase iterations.
    pub rounds: u64,
}

impl ElimNegStats {
    pub fn queue_ops(&self) -> u64 {
        self.pushes + self.pops
    }
}

/// Price function `φ = dist(s, ·)`, which makes every edge non-negative.
///
/// `s` must reach every vertex. Fails with `BudgetExhausted` if `budget`
/// runs out or if labels are still changing after `|V| + 1` rounds, which
/// only happens when a negative cycle is reachable from `s`.
pub fn elim_neg(g: &Graph, s: VertexId, budget: &mut StepBudget) -> Result<PriceFunction> {
    elim_neg_with_stats(g, s, budget).map(|(phi, _)| phi)
}

pub fn elim_neg_with_stats(
    g: &Graph,
    s: VertexId,
    budget: &mut StepBudget,
) -> Result<(PriceFunction, ElimNegStats)> {
    g.check_vertex(s)?;
    let n = g.n();
    let mut stats = ElimNegStats::default();
    let mut d = vec![INF; n];
    let mut marked = vec![false; n];
    let mut marked_list: Vec<VertexId> = Vec::new();
    let mut heap = BinaryHeap::new();

    d[s] = 0;
    heap.push(Reverse((0 as Weight, s)));
    stats.pushes += 1;
    budget.charge(1)?;

    loop {
        stats.rounds += 1;
        if stats.rounds > n as u64 + 1 {
            return Err(Error::BudgetExhausted(Exhaustion::Rounds { rounds: stats.rounds - 1, vertices: n }));
        }

        // Dijkstra phase over non-negative edges.
        while let Some(Reverse((dv, v))) = heap.pop() {
            stats.pops += 1;
            budget.charge(1)?;
            if dv != d[v] {
                continue;
            }
            if !marked[v] {
                marked[v] = true;
                marked_list.push(v);
            }
            for &id in g.out_edges(v) {
                let e = g.edge(id);
                if e.weight < 0 {
                    continue;
                }
                stats.relaxations += 1;
                budget.charge(1)?;
                let nd = dv.checked_add(e.weight).ok_or(Error::Overflow)?;
                if nd < d[e.dst] {
                    d[e.dst] = nd;
                    heap.push(Reverse((nd, e.dst)));
                    stats.pushes += 1;
                    budget.charge(1)?;
                }
            }
        }

        // Bellman-Ford phase: all out-edges of marked vertices.
        for v in marked_list.drain(..) {
            marked[v] = false;
            let dv = d[v];
            for &id in g.out_edges(v) {
                let e = g.edge(id);
                stats.relaxations += 1;
                budget.charge(1)?;
                let nd = dv.checked_add(e.weight).ok_or(Error::Overflow)?;
                if nd < d[e.dst] {
                    d[e.dst] = nd;
                    heap.push(Reverse((nd, e.dst)));
                    stats.pushes += 1;
                    budget.charge(1)?;
                }
            }
        }

        if heap.is_empty() {
            break;
        }
    }

    if let Some(v) = d.iter().position(|&x| x == INF) {
        return Err(Error::Unreachable { from: s, vertex: v });
    }
    let phi = PriceFunction::from_vec(d);
    if let Some(min) = phi.min_reduced_weight(g)? {
        if min < 0 {
            return Err(Error::internal(format!("elim_neg left reduced weight {min}")));
        }
    }
    Ok((phi, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_dummy_source, build_graph};

    #[test]
    fn hand_traced_path() {
        let g = build_graph(3, &[(0, 1, 0), (1, 2, -4)]).unwrap();
        let phi = elim_neg(&g, 0, &mut StepBudget::unlimited()).unwrap();
        assert_eq!(phi.values(), &[0, 0, -4]);
        assert_eq!(phi.reduced_weight(g.edge(1)), Some(0));
    }

    #[test]
    fn negative_cycle_exhausts_rounds() {
        let g = build_graph(3, &[(0, 1, 1), (1, 2, -3), (2, 1, 1)]).unwrap();
        let err = elim_neg(&g, 0, &mut StepBudget::unlimited()).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(x) if x.certifies_negative_cycle()));
    }

    #[test]
    fn small_budget_exhausts_steps() {
        let g = build_graph(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let err = elim_neg(&g, 0, &mut StepBudget::new(2)).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(Exhaustion::Steps { .. })));
    }

    #[test]
    fn unreachable_vertex_is_an_error() {
        let g = build_graph(2, &[]).unwrap();
        let err = elim_neg(&g, 0, &mut StepBudget::unlimited()).unwrap_err();
        assert_eq!(err, Error::Unreachable { from: 0, vertex: 1 });
    }

    #[test]
    fn dummy_source_prices() {
        let g = build_graph(3, &[(0, 1, -2), (1, 2, -2), (2, 0, 5)]).unwrap();
        let (gs, s) = add_dummy_source(&g);
        let phi = elim_neg(&gs, s, &mut StepBudget::unlimited()).unwrap();
        assert_eq!(phi.values(), &[0, -2, -4, 0]);
    }
}
