use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::INF;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Weight};

/// Distance estimates after `k + 1` rounds of "Dijkstra over non-negative
/// edges, then relax every negative edge".
///
/// Estimates never go below the true distance, and are exact for every
/// vertex with a shortest path using at most `k` negative edges. `None`
/// marks vertices not reached.
pub fn sp_with_few_neg_edges(g: &Graph, s: VertexId, k: usize) -> Result<Vec<Option<Weight>>> {
    g.check_vertex(s)?;
    let n = g.n();
    let negative: Vec<usize> = (0..g.m()).filter(|&id| g.edge(id).weight < 0).collect();
    let mut d = vec![INF; n];
    d[s] = 0;
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    for _ in 0..=k {
        done.iter_mut().for_each(|x| *x = false);
        heap.extend((0..n).filter(|&v| d[v] != INF).map(|v| Reverse((d[v], v))));
        while let Some(Reverse((dv, v))) = heap.pop() {
            if done[v] || dv != d[v] {
                continue;
            }
            done[v] = true;
            for &id in g.out_edges(v) {
                let e = g.edge(id);
                if e.weight < 0 {
                    continue;
                }
                let nd = dv.checked_add(e.weight).ok_or(Error::Overflow)?;
                if nd < d[e.dst] {
                    d[e.dst] = nd;
                    heap.push(Reverse((nd, e.dst)));
                }
            }
        }
        for &id in &negative {
            let e = g.edge(id);
            if d[e.src] == INF {
                continue;
            }
            let nd = d[e.src].checked_add(e.weight).ok_or(Error::Overflow)?;
            if nd < d[e.dst] {
                d[e.dst] = nd;
            }
        }
    }
    Ok(d.into_iter().map(|x| (x != INF).then_some(x)).collect())
}
