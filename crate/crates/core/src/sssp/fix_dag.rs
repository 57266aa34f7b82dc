use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weight};
use crate::price::PriceFunction;
use crate::scc::VertexPartition;

/// Price function that is constant on each part and makes every edge
/// between parts non-negative.
///
/// Requires that no edge inside a part is negative and that the parts,
/// contracted, form a DAG. Part `j` in topological order gets the prefix
/// sum of `μ_i = min(0, min weight entering part i)` over `i ≤ j`.
pub fn fix_dag_edges(g: &Graph, partition: &VertexPartition) -> Result<PriceFunction> {
    if partition.part_assignment().len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), found: partition.part_assignment().len() });
    }
    let k = partition.len();
    let mut entering_min: Vec<Weight> = vec![0; k];
    let mut indeg = vec![0usize; k];
    // Successor lists in compressed form: part `a` owns succ[start[a]..start[a + 1]].
    let mut start = vec![0usize; k + 1];
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (partition.part_of(e.src), partition.part_of(e.dst));
        if a == b {
            if e.weight < 0 {
                return Err(Error::NegativeIntraPartEdge { edge: id });
            }
            continue;
        }
        entering_min[b] = entering_min[b].min(e.weight);
        start[a + 1] += 1;
        indeg[b] += 1;
    }
    for a in 0..k {
        start[a + 1] += start[a];
    }
    let mut fill = start.clone();
    let mut succ = vec![0usize; start[k]];
    for e in g.edges() {
        let (a, b) = (partition.part_of(e.src), partition.part_of(e.dst));
        if a != b {
            succ[fill[a]] = b;
            fill[a] += 1;
        }
    }

    // Kahn's algorithm, seeded in the partition's own order.
    let mut queue: VecDeque<usize> = partition.order().iter().copied().filter(|&p| indeg[p] == 0).collect();
    let mut prefix: Weight = 0;
    let mut level = vec![0 as Weight; k];
    let mut done = 0;
    while let Some(p) = queue.pop_front() {
        done += 1;
        prefix = prefix.checked_add(entering_min[p]).ok_or(Error::Overflow)?;
        level[p] = prefix;
        for &q in &succ[start[p]..start[p + 1]] {
            indeg[q] -= 1;
            if indeg[q] == 0 {
                queue.push_back(q);
            }
        }
    }
    if done != k {
        return Err(Error::PartitionNotDag);
    }
    Ok(PriceFunction::from_vec((0..g.n()).map(|v| level[partition.part_of(v)]).collect()))
}
