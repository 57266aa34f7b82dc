use super::{NegativeCycle, ShortestPathTree, INF, NO_EDGE};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BellmanFordOutcome {
    Tree(ShortestPathTree),
    /// A negative cycle reachable from the source.
    Cycle(NegativeCycle),
}

impl BellmanFordOutcome {
    pub fn tree(&self) -> Option<&ShortestPathTree> {
        match self {
            BellmanFordOutcome::Tree(t) => Some(t),
            BellmanFordOutcome::Cycle(_) => None,
        }
    }

    pub fn cycle(&self) -> Option<&NegativeCycle> {
        match self {
            BellmanFordOutcome::Tree(_) => None,
            BellmanFordOutcome::Cycle(c) => Some(c),
        }
    }

    pub fn has_cycle(&self) -> bool {
        matches!(self, BellmanFordOutcome::Cycle(_))
    }
}

/// Round-based Bellman-Ford from `s`. Used as the reference oracle.
pub fn bellman_ford(g: &Graph, s: VertexId) -> Result<BellmanFordOutcome> {
    let mut relaxations = 0;
    bellman_ford_counted(g, s, &mut relaxations)
}

/// As [`bellman_ford`], adding the number of edge relaxations attempted to
/// `relaxations`. Stops early after a round without label changes.
pub fn bellman_ford_counted(g: &Graph, s: VertexId, relaxations: &mut u64) -> Result<BellmanFordOutcome> {
    g.check_vertex(s)?;
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut parent = vec![NO_EDGE; n];
    dist[s] = 0;
    let mut last_changed = None;
    for _round in 0..n {
        last_changed = None;
        for (id, e) in g.edges().iter().enumerate() {
            *relaxations += 1;
            let du = dist[e.src];
            if du == INF {
                continue;
            }
            let nd = du.checked_add(e.weight).ok_or(Error::Overflow)?;
            if nd < dist[e.dst] {
                dist[e.dst] = nd;
                parent[e.dst] = id;
                last_changed = Some(e.dst);
            }
        }
        if last_changed.is_none() {
            break;
        }
    }

    let Some(x) = last_changed else {
        let tree = ShortestPathTree {
            source: s,
            dist: dist.iter().map(|&d| (d != INF).then_some(d)).collect(),
            parent: parent.iter().map(|&e| (e != NO_EDGE).then_some(e)).collect(),
        };
        return Ok(BellmanFordOutcome::Tree(tree));
    };

    // A change in round n means the parent graph contains a negative cycle.
    let start = walk_back(g, &parent, x, n).or_else(|| find_parent_cycle(g, &parent));
    let Some(start) = start else {
        return Err(Error::internal("no cycle in parent graph after n rounds"));
    };
    let mut edges = Vec::new();
    let mut y = start;
    loop {
        let e = parent[y];
        edges.push(e);
        y = g.edge(e).src;
        if y == start {
            break;
        }
    }
    edges.reverse();
    NegativeCycle::from_edges(g, edges).map(BellmanFordOutcome::Cycle)
}

/// Follows parent edges `steps` times from `x`.
fn walk_back(g: &Graph, parent: &[usize], mut x: VertexId, steps: usize) -> Option<VertexId> {
    for _ in 0..steps {
        let e = parent[x];
        if e == NO_EDGE {
            return None;
        }
        x = g.edge(e).src;
    }
    Some(x)
}

/// Any vertex on a cycle of the parent graph.
fn find_parent_cycle(g: &Graph, parent: &[usize]) -> Option<VertexId> {
    let n = g.n();
    let mut stamp = vec![usize::MAX; n];
    for root in 0..n {
        let mut x = root;
        while stamp[x] == usize::MAX {
            stamp[x] = root;
            let e = parent[x];
            if e == NO_EDGE {
                break;
            }
            x = g.edge(e).src;
            if stamp[x] == root {
                return Some(x);
            }
        }
    }
    None
}
