//! Brute-force oracles shared by the integration tests. None of them call
//! into the solver code; they only read graphs.

#![allow(dead_code)]

use std::collections::VecDeque;

use negsssp::rng::Rng;
use negsssp::{Edge, Graph, VertexId, Weight};

pub const UNREACHABLE: Option<Weight> = None;

/// Random multigraph with uniform endpoints and weights in `[lo, hi]`.
pub fn random_graph(rng: &mut Rng, n: usize, m: usize, lo: Weight, hi: Weight) -> Graph {
    let edges = (0..m)
        .map(|_| {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            Edge::new(u, v, rng.range_inclusive(lo, hi))
        })
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Random graph with a hidden potential: `w = w' + π(u) - π(v)`, `w' >= 0`.
pub fn hidden_potential_graph(rng: &mut Rng, n: usize, m: usize, span: Weight, extra: Weight) -> Graph {
    let pi: Vec<Weight> = (0..n).map(|_| rng.range_inclusive(0, span)).collect();
    let edges = (0..m)
        .map(|_| {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            Edge::new(u, v, rng.range_inclusive(0, extra) + pi[u] - pi[v])
        })
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Graph plus a vertex `n` with a zero edge to every vertex.
pub fn with_dummy(g: &Graph) -> (Graph, VertexId) {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| Edge::new(n, v, 0)));
    (Graph::new(n + 1, edges).unwrap(), n)
}

/// All-pairs distances by Floyd-Warshall, or `None` if some vertex lies on
/// a negative cycle.
pub fn floyd(g: &Graph) -> Option<Vec<Vec<Option<Weight>>>> {
    let n = g.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        let cur = &mut d[e.src][e.dst];
        if cur.map_or(true, |c| e.weight < c) {
            *cur = Some(e.weight);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    let via = ik + kj;
                    if d[i][j].map_or(true, |c| via < c) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    if (0..n).any(|v| d[v][v].is_some_and(|x| x < 0)) {
        return None;
    }
    Some(d)
}

/// Single-source distances by textbook Bellman-Ford (n - 1 full passes),
/// or `None` if a negative cycle is reachable from `s`.
pub fn bellman_ford(g: &Graph, s: VertexId) -> Option<Vec<Option<Weight>>> {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n];
    d[s] = Some(0);
    for _ in 0..n.saturating_sub(1) {
        for e in g.edges() {
            if let Some(du) = d[e.src] {
                if d[e.dst].map_or(true, |dv| du + e.weight < dv) {
                    d[e.dst] = Some(du + e.weight);
                }
            }
        }
    }
    for e in g.edges() {
        if let Some(du) = d[e.src] {
            if d[e.dst].map_or(true, |dv| du + e.weight < dv) {
                return None;
            }
        }
    }
    Some(d)
}

/// True iff some cycle anywhere in `g` has negative weight.
pub fn has_negative_cycle(g: &Graph) -> bool {
    let (h, s) = with_dummy(g);
    bellman_ford(&h, s).is_none()
}

/// `G^{+b}`: `b` added to every edge.
pub fn plus(g: &Graph, b: Weight) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|e| Edge::new(e.src, e.dst, e.weight + b)).collect()).unwrap()
}

/// Smallest `b >= 0` with no negative cycle in `G^{+b}`, by linear scan.
pub fn threshold_scan(g: &Graph) -> Weight {
    (0..).find(|&b| !has_negative_cycle(&plus(g, b))).unwrap()
}

/// Minimum number of negative edges over all shortest `s -> v` paths, for
/// every `v` reachable from `s`. Requires no negative cycle reachable from
/// `s`. A path is shortest iff it uses only tight edges, so this is a 0-1
/// BFS over the tight subgraph.
pub fn eta(g: &Graph, s: VertexId) -> Vec<Option<usize>> {
    let d = bellman_ford(g, s).expect("negative cycle reachable");
    let n = g.n();
    let mut best = vec![None::<usize>; n];
    let mut dq = VecDeque::new();
    best[s] = Some(0);
    dq.push_back(s);
    while let Some(u) = dq.pop_front() {
        let bu = best[u].unwrap();
        for &id in g.out_edges(u) {
            let e = g.edge(id);
            if d[e.dst] != Some(d[u].unwrap() + e.weight) {
                continue;
            }
            let cost = usize::from(e.weight < 0);
            if best[e.dst].map_or(true, |b| bu + cost < b) {
                best[e.dst] = Some(bu + cost);
                if cost == 0 {
                    dq.push_front(e.dst);
                } else {
                    dq.push_back(e.dst);
                }
            }
        }
    }
    best
}
