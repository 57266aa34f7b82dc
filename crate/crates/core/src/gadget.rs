//! Out-degree reduction: every vertex becomes a zero-weight directed cycle
//! with one node per incident edge slot.

use crate::graph::{Edge, EdgeId, Graph, VertexId};

/// Origin of an edge of the reduced graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetEdge {
    /// Zero-weight edge of a vertex cycle.
    Cycle,
    /// Copy of the original edge with this id.
    Original(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMapping {
    orig_n: usize,
    rep: Vec<VertexId>,
    owner: Vec<VertexId>,
    edge_map: Vec<GadgetEdge>,
}

impl GadgetMapping {
    pub fn orig_n(&self) -> usize {
        self.orig_n
    }

    /// Canonical gadget vertex of original vertex `v`.
    pub fn rep(&self, v: VertexId) -> VertexId {
        self.rep[v]
    }

    /// Original vertex that gadget vertex `x` belongs to.
    pub fn owner(&self, x: VertexId) -> VertexId {
        self.owner[x]
    }

    pub fn edge(&self, e: EdgeId) -> GadgetEdge {
        self.edge_map[e]
    }

    pub fn original_edge(&self, e: EdgeId) -> Option<EdgeId> {
        match self.edge_map[e] {
            GadgetEdge::Original(id) => Some(id),
            GadgetEdge::Cycle => None,
        }
    }

    /// Maps an edge sequence of the reduced graph to the original edges it
    /// uses, dropping cycle edges.
    pub fn project_edges(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges.iter().filter_map(|&e| self.original_edge(e)).collect()
    }
}

/// Replaces each vertex by a zero-weight cycle of length
/// `max(1, in_degree + out_degree)`, attaching each incident edge to its own
/// cycle node. Every vertex of the result has out-degree at most 2.
///
/// Edge `i < m` of the result is a copy of original edge `i`; cycle edges
/// follow. Vertices with at most one incident edge stay a single node.
pub fn reduce_out_degree(g: &Graph) -> (Graph, GadgetMapping) {
    let n = g.n();
    let mut in_deg = vec![0usize; n];
    for e in g.edges() {
        in_deg[e.dst] += 1;
    }
    let mut start = Vec::with_capacity(n + 1);
    let mut total = 0;
    for v in 0..n {
        start.push(total);
        total += (g.out_degree(v) + in_deg[v]).max(1);
    }
    start.push(total);

    let mut owner = vec![0; total];
    for v in 0..n {
        owner[start[v]..start[v + 1]].fill(v);
    }

    // Out-edges take the first slots of their source block, in adjacency order.
    let mut tail = vec![0; g.m()];
    for v in 0..n {
        for (j, &id) in g.out_edges(v).iter().enumerate() {
            tail[id] = start[v] + j;
        }
    }
    let mut next_in: Vec<usize> = (0..n).map(|v| start[v] + g.out_degree(v)).collect();
    let mut edges = Vec::with_capacity(g.m() + total);
    for (id, e) in g.edges().iter().enumerate() {
        let head = next_in[e.dst];
        next_in[e.dst] += 1;
        edges.push(Edge::new(tail[id], head, e.weight));
    }
    let mut edge_map: Vec<GadgetEdge> = (0..g.m()).map(GadgetEdge::Original).collect();
    for v in 0..n {
        let (a, b) = (start[v], start[v + 1]);
        if b - a >= 2 {
            for x in a..b {
                let y = if x + 1 == b { a } else { x + 1 };
                edges.push(Edge::new(x, y, 0));
                edge_map.push(GadgetEdge::Cycle);
            }
        }
    }

    let rep = start[..n].to_vec();
    (Graph::from_edges(total, edges), GadgetMapping { orig_n: n, rep, owner, edge_map })
}
