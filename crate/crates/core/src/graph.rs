//! Directed weighted multigraph and the weight transforms used throughout the
//! solver: dummy source, negative-edge shift `G^B`, uniform shift `G^{+B}`,
//! scaling, edge removal and induced subgraphs.

use std::sync::Arc;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Weight = i128;

/// Input weights must satisfy `|w| <= WEIGHT_LIMIT`. With `n <= 2^20` this
/// leaves room for the `2n` and `n^3` scalings done internally.
pub const WEIGHT_LIMIT: Weight = 1 << 90;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn new(src: VertexId, dst: VertexId, weight: Weight) -> Self {
        Edge { src, dst, weight }
    }
}

/// Immutable directed multigraph on vertices `0..n`.
///
/// Edge ids are positions in the edge list. Out-adjacency is stored in
/// compressed form and lists each vertex's out-edges in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// Shared by graphs that differ only in weights.
    out: Arc<Adjacency>,
}

/// Compressed adjacency over edge ids, used for the reverse direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    ids: Vec<EdgeId>,
}

impl Adjacency {
    fn build(n: usize, edges: &[Edge], key: impl Fn(&Edge) -> VertexId) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for e in edges {
            offsets[key(e) + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut ids = vec![0; edges.len()];
        for (id, e) in edges.iter().enumerate() {
            let k = key(e);
            ids[fill[k]] = id;
            fill[k] += 1;
        }
        Adjacency { offsets, ids }
    }

    #[inline]
    pub fn of(&self, v: VertexId) -> &[EdgeId] {
        &self.ids[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl Graph {
    /// Builds a graph, checking endpoints and the input weight guard.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for (id, e) in edges.iter().enumerate() {
            for v in [e.src, e.dst] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.weight.abs() > WEIGHT_LIMIT {
                return Err(Error::WeightOutOfRange { edge: id, weight: e.weight });
            }
        }
        Ok(Self::from_edges(n, edges))
    }

    /// Builds a graph from edges whose endpoints are known to be valid.
    /// Internal transforms use this since their weights may exceed the input
    /// guard (e.g. after scaling by `n^3`).
    pub(crate) fn from_edges(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.src < n && e.dst < n));
        let out = Arc::new(Adjacency::build(n, &edges, |e| e.src));
        Graph { n, edges, out }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, Vec::new())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    #[inline]
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        self.out.of(v)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out.offsets[v + 1] - self.out.offsets[v]
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn in_adjacency(&self) -> Adjacency {
        Adjacency::build(self.n, &self.edges, |e| e.dst)
    }

    pub fn min_weight(&self) -> Option<Weight> {
        self.edges.iter().map(|e| e.weight).min()
    }

    pub fn max_weight(&self) -> Option<Weight> {
        self.edges.iter().map(|e| e.weight).max()
    }

    pub fn has_negative_edge(&self) -> bool {
        self.edges.iter().any(|e| e.weight < 0)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// First negative edge, as an error, if any.
    pub fn require_nonnegative(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.weight < 0) {
            None => Ok(()),
            Some(id) => Err(Error::NegativeWeightPresent { edge: id, weight: self.edges[id].weight }),
        }
    }

    /// Same topology, weights replaced by `f(edge)`; `None` reports overflow.
    pub fn try_map_weights(&self, mut f: impl FnMut(&Edge) -> Option<Weight>) -> Result<Graph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let weight = f(e).ok_or(Error::Overflow)?;
            edges.push(Edge { weight, ..*e });
        }
        Ok(Graph { n: self.n, edges, out: Arc::clone(&self.out) })
    }

    pub fn map_weights(&self, mut f: impl FnMut(&Edge) -> Weight) -> Graph {
        self.try_map_weights(|e| Some(f(e))).expect("infallible weight map")
    }

    /// Weight of an edge sequence, with overflow checking.
    pub fn path_weight(&self, ids: &[EdgeId]) -> Result<Weight> {
        ids.iter().try_fold(0 as Weight, |acc, &id| {
            let e = self.edges.get(id).ok_or(Error::InvalidEdge(id))?;
            acc.checked_add(e.weight).ok_or(Error::Overflow)
        })
    }
}

/// Checked constructor from `(src, dst, weight)` triples.
pub fn build_graph(n: usize, edges: &[(VertexId, VertexId, Weight)]) -> Result<Graph> {
    Graph::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect())
}

/// `W_G = max(2, -min_e w(e))`.
pub fn max_neg_magnitude(g: &Graph) -> Weight {
    let most_negative = g.min_weight().map_or(0, |w| -w);
    most_negative.max(2)
}

/// Adds a dummy source `s = n` with a weight-0 edge to every vertex. Existing
/// edge ids are unchanged; the dummy edge to `v` gets id `m + v`.
pub fn add_dummy_source(g: &Graph) -> (Graph, VertexId) {
    let s = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend((0..g.n()).map(|v| Edge::new(s, v, 0)));
    (Graph::from_edges(g.n() + 1, edges), s)
}

/// `G^B`: adds `b` to every negative weight only.
pub fn shift_negative_weights(g: &Graph, b: Weight) -> Result<Graph> {
    if b < 1 {
        return Err(Error::InvalidParameter(format!("shift must be positive, got {b}")));
    }
    Ok(g.map_weights(|e| if e.weight < 0 { e.weight + b } else { e.weight }))
}

/// `G^{+B}`: adds `b` to every weight.
pub fn shift_all_weights(g: &Graph, b: Weight) -> Result<Graph> {
    if b < 0 {
        return Err(Error::InvalidParameter(format!("shift must be nonnegative, got {b}")));
    }
    g.try_map_weights(|e| e.weight.checked_add(b))
}

/// Multiplies every weight by `c >= 1`.
pub fn scale_weights(g: &Graph, c: Weight) -> Result<Graph> {
    if c < 1 {
        return Err(Error::InvalidParameter(format!("scale must be positive, got {c}")));
    }
    g.try_map_weights(|e| e.weight.checked_mul(c))
}

/// A graph derived from a parent, with maps back to the parent's ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertex_origin[v]` is the parent vertex of subgraph vertex `v`.
    pub vertex_origin: Vec<VertexId>,
    /// `edge_origin[e]` is the parent edge id of subgraph edge `e`.
    pub edge_origin: Vec<EdgeId>,
}

/// `G \ S` on the same vertex set. Remaining edges keep their relative order.
pub fn remove_edges(g: &Graph, removed: &[EdgeId]) -> Result<Subgraph> {
    let mut drop = vec![false; g.m()];
    for &id in removed {
        *drop.get_mut(id).ok_or(Error::InvalidEdge(id))? = true;
    }
    Ok(keep_edges(g, |id| !drop[id]))
}

pub(crate) fn keep_edges(g: &Graph, mut keep: impl FnMut(EdgeId) -> bool) -> Subgraph {
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if keep(id) {
            edges.push(*e);
            edge_origin.push(id);
        }
    }
    Subgraph {
        graph: Graph::from_edges(g.n(), edges),
        vertex_origin: (0..g.n()).collect(),
        edge_origin,
    }
}

/// `G[V']`, relabelled densely in the order vertices appear in `vertices`.
pub fn induced_subgraph(g: &Graph, vertices: &[VertexId]) -> Result<Subgraph> {
    const ABSENT: usize = usize::MAX;
    let mut local = vec![ABSENT; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        g.check_vertex(v)?;
        if local[v] != ABSENT {
            return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
        }
        local[v] = i;
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (local[e.src], local[e.dst]);
        if a != ABSENT && b != ABSENT {
            edges.push(Edge::new(a, b, e.weight));
            edge_origin.push(id);
        }
    }
    Ok(Subgraph {
        graph: Graph::from_edges(vertices.len(), edges),
        vertex_origin: vertices.to_vec(),
        edge_origin,
    })
}
