use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, Weight};

/// Shortest-path tree rooted at `source`: exact distances (`None` when
/// unreachable) and the tree edge entering each reached vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShortestPathTree {
    pub source: VertexId,
    pub dist: Vec<Option<Weight>>,
    pub parent: Vec<Option<EdgeId>>,
}

impl ShortestPathTree {
    pub fn n(&self) -> usize {
        self.dist.len()
    }

    pub fn dist(&self, v: VertexId) -> Option<Weight> {
        self.dist[v]
    }

    pub fn parent(&self, v: VertexId) -> Option<EdgeId> {
        self.parent[v]
    }

    /// Tree edges from the source to `v`, or `None` if `v` is unreachable.
    /// Assumes the parent pointers form a tree.
    pub fn path_to(&self, g: &Graph, v: VertexId) -> Option<Vec<EdgeId>> {
        self.dist[v]?;
        let mut edges = Vec::new();
        let mut x = v;
        while let Some(e) = self.parent[x] {
            edges.push(e);
            x = g.edge(e).src;
            if edges.len() > self.n() {
                return None;
            }
        }
        edges.reverse();
        Some(edges)
    }
}

/// A closed edge sequence with negative total weight in the graph it was
/// extracted from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegativeCycle {
    /// `vertices[i]` is the tail of `edges[i]`.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub weight: Weight,
}

impl NegativeCycle {
    /// Builds the cycle from its edges, checking that they chain head to
    /// tail, close up, and sum to a negative weight in `g`.
    pub fn from_edges(g: &Graph, edges: Vec<EdgeId>) -> Result<Self> {
        let vertices = closed_walk_vertices(g, &edges)?;
        let weight = g.path_weight(&edges)?;
        if weight >= 0 {
            return Err(Error::internal(format!("cycle has non-negative weight {weight}")));
        }
        Ok(NegativeCycle { vertices, edges, weight })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Tails of a closed walk, or an error if `edges` do not chain and close.
pub(crate) fn closed_walk_vertices(g: &Graph, edges: &[EdgeId]) -> Result<Vec<VertexId>> {
    if edges.is_empty() {
        return Err(Error::internal("empty cycle"));
    }
    for &id in edges {
        if id >= g.m() {
            return Err(Error::InvalidEdge(id));
        }
    }
    for (i, &id) in edges.iter().enumerate() {
        let next = edges[(i + 1) % edges.len()];
        if g.edge(id).dst != g.edge(next).src {
            return Err(Error::internal(format!("edges {id} and {next} do not chain")));
        }
    }
    Ok(edges.iter().map(|&id| g.edge(id).src).collect())
}
