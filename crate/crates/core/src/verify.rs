//! Certificates for solver output.

use std::fmt;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::sssp::{closed_walk_vertices, NegativeCycle, ShortestPathTree};

/// First reason a claimed result fails its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { expected: usize, found: usize },
    SourceDistance,
    SourceHasParent,
    /// Parent edge missing, pointing elsewhere, or not tight.
    BadParent { vertex: VertexId },
    /// A reached vertex other than the source has no parent.
    MissingParent { vertex: VertexId },
    /// `dist(u) + w(u, v) < dist(v)`, or `v` unreached while `u` is reached.
    NotRelaxed { edge: EdgeId },
    /// Parent pointers do not lead back to the source.
    ParentCycle { vertex: VertexId },
    Overflow,
    NotClosed,
    NonNegativeWeight,
    WeightMismatch,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { expected, found } => write!(f, "expected {expected} entries, found {found}"),
            Violation::SourceDistance => write!(f, "source distance is not 0"),
            Violation::SourceHasParent => write!(f, "source has a parent edge"),
            Violation::BadParent { vertex } => write!(f, "parent edge of vertex {vertex} is not tight"),
            Violation::MissingParent { vertex } => write!(f, "reached vertex {vertex} has no parent"),
            Violation::NotRelaxed { edge } => write!(f, "edge {edge} violates the triangle inequality"),
            Violation::ParentCycle { vertex } => write!(f, "parent pointers from {vertex} do not reach the source"),
            Violation::Overflow => write!(f, "arithmetic overflow"),
            Violation::NotClosed => write!(f, "edges do not form a closed walk"),
            Violation::NonNegativeWeight => write!(f, "cycle weight is not negative"),
            Violation::WeightMismatch => write!(f, "stated cycle weight differs from the edge sum"),
        }
    }
}

impl std::error::Error for Violation {}

/// Checks the relaxation certificate: `dist(s) = 0`, tight parent edges
/// leading back to `s`, and `dist(u) + w(u, v) >= dist(v)` on every edge
/// leaving a reached vertex. Passing proves the distances exact.
pub fn verify_tree(g: &Graph, t: &ShortestPathTree) -> Result<(), Violation> {
    let n = g.n();
    for len in [t.dist.len(), t.parent.len()] {
        if len != n {
            return Err(Violation::SizeMismatch { expected: n, found: len });
        }
    }
    if t.source >= n || t.dist[t.source] != Some(0) {
        return Err(Violation::SourceDistance);
    }
    if t.parent[t.source].is_some() {
        return Err(Violation::SourceHasParent);
    }
    for v in 0..n {
        match (t.dist[v], t.parent[v]) {
            (None, None) => {}
            (None, Some(_)) => return Err(Violation::BadParent { vertex: v }),
            (Some(_), None) if v != t.source => return Err(Violation::MissingParent { vertex: v }),
            (Some(_), None) => {}
            (Some(dv), Some(id)) => {
                let e = g.edges().get(id).ok_or(Violation::BadParent { vertex: v })?;
                let du = t.dist[e.src].ok_or(Violation::BadParent { vertex: v })?;
                if e.dst != v || du.checked_add(e.weight).ok_or(Violation::Overflow)? != dv {
                    return Err(Violation::BadParent { vertex: v });
                }
            }
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        let Some(du) = t.dist[e.src] else { continue };
        let through = du.checked_add(e.weight).ok_or(Violation::Overflow)?;
        match t.dist[e.dst] {
            Some(dv) if dv <= through => {}
            _ => return Err(Violation::NotRelaxed { edge: id }),
        }
    }
    // With every parent edge tight and every edge relaxed, a parent cycle
    // would be a zero-weight cycle; reject it so paths are well defined.
    let mut state = vec![0u8; n];
    state[t.source] = 2;
    for v in 0..n {
        if t.dist[v].is_none() || state[v] == 2 {
            continue;
        }
        let mut path = Vec::new();
        let mut x = v;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            let id = t.parent[x].ok_or(Violation::MissingParent { vertex: x })?;
            x = g.edge(id).src;
        }
        if state[x] == 1 {
            return Err(Violation::ParentCycle { vertex: v });
        }
        for y in path {
            state[y] = 2;
        }
    }
    Ok(())
}

/// Checks that the cycle chains, closes, and has negative weight in `g`
/// equal to its stated weight.
pub fn verify_negative_cycle(g: &Graph, c: &NegativeCycle) -> Result<(), Violation> {
    let tails = closed_walk_vertices(g, &c.edges).map_err(|_| Violation::NotClosed)?;
    if tails != c.vertices {
        return Err(Violation::NotClosed);
    }
    let w = g.path_weight(&c.edges).map_err(|_| Violation::Overflow)?;
    if w != c.weight {
        return Err(Violation::WeightMismatch);
    }
    if w >= 0 {
        return Err(Violation::NonNegativeWeight);
    }
    Ok(())
}
