//! Strongly connected components and vertex partitions.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Disjoint cover of `0..n` by parts, plus an ordering of the parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    /// Members of part `i` are `members[starts[i]..starts[i + 1]]`.
    members: Vec<VertexId>,
    starts: Vec<usize>,
    part_of: Vec<usize>,
    order: Vec<usize>,
}

impl VertexPartition {
    /// Validates that `parts` cover `0..n` exactly once and that `order` is a
    /// permutation of the part indices.
    pub fn new(n: usize, parts: Vec<Vec<VertexId>>, order: Vec<usize>) -> Result<Self> {
        const UNSET: usize = usize::MAX;
        let mut part_of = vec![UNSET; n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if part_of[v] != UNSET {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == UNSET) {
            return Err(Error::InvalidPartition(format!("vertex {v} in no part")));
        }
        let mut seen = vec![false; parts.len()];
        if order.len() != parts.len() {
            return Err(Error::InvalidPartition("order is not a permutation of parts".into()));
        }
        for &p in &order {
            if p >= parts.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPartition("order is not a permutation of parts".into()));
            }
        }
        let mut starts = vec![0];
        for part in &parts {
            starts.push(starts.last().unwrap() + part.len());
        }
        Ok(VertexPartition { members: parts.concat(), starts, part_of, order })
    }

    /// Parts listed in their natural index order.
    pub fn from_parts(n: usize, parts: Vec<Vec<VertexId>>) -> Result<Self> {
        let order = (0..parts.len()).collect();
        Self::new(n, parts, order)
    }

    pub fn part(&self, i: usize) -> &[VertexId] {
        &self.members[self.starts[i]..self.starts[i + 1]]
    }

    pub fn parts(&self) -> impl Iterator<Item = &[VertexId]> {
        (0..self.len()).map(|i| self.part(i))
    }

    pub fn len(&self) -> usize {
        self.starts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn part_of(&self, v: VertexId) -> usize {
        self.part_of[v]
    }

    pub fn part_assignment(&self) -> &[usize] {
        &self.part_of
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Every edge between distinct parts goes forward in `order`.
    pub fn is_topological(&self, g: &Graph) -> bool {
        let mut rank = vec![0usize; self.len()];
        for (pos, &p) in self.order.iter().enumerate() {
            rank[p] = pos;
        }
        g.edges().iter().all(|e| {
            let (a, b) = (self.part_of[e.src], self.part_of[e.dst]);
            a == b || rank[a] < rank[b]
        })
    }
}

/// Maximal SCCs, numbered so that part index order is a topological order of
/// the condensation.
pub fn strongly_connected_components(g: &Graph) -> VertexPartition {
    scc_filtered(g, |_| true)
}

/// SCCs of the subgraph made of the edges accepted by `keep`.
pub(crate) fn scc_filtered(g: &Graph, keep: impl Fn(EdgeId) -> bool) -> VertexPartition {
    const UNVISITED: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    // (vertex, position in its out-edge list)
    let mut frames: Vec<(VertexId, usize)> = Vec::new();
    // Components in emission order, flattened, with their end offsets.
    let mut emitted: Vec<VertexId> = Vec::with_capacity(n);
    let mut ends: Vec<usize> = Vec::new();
    let mut next_index = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            let out = g.out_edges(v);
            if *pos < out.len() {
                let id = out[*pos];
                *pos += 1;
                if !keep(id) {
                    continue;
                }
                let x = g.edge(id).dst;
                if index[x] == UNVISITED {
                    index[x] = next_index;
                    low[x] = next_index;
                    next_index += 1;
                    stack.push(x);
                    on_stack[x] = true;
                    frames.push((x, 0));
                } else if on_stack[x] {
                    low[v] = low[v].min(index[x]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let start = emitted.len();
                loop {
                    let x = stack.pop().expect("tarjan stack underflow");
                    on_stack[x] = false;
                    emitted.push(x);
                    if x == v {
                        break;
                    }
                }
                emitted[start..].sort_unstable();
                ends.push(emitted.len());
            }
        }
    }

    // Tarjan emits sink components first.
    let k = ends.len();
    let mut members = Vec::with_capacity(n);
    let mut starts = Vec::with_capacity(k + 1);
    let mut part_of = vec![0; n];
    starts.push(0);
    for i in 0..k {
        let c = k - 1 - i;
        let lo = if c == 0 { 0 } else { ends[c - 1] };
        for &v in &emitted[lo..ends[c]] {
            part_of[v] = i;
            members.push(v);
        }
        starts.push(members.len());
    }
    VertexPartition { members, starts, part_of, order: (0..k).collect() }
}
