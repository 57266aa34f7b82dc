//! Low-diameter decomposition of directed graphs with non-negative weights.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, EdgeId, Graph, VertexId, Weight};
use crate::rng::{sample_geometric, GeometricParam, Rng};
use crate::sssp::StepBudget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Vertices that can reach the centre within the radius.
    In,
    /// Vertices reachable from the centre within the radius.
    Out,
}

/// A ball and its boundary: edges entering an in-ball, or leaving an
/// out-ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub vertices: Vec<VertexId>,
    pub boundary: Vec<EdgeId>,
}

/// Exact ball `{u : dist(v, u) <= r}` (or `dist(u, v)` for in-balls) by
/// truncated Dijkstra. Both lists come back sorted.
pub fn bounded_ball(g: &Graph, v: VertexId, r: Weight, dir: Direction) -> Result<Ball> {
    g.check_vertex(v)?;
    g.require_nonnegative()?;
    if r < 0 {
        return Err(Error::InvalidParameter(format!("negative radius {r}")));
    }
    let inadj = g.in_adjacency();
    let mut scratch = BallScratch::new(g.n());
    let mut vertices =
        scratch.grow(g, &inadj, v, r, dir, |_| true, None, &mut StepBudget::unlimited())?.to_vec();
    let mut boundary: Vec<EdgeId> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| match dir {
            Direction::Out => scratch.contains(e.src) && !scratch.contains(e.dst),
            Direction::In => scratch.contains(e.dst) && !scratch.contains(e.src),
        })
        .map(|(id, _)| id)
        .collect();
    vertices.sort_unstable();
    boundary.sort_unstable();
    Ok(Ball { vertices, boundary })
}

/// Reusable buffers for repeated truncated Dijkstra runs on one graph.
struct BallScratch {
    dist: Vec<Weight>,
    seen: Vec<u32>,
    settled: Vec<u32>,
    epoch: u32,
    order: Vec<VertexId>,
    heap: BinaryHeap<Reverse<(Weight, VertexId)>>,
}

impl BallScratch {
    fn new(n: usize) -> Self {
        BallScratch {
            dist: vec![0; n],
            seen: vec![0; n],
            settled: vec![0; n],
            epoch: 0,
            order: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    /// Membership in the most recent ball.
    #[inline]
    fn contains(&self, v: VertexId) -> bool {
        self.settled[v] == self.epoch
    }

    /// Grows the ball of radius `r` around `center` in the subgraph induced
    /// by `member`, skipping vertices outside `alive`. Returns the ball in
    /// settle order.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        g: &Graph,
        inadj: &Adjacency,
        center: VertexId,
        r: Weight,
        dir: Direction,
        member: impl Fn(VertexId) -> bool,
        alive: Option<&[bool]>,
        budget: &mut StepBudget,
    ) -> Result<&[VertexId]> {
        self.epoch += 1;
        let epoch = self.epoch;
        self.order.clear();
        self.heap.clear();
        self.dist[center] = 0;
        self.seen[center] = epoch;
        self.heap.push(Reverse((0, center)));
        budget.charge(1)?;
        while let Some(Reverse((d, x))) = self.heap.pop() {
            budget.charge(1)?;
            if self.settled[x] == epoch || d != self.dist[x] {
                continue;
            }
            self.settled[x] = epoch;
            self.order.push(x);
            let ids = match dir {
                Direction::Out => g.out_edges(x),
                Direction::In => inadj.of(x),
            };
            for &id in ids {
                let e = g.edge(id);
                let y = match dir {
                    Direction::Out => e.dst,
                    Direction::In => e.src,
                };
                if !member(y) {
                    continue;
                }
                budget.charge(1)?;
                if alive.is_some_and(|a| !a[y]) {
                    continue;
                }
                let nd = d.saturating_add(e.weight);
                if nd > r {
                    continue;
                }
                if self.seen[y] != epoch || nd < self.dist[y] {
                    self.seen[y] = epoch;
                    self.dist[y] = nd;
                    self.heap.push(Reverse((nd, y)));
                    budget.charge(1)?;
                }
            }
        }
        Ok(&self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LddParams {
    pub diameter: Weight,
    /// Vertex count of the top-level problem.
    pub global_n: usize,
    pub c_sample: f64,
    pub p_numerator: u32,
}

impl LddParams {
    pub fn new(diameter: Weight, global_n: usize) -> Self {
        LddParams { diameter, global_n, c_sample: 4.0, p_numerator: 80 }
    }

    /// `k = ceil(c_sample * ln(global_n))`, at least 1.
    pub fn sample_count(&self) -> usize {
        let n = self.global_n.max(2) as f64;
        ((self.c_sample * n.ln()).ceil() as usize).max(1)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LddStats {
    pub boundary_edges: u64,
    pub premature_terminations: u64,
    pub max_depth: u32,
    pub calls: u64,
    /// Largest number of calls any single vertex took part in.
    pub max_participation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LddResult {
    /// Removed edge ids, sorted and without duplicates.
    pub removed: Vec<EdgeId>,
    pub stats: LddStats,
}

/// Removes an edge set after which every SCC has weak diameter at most
/// `params.diameter` in `g`.
pub fn low_diam_decomposition(g: &Graph, params: &LddParams, rng: &mut Rng) -> Result<LddResult> {
    low_diam_decomposition_budgeted(g, params, rng, &mut StepBudget::unlimited())
}

/// As [`low_diam_decomposition`], charging ball growth to `budget`.
pub fn low_diam_decomposition_budgeted(
    g: &Graph,
    params: &LddParams,
    rng: &mut Rng,
    budget: &mut StepBudget,
) -> Result<LddResult> {
    g.require_nonnegative()?;
    if params.diameter < 1 {
        return Err(Error::InvalidParameter(format!("diameter must be positive, got {}", params.diameter)));
    }
    if params.global_n < g.n() {
        return Err(Error::InvalidParameter("global_n smaller than the graph".into()));
    }
    let n = g.n();
    let w_max = g.max_weight().unwrap_or(0).max(1) as u128;
    let mut state = Ldd {
        params: *params,
        k: params.sample_count(),
        geo: GeometricParam::for_ball_radius(params.p_numerator, params.global_n, params.diameter)?,
        r_max: (params.global_n as u128).saturating_mul(w_max).saturating_add(1),
        rng,
        budget,
        removed: Vec::new(),
        stats: LddStats::default(),
        g,
        inadj: g.in_adjacency(),
        scratch: BallScratch::new(n),
        level: vec![1; n],
        alive: vec![true; n],
        light: vec![Mark::Heavy; n],
        in_count: vec![0; n],
        out_count: vec![0; n],
        mult: vec![0; n],
        participation: vec![0; n],
    };
    let all: Vec<VertexId> = (0..n).collect();
    state.call(&all, 1)?;
    let Ldd { mut removed, mut stats, participation, .. } = state;
    removed.sort_unstable();
    removed.dedup();
    stats.max_participation = participation.into_iter().max().unwrap_or(0);
    Ok(LddResult { removed, stats })
}

/// Recursion state. Every call works on the subgraph of `g` induced by the
/// vertices whose `level` equals the call's depth; per-vertex arrays are
/// shared, since a call only touches its own vertices.
struct Ldd<'a> {
    params: LddParams,
    k: usize,
    geo: GeometricParam,
    r_max: u128,
    rng: &'a mut Rng,
    budget: &'a mut StepBudget,
    removed: Vec<EdgeId>,
    stats: LddStats,
    g: &'a Graph,
    inadj: Adjacency,
    scratch: BallScratch,
    level: Vec<u32>,
    alive: Vec<bool>,
    light: Vec<Mark>,
    in_count: Vec<usize>,
    out_count: Vec<usize>,
    mult: Vec<usize>,
    participation: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    InLight,
    OutLight,
    Heavy,
}

impl Ldd<'_> {
    /// One invocation on the subgraph induced by `members` (ascending).
    fn call(&mut self, members: &[VertexId], depth: u32) -> Result<()> {
        let n = members.len();
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        for &v in members {
            self.participation[v] += 1;
        }
        // A single vertex or an edgeless graph has nothing to remove.
        let g = self.g;
        let level = &self.level;
        let has_edge = members.iter().any(|&v| g.out_edges(v).iter().any(|&id| level[g.edge(id).dst] == depth));
        if n <= 1 || !has_edge {
            return Ok(());
        }
        let d = self.params.diameter;
        let quarter = d / 4;

        // Phase 1: sample k centres (with repetition) and count, for every
        // vertex, how many samples lie in its in- and out-ball of radius D/4.
        // Each distinct centre is grown once and weighted by its multiplicity.
        let mut centres = Vec::new();
        for _ in 0..self.k {
            let s = members[self.rng.below(n as u64) as usize];
            if self.mult[s] == 0 {
                centres.push(s);
            }
            self.mult[s] += 1;
        }
        for &v in members {
            self.in_count[v] = 0;
            self.out_count[v] = 0;
        }
        let level = &self.level;
        let member = |y: VertexId| level[y] == depth;
        for &s in &centres {
            let weight = std::mem::take(&mut self.mult[s]);
            // u in out-ball(s) means s in in-ball(u)
            for &u in self.scratch.grow(g, &self.inadj, s, quarter, Direction::Out, member, None, self.budget)? {
                self.in_count[u] += weight;
            }
            for &u in self.scratch.grow(g, &self.inadj, s, quarter, Direction::In, member, None, self.budget)? {
                self.out_count[u] += weight;
            }
        }
        let k = self.k;
        let light = |c: usize| 10 * c <= 6 * k;
        for &v in members {
            self.light[v] = if light(self.in_count[v]) {
                Mark::InLight
            } else if light(self.out_count[v]) {
                Mark::OutLight
            } else {
                Mark::Heavy
            };
            self.alive[v] = true;
        }

        // Phase 2: carve balls around light vertices in ascending id order.
        let mut alive_count = n;
        for &v in members {
            if !self.alive[v] || self.light[v] == Mark::Heavy {
                continue;
            }
            let dir = if self.light[v] == Mark::InLight { Direction::In } else { Direction::Out };
            let r = sample_geometric(self.rng, self.geo, self.r_max);
            if r > quarter as u128 {
                return self.terminate_early(members, depth);
            }
            let level = &self.level;
            let member = |y: VertexId| level[y] == depth;
            let mut ball = self
                .scratch
                .grow(g, &self.inadj, v, r as Weight, dir, member, Some(&self.alive), self.budget)?
                .to_vec();
            if 10 * ball.len() > 7 * alive_count {
                return self.terminate_early(members, depth);
            }
            for &x in &ball {
                let ids = match dir {
                    Direction::In => self.inadj.of(x),
                    Direction::Out => g.out_edges(x),
                };
                for &id in ids {
                    let e = g.edge(id);
                    let y = if dir == Direction::In { e.src } else { e.dst };
                    if self.level[y] == depth && self.alive[y] && !self.scratch.contains(y) {
                        self.removed.push(id);
                        self.stats.boundary_edges += 1;
                    }
                }
            }

            if ball.len() == 1 {
                // The recursive call on a single vertex only records itself.
                self.stats.calls += 1;
                self.stats.max_depth = self.stats.max_depth.max(depth + 1);
                self.participation[ball[0]] += 1;
            } else {
                debug_assert!(10 * ball.len() <= 7 * n);
                ball.sort_unstable();
                for &x in &ball {
                    self.level[x] = depth + 1;
                }
                self.call(&ball, depth + 1)?;
                for &x in &ball {
                    self.level[x] = depth;
                }
            }

            for &x in &ball {
                self.alive[x] = false;
            }
            alive_count -= ball.len();
        }

        // Clean-up: the survivors must lie in both D/2 balls of one of them,
        // measured in this call's input graph.
        if let Some(&v) = members.iter().find(|&&v| self.alive[v]) {
            let half = d / 2;
            for &u in members {
                self.in_count[u] = 0;
            }
            let level = &self.level;
            let member = |y: VertexId| level[y] == depth;
            for dir in [Direction::In, Direction::Out] {
                for &u in self.scratch.grow(g, &self.inadj, v, half, dir, member, None, self.budget)? {
                    self.in_count[u] += 1;
                }
            }
            if members.iter().any(|&u| self.alive[u] && self.in_count[u] < 2) {
                return self.terminate_early(members, depth);
            }
        }
        Ok(())
    }

    /// Removes every edge still inside the current graph.
    fn terminate_early(&mut self, members: &[VertexId], depth: u32) -> Result<()> {
        self.stats.premature_terminations += 1;
        let g = self.g;
        for &x in members {
            if !self.alive[x] {
                continue;
            }
            for &id in g.out_edges(x) {
                let y = g.edge(id).dst;
                if self.level[y] == depth && self.alive[y] {
                    self.removed.push(id);
                }
            }
        }
        Ok(())
    }
}
