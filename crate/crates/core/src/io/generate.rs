//! Seeded random instance families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId, Weight};
use crate::rng::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorMode {
    /// Uniform endpoints and weights; may contain negative cycles.
    RawRandom,
    /// `w(u,v) = w'(u,v) + π(u) - π(v)` with `w' >= 0`: no negative cycle.
    HiddenPotential,
    /// A random simple cycle of total weight `-1` plus raw-random edges.
    PlantedCycle,
}

impl GeneratorMode {
    pub const ALL: [GeneratorMode; 3] = [GeneratorMode::RawRandom, GeneratorMode::HiddenPotential, GeneratorMode::PlantedCycle];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorMode::RawRandom => "raw-random",
            GeneratorMode::HiddenPotential => "hidden-potential",
            GeneratorMode::PlantedCycle => "planted-cycle",
        }
    }
}

impl fmt::Display for GeneratorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator mode `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub n: usize,
    pub m: usize,
    /// Inclusive weight range `[lo, hi]`.
    pub weight_range: (Weight, Weight),
    pub mode: GeneratorMode,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(n: usize, m: usize, lo: Weight, hi: Weight, mode: GeneratorMode, seed: u64) -> Self {
        GeneratorSpec { n, m, weight_range: (lo, hi), mode, seed }
    }
}

/// Rerolls allowed per hidden-potential edge before the spec is declared
/// infeasible.
const MAX_REROLLS: usize = 64;

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let (lo, hi) = spec.weight_range;
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty weight range [{lo}, {hi}]")));
    }
    if spec.n == 0 && spec.m > 0 {
        return Err(Error::InvalidParameter("edges requested on an empty vertex set".into()));
    }
    let mut rng = Rng::new(spec.seed);
    let edges = match spec.mode {
        GeneratorMode::RawRandom => raw_edges(&mut rng, spec.n, spec.m, lo, hi),
        GeneratorMode::HiddenPotential => hidden_potential_edges(&mut rng, spec.n, spec.m, lo, hi)?,
        GeneratorMode::PlantedCycle => planted_cycle_edges(&mut rng, spec.n, spec.m, lo, hi)?,
    };
    Graph::new(spec.n, edges)
}

fn endpoint(rng: &mut Rng, n: usize) -> VertexId {
    rng.below(n as u64) as VertexId
}

fn raw_edges(rng: &mut Rng, n: usize, m: usize, lo: Weight, hi: Weight) -> Vec<Edge> {
    (0..m)
        .map(|_| {
            let u = endpoint(rng, n);
            let v = endpoint(rng, n);
            Edge::new(u, v, rng.range_inclusive(lo, hi))
        })
        .collect()
}

/// Potentials are drawn from `[0, max(0, -lo)]`; each edge's `w'` is drawn
/// from the part of `[0, hi - lo]` that keeps `w` inside `[lo, hi]`, and the
/// endpoints are redrawn when that part is empty.
fn hidden_potential_edges(rng: &mut Rng, n: usize, m: usize, lo: Weight, hi: Weight) -> Result<Vec<Edge>> {
    let span = (-lo).max(0);
    let pi: Vec<Weight> = (0..n).map(|_| rng.range_inclusive(0, span)).collect();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let mut placed = false;
        for _ in 0..MAX_REROLLS {
            let u = endpoint(rng, n);
            let v = endpoint(rng, n);
            let diff = pi[u] - pi[v];
            let min_raw = (lo - diff).max(0);
            let max_raw = (hi - diff).min(hi - lo);
            if min_raw <= max_raw {
                edges.push(Edge::new(u, v, rng.range_inclusive(min_raw, max_raw) + diff));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::InvalidParameter(format!("no hidden-potential edge fits in [{lo}, {hi}]")));
        }
    }
    Ok(edges)
}

fn planted_cycle_edges(rng: &mut Rng, n: usize, m: usize, lo: Weight, hi: Weight) -> Result<Vec<Edge>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("a planted cycle needs a vertex and an edge".into()));
    }
    let max_len = n.min(m);
    // Lengths k with k*lo <= -1 <= k*hi.
    let feasible: Vec<usize> = (1..=max_len)
        .filter(|&k| (k as Weight) * lo <= -1 && -1 <= (k as Weight) * hi)
        .collect();
    if feasible.is_empty() {
        return Err(Error::InvalidParameter(format!("no cycle of weight -1 fits in [{lo}, {hi}]")));
    }
    let k = feasible[rng.below(feasible.len() as u64) as usize];

    // k distinct vertices by partial Fisher-Yates.
    let mut perm: Vec<VertexId> = (0..n).collect();
    for i in 0..k {
        let j = i + rng.below((n - i) as u64) as usize;
        perm.swap(i, j);
    }

    // Start every weight at lo and hand out the remaining mass randomly.
    let mut weights = vec![lo; k];
    let mut rest = -1 - (k as Weight) * lo;
    for w in weights.iter_mut() {
        let add = rng.range_inclusive(0, (hi - lo).min(rest));
        *w += add;
        rest -= add;
    }
    for w in weights.iter_mut() {
        let add = (hi - *w).min(rest);
        *w += add;
        rest -= add;
    }
    debug_assert_eq!(rest, 0);

    let mut edges: Vec<Edge> = (0..k).map(|i| Edge::new(perm[i], perm[(i + 1) % k], weights[i])).collect();
    edges.extend(raw_edges(rng, n, m - k, lo, hi));
    // Hide the cycle among the other edges.
    for i in (1..edges.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        edges.swap(i, j);
    }
    Ok(edges)
}
