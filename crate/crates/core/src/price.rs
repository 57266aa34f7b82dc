//! Price functions (vertex potentials) and Johnson reweighting.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId, Weight};

/// Integer potential `phi` over the vertices of a graph. Reweighting by `phi`
/// maps `w(u, v)` to `w(u, v) + phi(u) - phi(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PriceFunction {
    values: Vec<Weight>,
}

impl PriceFunction {
    pub fn zeros(n: usize) -> Self {
        PriceFunction { values: vec![0; n] }
    }

    pub fn from_vec(values: Vec<Weight>) -> Self {
        PriceFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Weight {
        self.values[v]
    }

    pub fn values(&self) -> &[Weight] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<Weight> {
        self.values
    }

    /// Pointwise sum; `(G_phi)_psi = G_{phi + psi}`.
    pub fn compose(&self, other: &PriceFunction) -> Result<PriceFunction> {
        check_len(self.len(), other.len())?;
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(PriceFunction::from_vec)
    }

    pub fn scaled(&self, c: Weight) -> Result<PriceFunction> {
        self.values
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(PriceFunction::from_vec)
    }

    /// This function extended by one more vertex (e.g. a dummy source).
    pub fn extended(&self, value: Weight) -> PriceFunction {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.extend_from_slice(&self.values);
        values.push(value);
        PriceFunction { values }
    }

    /// The first `n` entries.
    pub fn truncated(&self, n: usize) -> PriceFunction {
        PriceFunction { values: self.values[..n].to_vec() }
    }

    #[inline]
    pub fn reduced_weight(&self, e: &Edge) -> Option<Weight> {
        e.weight.checked_add(self.values[e.src])?.checked_sub(self.values[e.dst])
    }

    /// Smallest reduced weight over all edges of `g`, if any edge exists.
    pub fn min_reduced_weight(&self, g: &Graph) -> Result<Option<Weight>> {
        check_len(g.n(), self.len())?;
        let mut best: Option<Weight> = None;
        for e in g.edges() {
            let w = self.reduced_weight(e).ok_or(Error::Overflow)?;
            best = Some(best.map_or(w, |b| b.min(w)));
        }
        Ok(best)
    }

    /// True when every reduced weight is at least `floor`.
    pub fn is_feasible_above(&self, g: &Graph, floor: Weight) -> bool {
        matches!(self.min_reduced_weight(g), Ok(m) if m.map_or(true, |m| m >= floor))
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// `G_phi`: same topology and edge ids, reduced weights.
pub fn apply_price(g: &Graph, phi: &PriceFunction) -> Result<Graph> {
    check_len(g.n(), phi.len())?;
    g.try_map_weights(|e| phi.reduced_weight(e))
}
