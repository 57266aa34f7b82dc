//! Seeded splitmix64 generator and geometric sampling.
//!
//! The stream depends only on the seed and the call sequence, so results are
//! reproducible across platforms.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`.
    pub fn next_unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i128, hi: i128) -> i128 {
        assert!(lo <= hi, "empty range");
        let span = (hi - lo) as u128 + 1;
        if span > u64::MAX as u128 {
            let wide = ((self.next_u64() as u128) << 64) | self.next_u64() as u128;
            return lo + (wide % span) as i128;
        }
        lo + self.below(span as u64) as i128
    }

    /// A child generator seeded from this stream.
    pub fn fork(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }
}

/// Success probability `min(1, num / den)` of a geometric distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometricParam {
    num: u128,
    den: u128,
}

/// Fixed-point scale for the `log2(n)` factor.
const LOG_SCALE: f64 = (1u64 << 32) as f64;

impl GeometricParam {
    pub fn new(num: u128, den: u128) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameter(format!("geometric parameter {num}/{den}")));
        }
        Ok(GeometricParam { num: num.min(den), den })
    }

    /// `p = min(1, numerator * log2(n) / diameter)`.
    pub fn for_ball_radius(numerator: u32, global_n: usize, diameter: i128) -> Result<Self> {
        if diameter < 1 {
            return Err(Error::InvalidParameter(format!("diameter must be positive, got {diameter}")));
        }
        let log = (global_n.max(2) as f64).log2();
        let num = (numerator as f64 * log * LOG_SCALE).round() as u128;
        let den = (diameter as u128).saturating_mul(LOG_SCALE as u128);
        Self::new(num.max(1), den)
    }

    pub fn one() -> Self {
        GeometricParam { num: 1, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn p(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// `min(X, r_max)` for `X ~ Geo(p)` on `{1, 2, ...}`, by inverse transform.
pub fn sample_geometric(rng: &mut Rng, p: GeometricParam, r_max: u128) -> u128 {
    let r_max = r_max.max(1);
    if p.is_one() {
        // still consume one draw so the stream position does not depend on p
        rng.next_u64();
        return 1;
    }
    let u = rng.next_unit(); // 1 - U with U uniform in [0, 1)
    let x = (u.ln() / (-p.p()).ln_1p()).floor();
    if !x.is_finite() || x >= r_max as f64 {
        return r_max;
    }
    (x as u128 + 1).min(r_max)
}
