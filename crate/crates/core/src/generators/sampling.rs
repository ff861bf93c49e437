//! Discrete power-law sampling, `P(k) = k^-alpha / zeta(alpha)` for `k >= 1`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::powerlaw::{hurwitz_zeta, zeta};

/// Upper end of the precomputed complementary CDF table.
const TABLE_LEN: usize = 4096;
/// Draws are capped here; far beyond any vertex count in use.
const MAX_DRAW: u64 = 1 << 40;

/// Inverse-CDF sampler for the discrete power law.
#[derive(Debug, Clone)]
pub struct PowerLawSampler {
    alpha: f64,
    zeta: f64,
    /// `ccdf[k] = P(X >= k)` for `1 <= k < TABLE_LEN`.
    ccdf: Vec<f64>,
}

impl PowerLawSampler {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::Domain(format!("alpha must exceed 1, got {alpha}")));
        }
        let z = zeta(alpha)?;
        let mut ccdf = vec![0.0; TABLE_LEN];
        let mut cumulative = 0.0;
        ccdf[0] = 1.0;
        for k in 1..TABLE_LEN {
            ccdf[k] = 1.0 - cumulative;
            cumulative += (k as f64).powf(-alpha) / z;
        }
        Ok(PowerLawSampler {
            alpha,
            zeta: z,
            ccdf,
        })
    }

    /// `P(X >= k)`.
    pub fn ccdf(&self, k: u64) -> f64 {
        if k <= 1 {
            1.0
        } else if (k as usize) < TABLE_LEN {
            self.ccdf[k as usize]
        } else {
            hurwitz_zeta(self.alpha, k as f64).expect("alpha checked") / self.zeta
        }
    }

    /// Smallest `k >= 1` with `P(X <= k) >= u`, for `u` in `[0, 1)`.
    pub fn inverse_cdf(&self, u: f64) -> u64 {
        // P(X <= k) >= u  <=>  P(X >= k + 1) <= 1 - u.
        let r = 1.0 - u;
        let table = &self.ccdf[2..];
        // First index j >= 2 in the table with ccdf(j) <= r.
        let pos = table.partition_point(|&c| c > r);
        if pos < table.len() {
            return (pos + 2 - 1) as u64;
        }
        // Exponential doubling, then bisection, on j = k + 1.
        let mut lo = TABLE_LEN as u64 - 1;
        let mut hi = lo * 2;
        while self.ccdf(hi) > r {
            if hi >= MAX_DRAW {
                return MAX_DRAW;
            }
            lo = hi;
            hi *= 2;
        }
        // Invariant: ccdf(lo) > r >= ccdf(hi).
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.ccdf(mid) > r {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi - 1
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        self.inverse_cdf(rng.gen::<f64>())
    }
}

/// `n` independent power-law draws, each capped at `n - 1`, from a
/// ChaCha8 stream seeded with `seed`.
pub fn sample_powerlaw_degrees(n: usize, alpha: f64, seed: u64) -> Result<DegreeSequence> {
    let sampler = PowerLawSampler::new(alpha)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = n.saturating_sub(1) as u64;
    Ok(DegreeSequence(
        (0..n)
            .map(|_| sampler.sample(&mut rng).min(cap) as usize)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_boundary_maps_to_one() {
        for alpha in [1.5, 2.2, 3.0] {
            let s = PowerLawSampler::new(alpha).unwrap();
            let p1 = 1.0 / zeta(alpha).unwrap();
            assert_eq!(s.inverse_cdf(0.0), 1);
            assert_eq!(s.inverse_cdf(p1), 1);
            assert_eq!(s.inverse_cdf(p1 + 1e-9), 2);
        }
    }

    #[test]
    fn inverse_cdf_matches_linear_scan() {
        let s = PowerLawSampler::new(2.3).unwrap();
        let z = zeta(2.3).unwrap();
        for &u in &[0.1, 0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999, 0.999999] {
            // Oracle: accumulate the pmf until it reaches u.
            let mut cdf = 0.0;
            let mut k = 0u64;
            while cdf < u {
                k += 1;
                cdf += (k as f64).powf(-2.3) / z;
            }
            let got = s.inverse_cdf(u);
            // Near-ties between u and a CDF step can flip by one.
            assert!(got.abs_diff(k) <= 1, "u = {u}: got {got}, scan {k}");
        }
    }

    #[test]
    fn tail_uses_hurwitz_continuously() {
        let s = PowerLawSampler::new(2.5).unwrap();
        let inside = s.ccdf(TABLE_LEN as u64 - 1);
        let outside = s.ccdf(TABLE_LEN as u64);
        let step = (TABLE_LEN as f64 - 1.0).powf(-2.5) / zeta(2.5).unwrap();
        assert!(((inside - outside) - step).abs() < 1e-12);
        // Deep tail draw lands far beyond the table.
        let u = 1.0 - 1e-12;
        let r = 1.0 - u;
        let k = s.inverse_cdf(u);
        assert!(k > TABLE_LEN as u64);
        assert!(s.ccdf(k + 1) <= r && s.ccdf(k) > r);
    }

    #[test]
    fn large_alpha_is_almost_all_ones() {
        // P(X >= 2) at alpha = 20 is about 9.5e-7.
        let d = sample_powerlaw_degrees(100_000, 20.0, 7).unwrap();
        let ones = d.0.iter().filter(|&&k| k == 1).count();
        assert!(ones as f64 >= 0.99999 * 100_000.0 - 1.0);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = sample_powerlaw_degrees(1000, 2.4, 11).unwrap();
        let b = sample_powerlaw_degrees(1000, 2.4, 11).unwrap();
        let c = sample_powerlaw_degrees(1000, 2.4, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.0.iter().all(|&k| (1..1000).contains(&k)));
    }

    #[test]
    fn domain() {
        assert!(sample_powerlaw_degrees(10, 1.0, 0).is_err());
    }
}
