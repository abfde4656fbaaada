//! Orthonormal Kravchuk functions on `x = 0..=N`.
//!
//! With binomial weight `ρ(x) = C(N,x) p^x q^{N-x}` and the polynomials
//! `k_n(x) = Σ_k (-1)^{n-k} C(N-x, n-k) C(x, k) p^{n-k} q^k`, the functions
//! `φ_n(x) = √ρ(x) k_n(x) / d_n` with `d_n² = C(N,n)(pq)^n` are
//! orthonormal. They obey
//!
//! ```text
//! a_n φ_{n+1} = (x - nq - (N-n)p) φ_n - a_{n-1} φ_{n-1},   a_n = √((n+1)(N-n)pq)
//! ```
//!
//! which is run upward from `φ_0 = √ρ` and downward from the closed form
//! `φ_N(x) = (-1)^{N-x} √(C(N,x) p^{N-x} q^x)`, meeting in the classically
//! allowed band of the column. Each direction is only used where it is the
//! growing solution.

use crate::error::{invalid, Result};
use crate::recurrence::{backward, forward, ln_factorials};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KravchukFamily {
    n: usize,
    p: f64,
}

impl KravchukFamily {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(invalid(format!("p must lie in (0,1), got {p}")));
        }
        Ok(Self { n, p })
    }

    /// Grid size parameter `N`; the support is `0..=N`.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        1.0 - self.p
    }

    /// `ln ρ(x)` for every `x` on the support.
    pub fn log_weights(&self) -> Vec<f64> {
        let lf = ln_factorials(self.n);
        let (lp, lq) = (self.p.ln(), self.q().ln());
        (0..=self.n)
            .map(|x| lf[self.n] - lf[x] - lf[self.n - x] + x as f64 * lp + (self.n - x) as f64 * lq)
            .collect()
    }

    /// `ln d_n²` for every degree.
    pub fn log_norms_sq(&self) -> Vec<f64> {
        let lf = ln_factorials(self.n);
        let lpq = (self.p * self.q()).ln();
        (0..=self.n)
            .map(|k| lf[self.n] - lf[k] - lf[self.n - k] + k as f64 * lpq)
            .collect()
    }

    fn coefficients(&self, x: usize) -> (Vec<f64>, Vec<f64>) {
        let (n, p, q) = (self.n as f64, self.p, self.q());
        let off = (0..self.n)
            .map(|k| {
                let k = k as f64;
                ((k + 1.0) * (n - k) * p * q).sqrt()
            })
            .collect();
        let center = (0..=self.n)
            .map(|k| {
                let k = k as f64;
                x as f64 - k * q - (n - k) * p
            })
            .collect();
        (off, center)
    }

    /// `φ_n(x)` for all `n` at fixed `x`.
    fn column(&self, x: usize, lf: &[f64]) -> Vec<f64> {
        let big_n = self.n;
        if big_n == 0 {
            return vec![1.0];
        }
        let (p, q) = (self.p, self.q());
        let (off, center) = self.coefficients(x);
        let log_binom = lf[big_n] - lf[x] - lf[big_n - x];

        // Split degree: middle of the band where |center| <= a_n + a_{n-1}.
        let band: Vec<usize> = (0..=big_n)
            .filter(|&k| {
                let up = if k < big_n { off[k] } else { 0.0 };
                let down = if k > 0 { off[k - 1] } else { 0.0 };
                center[k].abs() <= up + down
            })
            .collect();
        let split = match (band.first(), band.last()) {
            (Some(&lo), Some(&hi)) => (lo + hi) / 2,
            _ => (0..=big_n)
                .min_by(|&a, &b| center[a].abs().total_cmp(&center[b].abs()))
                .unwrap_or(0),
        };

        let log_first = 0.5 * (log_binom + x as f64 * p.ln() + (big_n - x) as f64 * q.ln());
        let mut col = forward(&off, &center, log_first, 1.0, split);
        if split < big_n {
            let log_last = 0.5 * (log_binom + (big_n - x) as f64 * p.ln() + x as f64 * q.ln());
            let sign = if (big_n - x).is_multiple_of(2) { 1.0 } else { -1.0 };
            let upper = backward(&off, &center, log_last, sign, big_n, split + 1);
            col.extend(upper);
        }
        col
    }

    /// Orthonormal `φ_n(x)`.
    pub fn normalized(&self, n: usize, x: usize) -> Result<f64> {
        if n > self.n || x > self.n {
            return Err(invalid(format!(
                "degree {n} and point {x} must not exceed N = {}",
                self.n
            )));
        }
        let lf = ln_factorials(self.n);
        Ok(self.column(x, &lf)[n])
    }

    /// All `φ_n(x)`, indexed `[n][x]`.
    pub fn table(&self) -> KravchukTable {
        let size = self.n + 1;
        let lf = ln_factorials(self.n);
        let mut values = vec![vec![0.0; size]; size];
        for x in 0..size {
            for (n, v) in self.column(x, &lf).into_iter().enumerate() {
                values[n][x] = v;
            }
        }
        KravchukTable {
            family: *self,
            values,
        }
    }
}

/// Precomputed orthonormal Kravchuk functions, `values[n][x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KravchukTable {
    pub family: KravchukFamily,
    pub values: Vec<Vec<f64>>,
}

impl KravchukTable {
    pub fn get(&self, n: usize, x: usize) -> f64 {
        self.values[n][x]
    }

    /// `max |Σ_x φ_n φ_m - δ_nm|`.
    pub fn gram_residual(&self) -> f64 {
        gram_residual(&self.values)
    }
}

pub(crate) fn gram_residual(rows: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate().skip(i) {
            let dot: f64 = a.iter().zip(b).map(|(u, v)| u * v).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    // k_n(x) by its defining finite sum, small N only.
    fn explicit_polynomial(n: usize, x: usize, big_n: usize, p: f64) -> f64 {
        let q = 1.0 - p;
        let binom = |a: usize, b: usize| -> f64 {
            if b > a {
                return 0.0;
            }
            (0..b).fold(1.0, |acc, i| acc * (a - i) as f64 / (i + 1) as f64)
        };
        (0..=n)
            .map(|k| {
                let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
                sign * binom(big_n - x, n - k)
                    * binom(x, k)
                    * p.powi((n - k) as i32)
                    * q.powi(k as i32)
            })
            .sum()
    }

    #[test]
    fn rejects_bad_p_and_range() {
        assert!(KravchukFamily::new(4, 0.0).is_err());
        assert!(KravchukFamily::new(4, 1.0).is_err());
        let f = KravchukFamily::new(4, 0.3).unwrap();
        assert!(f.normalized(5, 0).is_err());
        assert!(f.normalized(0, 5).is_err());
    }

    #[test]
    fn degree_zero_is_root_weight() {
        let f = KravchukFamily::new(7, 0.35).unwrap();
        let t = f.table();
        let w = f.log_weights();
        let mut sum = 0.0;
        for x in 0..=7 {
            assert!((t.get(0, x) - (0.5 * w[x]).exp()).abs() < 1e-15);
            sum += t.get(0, x).powi(2);
        }
        assert!((sum - 1.0).abs() < 1e-14);
    }

    #[test]
    fn matches_explicit_sum() {
        let (big_n, p) = (9, 0.27);
        let f = KravchukFamily::new(big_n, p).unwrap();
        let t = f.table();
        let w = f.log_weights();
        let d = f.log_norms_sq();
        for n in 0..=big_n {
            for x in 0..=big_n {
                let oracle = (0.5 * (w[x] - d[n])).exp() * explicit_polynomial(n, x, big_n, p);
                assert!((t.get(n, x) - oracle).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn gram_identity_small() {
        let t = KravchukFamily::new(10, 0.3).unwrap().table();
        assert!(t.gram_residual() < 1e-12);
    }

    #[test]
    fn gram_identity_large_without_overflow() {
        for p in [0.5, 0.3, 0.02] {
            let t = KravchukFamily::new(400, p).unwrap().table();
            assert!(t.values.iter().flatten().all(|v| v.is_finite()));
            assert!(t.gram_residual() < 1e-10, "p={p}: {}", t.gram_residual());
        }
    }

    #[test]
    fn single_value_agrees_with_table() {
        let f = KravchukFamily::new(12, 0.6).unwrap();
        let t = f.table();
        assert_eq!(f.normalized(5, 3).unwrap(), t.get(5, 3));
    }

    #[test]
    fn size_zero() {
        let t = KravchukFamily::new(0, 0.4).unwrap().table();
        assert_eq!(t.values, vec![vec![1.0]]);
    }
}
