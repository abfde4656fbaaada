//! Orthonormal Meixner functions on `x = 0, 1, 2, ...`.
//!
//! Weight `ρ(x) = (1-μ)^γ (γ)_x μ^x / x!` (normalized to unit mass). The
//! polynomials are `2F1(-n, -x; γ; 1 - 1/μ)`, so `M_n(0) > 0`. The
//! orthonormal functions `M_n(x)` obey
//!
//! ```text
//! √(μ(n+1)(n+γ)) M_{n+1} = ((μ-1)x + n + (n+γ)μ) M_n - √(μn(n+γ-1)) M_{n-1}
//! ```
//!
//! and, in `x`, the difference equation
//!
//! ```text
//! √(μ(γ+x)(x+1)) M_n(x+1) + √(μx(x+γ-1)) M_n(x-1) - (μ(x+n+γ) - n + x) M_n(x) = 0.
//! ```
//!
//! The radial functions are `U_n(x) = √(μ(x+γ)) M_n(x)`.

use crate::error::{invalid, Result};
use crate::recurrence::forward;

/// Weight cut relative to the largest weight.
pub const WEIGHT_CUT: f64 = 1e-18;
/// Upper bound required of the certified tail mass.
pub const TAIL_BOUND: f64 = 1e-15;

const MAX_SUPPORT: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeixnerFamily {
    gamma: f64,
    mu: f64,
}

/// Where infinite sums over `x` are cut, and the bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    /// Sums run over `0..=x_cut`.
    pub x_cut: usize,
    /// Highest degree the certificate covers.
    pub n_max: usize,
    /// Upper bound on `Σ_{x > x_cut} M_n(x)²` for every `n <= n_max`.
    pub tail_bound: f64,
    /// `ρ(x_cut) / max ρ`.
    pub relative_weight: f64,
}

impl MeixnerFamily {
    pub fn new(gamma: f64, mu: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(invalid(format!("gamma must be positive, got {gamma}")));
        }
        if !(mu > 0.0 && mu < 1.0) {
            return Err(invalid(format!("mu must lie in (0,1), got {mu}")));
        }
        Ok(Self { gamma, mu })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `ln ρ(x)` for `x = 0..len`.
    pub fn log_weights(&self, len: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(len);
        let mut acc = self.gamma * (1.0 - self.mu).ln();
        for x in 0..len {
            out.push(acc);
            let xf = x as f64;
            acc += (self.mu * (xf + self.gamma) / (xf + 1.0)).ln();
        }
        out
    }

    /// `ln ρ₁(x)` with `ρ₁(x) = μ(x+γ)ρ(x)`, for `x = 0..len`.
    pub fn log_radial_weights(&self, len: usize) -> Vec<f64> {
        self.log_weights(len)
            .into_iter()
            .enumerate()
            .map(|(x, lw)| lw + (self.mu * (x as f64 + self.gamma)).ln())
            .collect()
    }

    fn column(&self, x: usize, log_w: f64, n_max: usize) -> Vec<f64> {
        let (g, mu) = (self.gamma, self.mu);
        let off: Vec<f64> = (0..n_max)
            .map(|k| {
                let k = k as f64;
                (mu * (k + 1.0) * (k + g)).sqrt()
            })
            .collect();
        let center: Vec<f64> = (0..=n_max)
            .map(|k| {
                let k = k as f64;
                (mu - 1.0) * x as f64 + k + (k + g) * mu
            })
            .collect();
        forward(&off, &center, 0.5 * log_w, 1.0, n_max)
    }

    /// `M_n(x)` for `n <= n_max` and `x < len`.
    pub fn table(&self, n_max: usize, len: usize) -> MeixnerTable {
        let lw = self.log_weights(len);
        let mut values = vec![vec![0.0; len]; n_max + 1];
        for (x, &w) in lw.iter().enumerate() {
            for (n, v) in self.column(x, w, n_max).into_iter().enumerate() {
                values[n][x] = v;
            }
        }
        MeixnerTable {
            family: *self,
            values,
        }
    }

    /// Orthonormal `M_n(x)`.
    pub fn normalized(&self, n: i64, x: i64) -> Result<f64> {
        if n < 0 || x < 0 {
            return Err(invalid(format!(
                "degree and point must be nonnegative, got n={n}, x={x}"
            )));
        }
        let (n, x) = (n as usize, x as usize);
        let lw = self.log_weights(x + 1)[x];
        Ok(self.column(x, lw, n)[n])
    }

    /// Radial function `U_n(x) = √(μ(x+γ)) M_n(x)`.
    pub fn radial(&self, n: i64, x: i64) -> Result<f64> {
        let m = self.normalized(n, x)?;
        Ok((self.mu * (x as f64 + self.gamma)).sqrt() * m)
    }

    /// Finds the cut for degrees up to `n_max`.
    ///
    /// The cut point lies past the weight maximum, has `ρ < WEIGHT_CUT·max ρ`,
    /// and is past the last sign change of every retained function. There
    /// `M_n(y+1)²/M_n(y)²` is bounded for all `y >= x_cut` by
    /// `r = max(μ(x+γ)/(x+1), μ) · (P_n(x+1)/P_n(x))²`, and the tail is at most
    /// `M_n(x_cut)² r/(1-r)`.
    pub fn truncation(&self, n_max: usize) -> Result<Truncation> {
        let mut len = 256usize;
        while len <= MAX_SUPPORT {
            let lw = self.log_weights(len + 1);
            let table = self.table(n_max, len + 1);
            let (mode, &w_max) = lw
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(b.1))
                .expect("nonempty");
            'scan: for x in mode + 1..len {
                let rel = (lw[x] - w_max).exp();
                if rel >= WEIGHT_CUT {
                    continue;
                }
                let xf = x as f64;
                let w_ratio = self.mu * (xf + self.gamma) / (xf + 1.0);
                let w_sup = w_ratio.max(self.mu);
                let mut bound: f64 = 0.0;
                for row in &table.values {
                    let (here, next) = (row[x], row[x + 1]);
                    if here == 0.0 || here.signum() != next.signum() || next.abs() >= here.abs() {
                        continue 'scan;
                    }
                    let poly_ratio_sq = (next / here).powi(2) / w_ratio;
                    let r = w_sup * poly_ratio_sq;
                    if r >= 1.0 {
                        continue 'scan;
                    }
                    bound = bound.max(here * here * r / (1.0 - r));
                }
                if bound < TAIL_BOUND {
                    return Ok(Truncation {
                        x_cut: x,
                        n_max,
                        tail_bound: bound,
                        relative_weight: rel,
                    });
                }
            }
            len *= 2;
        }
        Err(invalid(format!(
            "no certified truncation within {MAX_SUPPORT} points for gamma={}, mu={}",
            self.gamma, self.mu
        )))
    }
}

/// `M_n(x)` sampled on `x = 0..len`, `values[n][x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeixnerTable {
    pub family: MeixnerFamily,
    pub values: Vec<Vec<f64>>,
}

impl MeixnerTable {
    pub fn get(&self, n: usize, x: usize) -> f64 {
        self.values[n][x]
    }

    pub fn len(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Residual of the difference equation in `x` at `(n, x)`; needs `x + 1`
    /// inside the table. At `x = 0` the `M_n(x-1)` coefficient vanishes.
    pub fn difference_residual(&self, n: usize, x: usize) -> Result<f64> {
        if n > self.n_max() || x + 1 >= self.len() {
            return Err(invalid(format!("(n, x) = ({n}, {x}) outside the table")));
        }
        let (g, mu) = (self.family.gamma, self.family.mu);
        let (xf, nf) = (x as f64, n as f64);
        let row = &self.values[n];
        let below = if x > 0 {
            (mu * xf * (xf + g - 1.0)).sqrt() * row[x - 1]
        } else {
            0.0
        };
        Ok((mu * (g + xf) * (xf + 1.0)).sqrt() * row[x + 1] + below
            - (mu * (xf + nf + g) - nf + xf) * row[x])
    }

    /// `max |Σ_{x<=x_cut} M_n M_m - δ_nm|`.
    pub fn gram_residual(&self, x_cut: usize) -> f64 {
        let rows: Vec<Vec<f64>> = self.values.iter().map(|r| r[..=x_cut].to_vec()).collect();
        crate::poly::kravchuk::gram_residual(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 2F1(-n, -x; γ; 1 - 1/μ) by its terminating sum.
    fn hypergeometric(n: usize, x: usize, g: f64, mu: f64) -> f64 {
        let z = 1.0 - 1.0 / mu;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..n.min(x) {
            let kf = k as f64;
            term *= (kf - n as f64) * (kf - x as f64) / ((g + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        sum
    }

    fn pochhammer(a: f64, k: usize) -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
    }

    #[test]
    fn parameter_validation() {
        assert!(MeixnerFamily::new(0.0, 0.5).is_err());
        assert!(MeixnerFamily::new(1.0, 1.0).is_err());
        assert!(MeixnerFamily::new(1.0, 0.0).is_err());
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        assert!(f.normalized(-1, 0).is_err());
        assert!(f.radial(0, -2).is_err());
    }

    #[test]
    fn degree_zero_is_root_weight() {
        let f = MeixnerFamily::new(1.7, 0.4).unwrap();
        let lw = f.log_weights(30);
        for x in 0..30 {
            let m0 = f.normalized(0, x as i64).unwrap();
            assert!(m0 > 0.0);
            assert!((m0 - (0.5 * lw[x]).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn matches_hypergeometric_sum() {
        let (g, mu) = (2.5, 0.45);
        let f = MeixnerFamily::new(g, mu).unwrap();
        let t = f.table(6, 25);
        let lw = f.log_weights(25);
        for n in 0..=6 {
            // norm² of the 2F1 polynomial under the unit-mass weight
            let h = mu.powi(-(n as i32)) * (1..=n).product::<usize>() as f64 / pochhammer(g, n);
            for x in 0..25 {
                let oracle = (0.5 * lw[x]).exp() * hypergeometric(n, x, g, mu) / h.sqrt();
                assert!((t.get(n, x) - oracle).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn gram_identity_with_certified_cut() {
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        let cut = f.truncation(8).unwrap();
        assert!(cut.tail_bound < TAIL_BOUND);
        assert!(cut.relative_weight < WEIGHT_CUT);
        let t = f.table(8, cut.x_cut + 2);
        assert!(t.gram_residual(cut.x_cut) < 1e-10);
    }

    #[test]
    fn weight_ratio_tends_to_mu() {
        let f = MeixnerFamily::new(3.0, 0.6).unwrap();
        let lw = f.log_weights(5001);
        assert!(((lw[5000] - lw[4999]).exp() - 0.6).abs() < 1e-3);
    }

    #[test]
    fn difference_equation_spot() {
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        let t = f.table(3, 20);
        assert!(t.difference_residual(3, 7).unwrap().abs() < 1e-12);
        assert!(t.difference_residual(2, 0).unwrap().abs() < 1e-12);
        assert!(t.difference_residual(4, 0).is_err());
        assert!(t.difference_residual(0, 19).is_err());
    }

    #[test]
    fn radial_ratio_independent_of_degree() {
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        for x in 0..10i64 {
            for n in 0..5 {
                let m = f.normalized(n, x).unwrap();
                let u = f.radial(n, x).unwrap();
                if m == 0.0 {
                    assert_eq!(u, 0.0);
                    continue;
                }
                assert!(
                    (u / m - (0.5 * (x as f64 + 1.0)).sqrt()).abs() < 1e-14,
                    "{n} {x} {u} {m}"
                );
            }
        }
    }

    #[test]
    fn radial_at_origin() {
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        // U_n(0) = √(μγρ(0)) · 2F1(...)(0) / √h_n with 2F1 = 1 at x = 0.
        for n in 0..5usize {
            let h =
                0.5f64.powi(-(n as i32)) * (1..=n).product::<usize>() as f64 / pochhammer(1.0, n);
            let expect = (0.5f64 * 1.0 * 0.5).sqrt() / h.sqrt();
            assert!((f.radial(n as i64, 0).unwrap() - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn radial_tail_decays_geometrically() {
        let f = MeixnerFamily::new(1.0, 0.5).unwrap();
        let a = f.radial(2, 100).unwrap().abs();
        let b = f.radial(2, 140).unwrap().abs();
        assert!(a < 1e-10 && b < a * 1e-5, "{a} {b}");
        // |U(x+1)/U(x)| -> √μ
        let r = f.radial(2, 401).unwrap() / f.radial(2, 400).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 5e-3, "{r}");
    }
}
