//! Discrete radial problem built on the Meixner functions.
//!
//! `U_n(x) = √(μ(x+γ)) M_n(x)` satisfies the self-adjoint difference equation
//!
//! ```text
//! √(μ(x+1)/(x+γ+1)) U_n(x+1) + √(μx/(x+γ)) U_n(x-1) - (μ(x+γ)+x)/(x+γ) U_n(x)
//!     = (μ-1) n U_n(x)/(x+γ)
//! ```
//!
//! so the `U_n` are orthogonal under the weight `1/(x+γ)`, with
//! `Σ U_n²/(x+γ) = μ`. The ladder maps are
//!
//! ```text
//! L⁺U_n = μ(x+n+γ) U_n(x) - √(μx(x+γ)) U_n(x-1)                       = √(μ(n+1)(n+γ)) U_{n+1}
//! L⁻U_n = μ(x+n+γ) U_n(x) - √μ (x+γ) √((x+1)/(x+γ+1)) U_n(x+1)        = √(μn(n+γ-1)) U_{n-1}
//! ```

use std::ops::Range;

use crate::error::{invalid, Result};
use crate::oscillator::Measured;
use crate::poly::{MeixnerFamily, Truncation};
use crate::recurrence::ln_factorials;

#[derive(Debug, Clone, PartialEq)]
pub struct HydrogenModel {
    family: MeixnerFamily,
    n_max: usize,
    truncation: Truncation,
    // u[n][x] for n <= n_max + 1 and x <= x_cut + 1.
    u: Vec<Vec<f64>>,
}

/// Comparison of a ladder image with the neighbouring level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderFit {
    /// Cosine similarity between the image and the target level.
    pub cosine: f64,
    /// Least-squares `c` in `image ≈ c · target`.
    pub prefactor: f64,
    /// The closed-form prefactor.
    pub expected: f64,
    /// `max |image - c·target|`.
    pub residual: f64,
}

/// One row of [`laguerre_limit_probe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub mu: f64,
    pub sup_error: f64,
}

impl HydrogenModel {
    /// Tabulates `U_n` for `n <= n_max + 1` on a certified support.
    pub fn new(gamma: f64, mu: f64, n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(invalid("n_max must be at least 1"));
        }
        let family = MeixnerFamily::new(gamma, mu)?;
        let truncation = family.truncation(n_max + 1)?;
        let len = truncation.x_cut + 2;
        let table = family.table(n_max + 1, len);
        let u = table
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(x, m)| (mu * (x as f64 + gamma)).sqrt() * m)
                    .collect()
            })
            .collect();
        Ok(Self {
            family,
            n_max,
            truncation,
            u,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.family.gamma()
    }

    pub fn mu(&self) -> f64 {
        self.family.mu()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn x_cut(&self) -> usize {
        self.truncation.x_cut
    }

    /// `U_n(x)` for `x <= x_cut + 1`.
    pub fn radial(&self, n: usize, x: usize) -> Result<f64> {
        self.u
            .get(n)
            .and_then(|row| row.get(x))
            .copied()
            .ok_or_else(|| invalid(format!("(n, x) = ({n}, {x}) outside the table")))
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(invalid(format!("level {n} exceeds n_max = {}", self.n_max)));
        }
        Ok(())
    }

    fn check_range(&self, xs: &Range<usize>) -> Result<()> {
        if xs.end > self.x_cut() + 1 {
            return Err(invalid(format!(
                "range end {} exceeds x_cut + 1 = {}",
                xs.end,
                self.x_cut() + 1
            )));
        }
        Ok(())
    }

    fn sl_lhs(&self, n: usize, x: usize) -> f64 {
        let (g, mu) = (self.gamma(), self.mu());
        let xf = x as f64;
        let row = &self.u[n];
        let below = if x > 0 {
            (mu * xf / (xf + g)).sqrt() * row[x - 1]
        } else {
            0.0
        };
        (mu * (xf + 1.0) / (xf + g + 1.0)).sqrt() * row[x + 1] + below
            - (mu * (xf + g) + xf) / (xf + g) * row[x]
    }

    /// Left minus right side of the difference equation at `(n, x)`.
    pub fn sl_difference_residual(&self, n: usize, x: usize) -> Result<f64> {
        self.check_level(n)?;
        if x > self.x_cut() {
            return Err(invalid(format!("x = {x} exceeds x_cut = {}", self.x_cut())));
        }
        let rhs = (self.mu() - 1.0) * n as f64 * self.u[n][x] / (x as f64 + self.gamma());
        Ok(self.sl_lhs(n, x) - rhs)
    }

    /// `Σ_{x <= x_cut} U_m(x) U_n(x) / (x+γ)`.
    pub fn sl_orthogonality(&self, m: usize, n: usize) -> Result<f64> {
        self.check_level(m)?;
        self.check_level(n)?;
        let g = self.gamma();
        Ok((0..=self.x_cut())
            .map(|x| self.u[m][x] * self.u[n][x] / (x as f64 + g))
            .sum())
    }

    /// Largest off-diagonal entry of the weighted Gram matrix over `n <= n_max`.
    pub fn sl_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for m in 0..=self.n_max {
            for n in 0..m {
                worst = worst.max(self.sl_orthogonality(m, n).map_or(f64::INFINITY, f64::abs));
            }
        }
        worst
    }

    /// Rayleigh quotient of the difference operator at level `n`, which
    /// should read `(μ-1)n`.
    pub fn sl_eigenvalue(&self, n: usize) -> Result<Measured> {
        self.check_level(n)?;
        let g = self.gamma();
        let xs = 0..=self.x_cut();
        let lhs: Vec<f64> = xs.clone().map(|x| self.sl_lhs(n, x)).collect();
        let num: f64 = xs.clone().map(|x| lhs[x] * self.u[n][x]).sum();
        let den: f64 = xs
            .clone()
            .map(|x| self.u[n][x].powi(2) / (x as f64 + g))
            .sum();
        let value = num / den;
        let residual = xs
            .map(|x| (lhs[x] - value * self.u[n][x] / (x as f64 + g)).abs())
            .fold(0.0, f64::max);
        Ok(Measured { value, residual })
    }

    /// `L⁺U_n` over `xs`.
    pub fn ladder_up(&self, n: usize, xs: Range<usize>) -> Result<Vec<f64>> {
        self.check_level(n)?;
        self.check_range(&xs)?;
        let (g, mu) = (self.gamma(), self.mu());
        let nf = n as f64;
        let row = &self.u[n];
        Ok(xs
            .map(|x| {
                let xf = x as f64;
                let below = if x > 0 {
                    (mu * xf * (xf + g)).sqrt() * row[x - 1]
                } else {
                    0.0
                };
                mu * (xf + nf + g) * row[x] - below
            })
            .collect())
    }

    /// `L⁻U_n` over `xs`; identically zero for `n = 0`.
    pub fn ladder_down(&self, n: usize, xs: Range<usize>) -> Result<Vec<f64>> {
        self.ladder_down_with(n, xs, |mu| mu.sqrt())
    }

    /// The lowering map with `μ` in place of `√μ` on the `U_n(x+1)` term.
    /// Its image is not proportional to `U_{n-1}`; kept for comparison.
    pub fn ladder_down_printed(&self, n: usize, xs: Range<usize>) -> Result<Vec<f64>> {
        self.ladder_down_with(n, xs, |mu| mu)
    }

    fn ladder_down_with(
        &self,
        n: usize,
        xs: Range<usize>,
        coef: impl Fn(f64) -> f64,
    ) -> Result<Vec<f64>> {
        self.check_level(n)?;
        self.check_range(&xs)?;
        if xs.end > self.x_cut() {
            return Err(invalid(format!(
                "range end {} exceeds x_cut = {}",
                xs.end,
                self.x_cut()
            )));
        }
        if n == 0 {
            return Ok(vec![0.0; xs.len()]);
        }
        let (g, mu) = (self.gamma(), self.mu());
        let c = coef(mu);
        let nf = n as f64;
        let row = &self.u[n];
        Ok(xs
            .map(|x| {
                let xf = x as f64;
                mu * (xf + g + nf) * row[x]
                    - c * (xf + g) * ((xf + 1.0) / (xf + g + 1.0)).sqrt() * row[x + 1]
            })
            .collect())
    }

    /// `L⁺U_n` against `U_{n+1}` over the whole support.
    pub fn ladder_up_fit(&self, n: usize) -> Result<LadderFit> {
        let image = self.ladder_up(n, 0..self.x_cut() + 1)?;
        let expected = (self.mu() * (n as f64 + 1.0) * (n as f64 + self.gamma())).sqrt();
        Ok(fit(&image, &self.u[n + 1][..=self.x_cut()], expected))
    }

    /// `L⁻U_n` against `U_{n-1}` over the whole support; needs `n >= 1`.
    pub fn ladder_down_fit(&self, n: usize) -> Result<LadderFit> {
        self.down_fit(n, self.ladder_down(n, 0..self.x_cut())?)
    }

    /// As [`ladder_down_fit`](Self::ladder_down_fit) for
    /// [`ladder_down_printed`](Self::ladder_down_printed).
    pub fn ladder_down_printed_fit(&self, n: usize) -> Result<LadderFit> {
        self.down_fit(n, self.ladder_down_printed(n, 0..self.x_cut())?)
    }

    fn down_fit(&self, n: usize, image: Vec<f64>) -> Result<LadderFit> {
        if n == 0 {
            return Err(invalid("lowering fit needs n >= 1"));
        }
        let nf = n as f64;
        let expected = (self.mu() * nf * (nf + self.gamma() - 1.0)).sqrt();
        Ok(fit(&image, &self.u[n - 1][..self.x_cut()], expected))
    }
}

/// `√(μ(γ+n)(n-1))`, the raising prefactor with `n-1` in place of `n+1`.
/// `None` where the radicand is negative.
pub fn printed_raising_prefactor(gamma: f64, mu: f64, n: usize) -> Option<f64> {
    let r = mu * (gamma + n as f64) * (n as f64 - 1.0);
    (r >= 0.0).then(|| r.sqrt())
}

fn fit(image: &[f64], target: &[f64], expected: f64) -> LadderFit {
    let dot: f64 = image.iter().zip(target).map(|(a, b)| a * b).sum();
    let ii: f64 = image.iter().map(|a| a * a).sum();
    let tt: f64 = target.iter().map(|b| b * b).sum();
    let prefactor = dot / tt;
    let cosine = if ii > 0.0 {
        dot / (ii.sqrt() * tt.sqrt())
    } else {
        0.0
    };
    let residual = image
        .iter()
        .zip(target)
        .map(|(a, b)| (a - prefactor * b).abs())
        .fold(0.0, f64::max);
    LadderFit {
        cosine,
        prefactor,
        expected,
        residual,
    }
}

/// Normalized generalized Laguerre function
/// `√(s^α e^{-s} k!/Γ(k+α+1)) L_k^α(s)` for integer `α`.
pub fn laguerre_function(k: usize, alpha: usize, s: f64) -> f64 {
    let a = alpha as f64;
    let mut prev = 1.0;
    let mut cur = if k == 0 { 1.0 } else { 1.0 + a - s };
    for i in 1..k {
        let f = i as f64;
        let next = ((2.0 * f + 1.0 + a - s) * cur - (f + a) * prev) / (f + 1.0);
        prev = cur;
        cur = next;
    }
    let lf = ln_factorials(k + alpha);
    let log_norm = 0.5 * (lf[k] - lf[k + alpha]);
    let envelope = if s > 0.0 {
        (0.5 * (a * s.ln() - s) + log_norm).exp()
    } else if alpha == 0 {
        log_norm.exp()
    } else {
        0.0
    };
    envelope * cur
}

/// Sup-norm distance between `U_k(x)/√μ` and `√s ψ(s)`, `s = (1-μ)x`, where
/// `ψ` is the normalized Laguerre function of degree `k = n - l - 1` and
/// order `2l+1`. Every model must have `γ = 2l+2`.
pub fn laguerre_limit_probe(models: &[HydrogenModel], n: usize, l: usize) -> Result<Vec<LimitRow>> {
    if n < l + 1 {
        return Err(invalid(format!("need n > l, got n={n}, l={l}")));
    }
    if models.is_empty() {
        return Err(invalid("empty model sequence"));
    }
    let k = n - l - 1;
    let gamma = (2 * l + 2) as f64;
    models
        .iter()
        .map(|m| {
            if m.gamma() != gamma {
                return Err(invalid(format!(
                    "model has gamma={}, expected {gamma}",
                    m.gamma()
                )));
            }
            m.check_level(k)?;
            let mu = m.mu();
            let sup_error = (0..=m.x_cut())
                .map(|x| {
                    let s = (1.0 - mu) * x as f64;
                    let cont = s.sqrt() * laguerre_function(k, 2 * l + 1, s);
                    (m.u[k][x] / mu.sqrt() - cont).abs()
                })
                .fold(0.0, f64::max);
            Ok(LimitRow { mu, sup_error })
        })
        .collect()
}
