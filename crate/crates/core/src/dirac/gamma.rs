use nalgebra::Matrix4;
use num_complex::Complex64;

use super::METRIC;

/// Gamma matrices in the Dirac representation.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet {
    pub gamma: [Matrix4<Complex64>; 4],
}

impl Default for GammaSet {
    fn default() -> Self {
        Self::dirac()
    }
}

impl GammaSet {
    /// `γ⁰ = diag(1, 1, -1, -1)`, `γ^i = [[0, σ_i], [-σ_i, 0]]`.
    pub fn dirac() -> Self {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let z = c(0.0, 0.0);
        let sigma = [
            [[z, c(1.0, 0.0)], [c(1.0, 0.0), z]],
            [[z, c(0.0, -1.0)], [c(0.0, 1.0), z]],
            [[c(1.0, 0.0), z], [z, c(-1.0, 0.0)]],
        ];
        let mut gamma = [Matrix4::zeros(); 4];
        for d in 0..4 {
            gamma[0][(d, d)] = c(if d < 2 { 1.0 } else { -1.0 }, 0.0);
        }
        for (i, s) in sigma.iter().enumerate() {
            for r in 0..2 {
                for col in 0..2 {
                    gamma[i + 1][(r, col + 2)] = s[r][col];
                    gamma[i + 1][(r + 2, col)] = -s[r][col];
                }
            }
        }
        Self { gamma }
    }

    /// `max |{γ^μ, γ^ν} - 2η^{μν} I|` over all pairs.
    pub fn clifford_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = self.gamma[mu] * self.gamma[nu] + self.gamma[nu] * self.gamma[mu];
                let target = if mu == nu { 2.0 * METRIC[mu] } else { 0.0 };
                let expected = Matrix4::<Complex64>::identity() * Complex64::new(target, 0.0);
                worst = worst.max(
                    (anti - expected)
                        .iter()
                        .map(|z| z.norm())
                        .fold(0.0, f64::max),
                );
            }
        }
        worst
    }

    /// `max |γ⁰ - γ⁰†|` and `max |γ^i + γ^i†|`.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = (self.gamma[0] - self.gamma[0].adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        for g in &self.gamma[1..] {
            worst = worst.max(
                (g + g.adjoint())
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0, f64::max),
            );
        }
        worst
    }

    /// `γ^μ a_μ`.
    pub fn slash(&self, a: [f64; 4]) -> Matrix4<Complex64> {
        self.gamma
            .iter()
            .zip(a)
            .fold(Matrix4::zeros(), |acc, (g, v)| {
                acc + g * Complex64::new(v, 0.0)
            })
    }
}
