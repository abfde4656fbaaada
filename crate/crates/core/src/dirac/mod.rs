//! Difference calculus on a periodic 4D lattice and the lattice Dirac
//! equation `(iγ^μ δ⁺_μ - m η⁺) ψ = 0`.
//!
//! Sites are integer 4-vectors `j`. Plane waves are
//! `u · exp(±2πi Σ_μ k_μ j_μ ε)`; the metric `diag(+1,-1,-1,-1)` enters only
//! when raising an index, as in `p̃^μ p̃_μ`.

mod equation;
mod field;
mod gamma;
mod ops;

pub use equation::{
    dirac_apply, dirac_apply_at, dirac_apply_minus, dirac_spinor, dirac_symbol,
    dispersion_residual, dispersion_solve, eta_plane_wave_factor, kernel_identity_residual,
    kg_apply, kg_factorization_residual, kg_stencil, null_space_dimension,
};
pub use field::{plane_wave, PlaneWave, SiteField, Spinor, SpinorField};
pub use gamma::GammaSet;
pub use ops::{
    delta_pm, delta_pm_composed, delta_stencil, diff_ops, eta, eta_stencil, DiffKind, Sign, Stencil,
};

use crate::error::{Error, Result};

/// `diag(+1, -1, -1, -1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Sign of the plane-wave exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseSign {
    /// `exp(+2πi k·j ε)`.
    #[default]
    Plus,
    /// `exp(-2πi k·j ε)`.
    Minus,
}

impl PhaseSign {
    pub fn sign(self) -> f64 {
        match self {
            PhaseSign::Plus => 1.0,
            PhaseSign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeParams {
    pub epsilon: f64,
    pub extents: [usize; 4],
    /// `m₀c` with `ħ = 1`.
    pub m0c: f64,
    pub phase: PhaseSign,
}

impl LatticeParams {
    pub fn new(epsilon: f64, extents: [usize; 4], m0c: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        if extents.iter().any(|&l| l < 2) {
            return Err(Error::InvalidArgument(format!(
                "every extent must be at least 2, got {extents:?}"
            )));
        }
        if !(m0c >= 0.0 && m0c.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "m0c must be nonnegative, got {m0c}"
            )));
        }
        Ok(Self {
            epsilon,
            extents,
            m0c,
            phase: PhaseSign::Plus,
        })
    }

    pub fn with_phase(mut self, phase: PhaseSign) -> Self {
        self.phase = phase;
        self
    }

    pub fn volume(&self) -> usize {
        self.extents.iter().product()
    }

    /// All sites in row-major order, direction 3 fastest.
    pub fn sites(&self) -> impl Iterator<Item = [i64; 4]> + '_ {
        let [l0, l1, l2, l3] = self.extents.map(|l| l as i64);
        (0..l0).flat_map(move |a| {
            (0..l1).flat_map(move |b| (0..l2).flat_map(move |c| (0..l3).map(move |d| [a, b, c, d])))
        })
    }

    /// Row-major index of a site, wrapped periodically.
    pub fn index(&self, site: [i64; 4]) -> usize {
        let mut idx = 0usize;
        for (j, &l) in site.iter().zip(&self.extents) {
            idx = idx * l + j.rem_euclid(l as i64) as usize;
        }
        idx
    }

    /// Whether `k_μ = n_μ / (L_μ ε)` for integers `n_μ`.
    pub fn is_quantized(&self, k: &FourMomentum) -> bool {
        k.k.iter().zip(&self.extents).all(|(&kmu, &l)| {
            let n = kmu * l as f64 * self.epsilon;
            (n - n.round()).abs() <= 1e-9
        })
    }

    /// `k_μ = n_μ / (L_μ ε)`.
    pub fn quantized_momentum(&self, n: [i64; 4]) -> Result<FourMomentum> {
        let mut k = [0.0; 4];
        for mu in 0..4 {
            k[mu] = n[mu] as f64 / (self.extents[mu] as f64 * self.epsilon);
        }
        FourMomentum::new(k, self.epsilon)
    }
}

/// Lattice momentum with `|k_μ ε| < 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    k: [f64; 4],
    epsilon: f64,
}

impl FourMomentum {
    pub fn new(k: [f64; 4], epsilon: f64) -> Result<Self> {
        if let Some((mu, kmu)) = k
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_nan() || (*v * epsilon).abs() >= 0.5)
        {
            return Err(Error::Domain(format!(
                "|k_{mu} ε| = {} is not below 1/2",
                (kmu * epsilon).abs()
            )));
        }
        Ok(Self { k, epsilon })
    }

    pub fn k(&self) -> [f64; 4] {
        self.k
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `p̃_μ = (2/ε) tan(π k_μ ε)`.
    pub fn ptilde(&self) -> [f64; 4] {
        self.k
            .map(|kmu| 2.0 / self.epsilon * (std::f64::consts::PI * kmu * self.epsilon).tan())
    }

    /// `p̃^μ p̃_μ`.
    pub fn ptilde_sq(&self) -> f64 {
        self.ptilde()
            .iter()
            .zip(METRIC)
            .map(|(p, g)| g * p * p)
            .sum()
    }

    pub fn negated(&self) -> Self {
        Self {
            k: self.k.map(|v| -v),
            epsilon: self.epsilon,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(LatticeParams::new(0.0, [2; 4], 1.0).is_err());
        assert!(LatticeParams::new(1.0, [2, 2, 1, 2], 1.0).is_err());
        assert!(LatticeParams::new(1.0, [2; 4], -1.0).is_err());
    }

    #[test]
    fn site_indexing_wraps() {
        let p = LatticeParams::new(1.0, [2, 3, 4, 5], 0.0).unwrap();
        let sites: Vec<_> = p.sites().collect();
        assert_eq!(sites.len(), 120);
        for (i, s) in sites.iter().enumerate() {
            assert_eq!(p.index(*s), i);
        }
        assert_eq!(p.index([-1, 3, 4, -5]), p.index([1, 0, 0, 0]));
    }

    #[test]
    fn pole_exclusion() {
        assert!(FourMomentum::new([0.5, 0.0, 0.0, 0.0], 1.0).is_err());
        assert!(FourMomentum::new([0.0, -0.25, 0.0, 0.0], 2.0).is_err());
        assert!(FourMomentum::new([0.49, 0.0, 0.0, 0.0], 1.0).is_ok());
        assert!(FourMomentum::new([f64::NAN, 0.0, 0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn quantization() {
        let p = LatticeParams::new(0.5, [4; 4], 1.0).unwrap();
        let k = p.quantized_momentum([1, -1, 0, 1]).unwrap();
        assert!(p.is_quantized(&k));
        assert!(!p.is_quantized(&FourMomentum::new([0.3, 0.0, 0.0, 0.0], 0.5).unwrap()));
    }
}
