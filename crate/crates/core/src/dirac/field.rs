use std::f64::consts::PI;

use nalgebra::Vector4;
use num_complex::Complex64;
use rand::Rng;

use super::{FourMomentum, LatticeParams};
use crate::error::{Error, Result};

pub type Spinor = Vector4<Complex64>;

/// Anything that can be sampled at an integer site.
pub trait SiteField {
    fn params(&self) -> &LatticeParams;
    fn at(&self, site: [i64; 4]) -> Spinor;
}

/// Spinor per site, periodic in every direction.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    params: LatticeParams,
    values: Vec<Spinor>,
}

impl SpinorField {
    pub fn zeros(params: LatticeParams) -> Self {
        Self {
            values: vec![Spinor::zeros(); params.volume()],
            params,
        }
    }

    pub fn constant(params: LatticeParams, u: Spinor) -> Self {
        Self {
            values: vec![u; params.volume()],
            params,
        }
    }

    pub fn from_fn(params: LatticeParams, f: impl Fn([i64; 4]) -> Spinor) -> Self {
        let values = params.sites().map(f).collect();
        Self { params, values }
    }

    /// Components uniform in the unit square of the complex plane, centred.
    pub fn random(params: LatticeParams, rng: &mut impl Rng) -> Self {
        let mut draw = || Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
        let values = (0..params.volume())
            .map(|_| Spinor::new(draw(), draw(), draw(), draw()))
            .collect();
        Self { params, values }
    }

    /// Samples any site field over this lattice.
    pub fn sample(source: &impl SiteField) -> Self {
        let params = *source.params();
        Self::from_fn(params, |s| source.at(s))
    }

    pub fn values(&self) -> &[Spinor] {
        &self.values
    }

    pub fn set(&mut self, site: [i64; 4], v: Spinor) {
        let i = self.params.index(site);
        self.values[i] = v;
    }

    /// `Σ_j ψ(j)† φ(j)`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.dotc(b))
            .sum()
    }

    /// Largest component modulus.
    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .flat_map(|v| v.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .flat_map(|(a, b)| (a - b).iter().map(|z| z.norm()).collect::<Vec<_>>())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            params: self.params,
            values,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            params: self.params,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

impl SiteField for SpinorField {
    fn params(&self) -> &LatticeParams {
        &self.params
    }

    fn at(&self, site: [i64; 4]) -> Spinor {
        self.values[self.params.index(site)]
    }
}

/// `u · exp(±2πi Σ_μ k_μ j_μ ε)` evaluated exactly at any site.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    pub params: LatticeParams,
    pub k: FourMomentum,
    pub spinor: Spinor,
}

impl PlaneWave {
    pub fn new(params: LatticeParams, k: FourMomentum, spinor: Spinor) -> Self {
        Self { params, k, spinor }
    }

    pub fn phase_at(&self, site: [i64; 4]) -> Complex64 {
        let kj: f64 = self.k.k().iter().zip(site).map(|(k, j)| k * j as f64).sum();
        Complex64::from_polar(
            1.0,
            self.params.phase.sign() * 2.0 * PI * kj * self.params.epsilon,
        )
    }
}

impl SiteField for PlaneWave {
    fn params(&self) -> &LatticeParams {
        &self.params
    }

    fn at(&self, site: [i64; 4]) -> Spinor {
        self.spinor * self.phase_at(site)
    }
}

/// Stores a plane wave; `k` must fit the periodic lattice.
pub fn plane_wave(params: LatticeParams, k: FourMomentum, spinor: Spinor) -> Result<SpinorField> {
    if !params.is_quantized(&k) {
        return Err(Error::Quantization(format!(
            "k = {:?} is not of the form n/(L ε) on extents {:?}",
            k.k(),
            params.extents
        )));
    }
    Ok(SpinorField::sample(&PlaneWave::new(params, k, spinor)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Spinor {
        Spinor::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(-0.25, 0.0),
            Complex64::new(0.0, 0.0),
        )
    }

    #[test]
    fn zero_momentum_is_constant() {
        let p = LatticeParams::new(0.5, [3; 4], 1.0).unwrap();
        let k = FourMomentum::new([0.0; 4], 0.5).unwrap();
        let f = plane_wave(p, k, u()).unwrap();
        assert_eq!(f.max_abs_diff(&SpinorField::constant(p, u())), 0.0);
    }

    #[test]
    fn quantized_wave_is_periodic() {
        let p = LatticeParams::new(0.5, [4; 4], 1.0).unwrap();
        let k = p.quantized_momentum([1, 1, -1, -1]).unwrap();
        let w = PlaneWave::new(p, k, u());
        for site in p.sites() {
            for mu in 0..4 {
                let mut wrapped = site;
                wrapped[mu] += 4;
                assert!((w.at(wrapped) - w.at(site)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn unquantized_storage_is_rejected() {
        let p = LatticeParams::new(0.5, [4; 4], 1.0).unwrap();
        let k = FourMomentum::new([0.3, 0.0, 0.0, 0.0], 0.5).unwrap();
        assert!(matches!(plane_wave(p, k, u()), Err(Error::Quantization(_))));
    }
}
