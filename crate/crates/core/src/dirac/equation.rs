//! On a plane wave `e = exp(s·2πi k·j ε)` every `δ^±_μ` acts as
//! `s·i p̃_μ η^±`, so the Dirac operator reduces to the 4×4 symbol
//! `-s γ^μ p̃_μ - m` times the scalar `η⁺`. The identities
//! `δ⁻_μ η⁺ = η⁻ δ⁺_μ` and `δ⁻_μ δ⁺_ν = δ⁻_ν δ⁺_μ` give
//!
//! ```text
//! (iγ^μ δ⁻_μ + m η⁻)(iγ^ν δ⁺_ν - m η⁺) = -(δ⁺_μ δ^{μ-} + m² η⁺ η⁻).
//! ```

use std::f64::consts::PI;

use nalgebra::Matrix4;
use num_complex::Complex64;

use super::field::{PlaneWave, SiteField, Spinor, SpinorField};
use super::gamma::GammaSet;
use super::ops::{delta_stencil, eta_stencil, DiffKind, Sign, Stencil};
use super::{FourMomentum, LatticeParams, PhaseSign, METRIC};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

struct DiracStencils {
    delta: Vec<Stencil>,
    eta: Stencil,
}

impl DiracStencils {
    fn new(epsilon: f64, sign: Sign) -> Self {
        let delta = (0..4)
            .map(|mu| delta_stencil(epsilon, mu, sign).expect("direction in range"))
            .collect();
        Self {
            delta,
            eta: eta_stencil(sign),
        }
    }

    // iγ^μ δ_μ ψ + mass · η ψ
    fn apply_at(&self, f: &impl SiteField, gammas: &GammaSet, mass: f64, site: [i64; 4]) -> Spinor {
        let mut out = self.eta.apply_at(f, site) * Complex64::new(mass, 0.0);
        for (g, d) in gammas.gamma.iter().zip(&self.delta) {
            out += g * d.apply_at(f, site) * I;
        }
        out
    }
}

/// `(iγ^μ δ⁺_μ - m η⁺) ψ` at one site.
pub fn dirac_apply_at(f: &impl SiteField, gammas: &GammaSet, site: [i64; 4]) -> Spinor {
    let p = f.params();
    DiracStencils::new(p.epsilon, Sign::Plus).apply_at(f, gammas, -p.m0c, site)
}

/// `(iγ^μ δ⁺_μ - m η⁺) ψ` over the lattice sites. Stored fields wrap
/// periodically; analytic ones are sampled exactly.
pub fn dirac_apply(field: &impl SiteField, gammas: &GammaSet) -> SpinorField {
    let p = *field.params();
    let st = DiracStencils::new(p.epsilon, Sign::Plus);
    SpinorField::from_fn(p, |s| st.apply_at(field, gammas, -p.m0c, s))
}

/// `(iγ^μ δ⁻_μ + m η⁻) ψ`.
pub fn dirac_apply_minus(field: &SpinorField, gammas: &GammaSet) -> SpinorField {
    let p = *field.params();
    let st = DiracStencils::new(p.epsilon, Sign::Minus);
    SpinorField::from_fn(p, |s| st.apply_at(field, gammas, p.m0c, s))
}

/// Stencil of `δ⁺_μ δ^{μ-} + m² η⁺ η⁻`.
pub fn kg_stencil(p: &LatticeParams) -> Stencil {
    let mass = eta_stencil(Sign::Plus)
        .compose(&eta_stencil(Sign::Minus))
        .scaled(p.m0c * p.m0c);
    METRIC.iter().enumerate().fold(mass, |acc, (mu, g)| {
        let plus = delta_stencil(p.epsilon, mu, Sign::Plus).expect("direction in range");
        let minus = delta_stencil(p.epsilon, mu, Sign::Minus).expect("direction in range");
        acc.plus(&plus.compose(&minus).scaled(*g))
    })
}

/// `(δ⁺_μ δ^{μ-} + m² η⁺ η⁻) ψ` over the lattice sites; vanishes on
/// mass-shell plane waves.
pub fn kg_apply(field: &impl SiteField) -> SpinorField {
    let st = kg_stencil(field.params());
    SpinorField::from_fn(*field.params(), |s| st.apply_at(field, s))
}

/// `max |(iγδ⁻ + mη⁻)(iγδ⁺ - mη⁺)ψ + (δ⁺δ^{μ-} + m²η⁺η⁻)ψ|`.
pub fn kg_factorization_residual(field: &SpinorField, gammas: &GammaSet) -> f64 {
    let lhs = dirac_apply_minus(&dirac_apply(field, gammas), gammas);
    lhs.add(&kg_apply(field)).max_abs()
}

/// `max_j |(1/ε)Δ_μ e - s·i p̃_μ Δ̃_μ e|` for the plane wave `e` over the
/// lattice sites, evaluated without wraparound.
pub fn kernel_identity_residual(
    params: &LatticeParams,
    k: &FourMomentum,
    mu: usize,
) -> Result<f64> {
    if mu >= 4 {
        return Err(Error::InvalidArgument(format!(
            "direction {mu} is not in 0..4"
        )));
    }
    let one = Spinor::from_element(Complex64::new(1.0, 0.0));
    let wave = PlaneWave::new(*params, *k, one);
    let diff = Stencil::one_dim(mu, DiffKind::Forward).scaled(1.0 / params.epsilon);
    let avg = Stencil::one_dim(mu, DiffKind::ForwardAverage);
    let factor = I * params.phase.sign() * k.ptilde()[mu];
    Ok(params
        .sites()
        .map(|s| (diff.apply_at(&wave, s) - avg.apply_at(&wave, s) * factor)[0].norm())
        .fold(0.0, f64::max))
}

/// `η⁺` on a plane wave: `Π_μ (1 + e^{s·2πi k_μ ε})/2`.
pub fn eta_plane_wave_factor(k: &FourMomentum, phase: PhaseSign) -> Complex64 {
    k.k()
        .iter()
        .map(|kmu| {
            (Complex64::new(1.0, 0.0)
                + Complex64::from_polar(1.0, phase.sign() * 2.0 * PI * kmu * k.epsilon()))
                * 0.5
        })
        .product()
}

/// `(4/ε²)[tan²(πk₀ε) - Σ_i tan²(πk_iε)] - m₀²c²`.
pub fn dispersion_residual(params: &LatticeParams, k: &FourMomentum) -> Result<f64> {
    FourMomentum::new(k.k(), params.epsilon)?;
    Ok(k.ptilde_sq() - params.m0c * params.m0c)
}

/// Positive `k₀` putting `(k₀, k)` on the lattice mass shell.
pub fn dispersion_solve(params: &LatticeParams, spatial: [f64; 3]) -> Result<f64> {
    let eps = params.epsilon;
    let probe = FourMomentum::new([0.0, spatial[0], spatial[1], spatial[2]], eps)?;
    let t = probe.ptilde();
    let sum: f64 = t[1..].iter().map(|p| (p * eps / 2.0).powi(2)).sum::<f64>()
        + (eps * params.m0c / 2.0).powi(2);
    let k0 = sum.sqrt().atan() / (PI * eps);
    if !(k0.is_finite() && k0 * eps < 0.5) {
        return Err(Error::NoRealRoot(format!(
            "no k0 with |k0 ε| < 1/2 for spatial k = {spatial:?}"
        )));
    }
    Ok(k0)
}

/// The symbol `-s γ^μ p̃_μ - m` of the Dirac operator on plane waves.
pub fn dirac_symbol(
    gammas: &GammaSet,
    k: &FourMomentum,
    m0c: f64,
    phase: PhaseSign,
) -> Matrix4<Complex64> {
    gammas.slash(k.ptilde()) * Complex64::new(-phase.sign(), 0.0)
        - Matrix4::identity() * Complex64::new(m0c, 0.0)
}

/// Number of singular values of `m` at most `tol · max(1, σ_max)`.
pub fn null_space_dimension(m: &Matrix4<Complex64>, tol: f64) -> usize {
    let sv = m.svd(false, false).singular_values;
    let scale = sv.max().max(1.0);
    sv.iter().filter(|s| **s <= tol * scale).count()
}

/// Unit spinor `u` with `dirac_symbol(k) u = 0`; errors when `k` is off shell.
pub fn dirac_spinor(
    gammas: &GammaSet,
    k: &FourMomentum,
    m0c: f64,
    phase: PhaseSign,
) -> Result<Spinor> {
    let m = dirac_symbol(gammas, k, m0c, phase);
    let svd = m.svd(false, true);
    let (idx, smin) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, s)| (i, *s))
        .expect("four singular values");
    let scale = svd.singular_values.max().max(1.0);
    if smin > 1e-9 * scale {
        return Err(Error::NoNullVector(format!(
            "smallest singular value {smin:e} at k = {:?}",
            k.k()
        )));
    }
    let v_t = svd.v_t.expect("requested");
    let u: Spinor = v_t.row(idx).adjoint();
    Ok(u / Complex64::new(u.norm(), 0.0))
}
