//! Harmonic oscillator on the lattice `x = 0..=2j`.
//!
//! Level `n` is the grid function `x ↦ d^j_{j-n, j-x}(β)`. The two ladder
//! recurrences, with `N = 2j`, `p = sin²(β/2)`, `q = cos²(β/2)`,
//!
//! ```text
//! √(pq(n+1)(N-n)) d_{j-n-1, j-x} = p(N-x-n) d_{j-n, j-x} + √(pq x(N-x+1))   d_{j-n, j-x+1}
//! √(pq n(N-n+1))  d_{j-n+1, j-x} = p(N-x-n) d_{j-n, j-x} + √(pq (x+1)(N-x)) d_{j-n, j-x-1}
//! ```
//!
//! define raising and lowering maps on level data. Divided by `√(pqN)` they
//! act as `A†` and `A`, with `[A, A†] = 1 - n/j` and
//! `AA† + A†A = (2n+1) - n²/j` on level `n`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{invalid, Result};
use crate::poly::{HalfInt, WignerDTable};

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorModel {
    j: HalfInt,
    beta: f64,
    hbar_omega: f64,
    alpha: f64,
    table: WignerDTable,
}

/// A grid function over `x = 0..=N`, tagged with the level it represents.
///
/// `level == None` marks a structural zero: the result of raising the top
/// level or lowering level 0.
#[derive(Debug, Clone, PartialEq)]
pub struct OscState {
    pub level: Option<usize>,
    pub coeffs: Vec<f64>,
}

impl OscState {
    pub fn is_structural_zero(&self) -> bool {
        self.level.is_none()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    fn zero(len: usize) -> Self {
        Self {
            level: None,
            coeffs: vec![0.0; len],
        }
    }

    fn scaled(mut self, c: f64) -> Self {
        self.coeffs.iter_mut().for_each(|v| *v *= c);
        self
    }
}

/// A scalar read off from `op ψ ≈ value · ψ`, with the elementwise misfit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measured {
    pub value: f64,
    pub residual: f64,
}

impl OscillatorModel {
    pub fn new(j: HalfInt, beta: f64) -> Result<Self> {
        if j.twice() < 1 {
            return Err(invalid(format!("j must be at least 1/2, got {j}")));
        }
        let table = WignerDTable::new(j, beta)?;
        Ok(Self {
            j,
            beta,
            hbar_omega: 1.0,
            alpha: 1.0,
            table,
        })
    }

    /// Sets the energy unit `ħω` and the inverse length `α = √(Mω/ħ)`.
    pub fn with_units(mut self, hbar_omega: f64, alpha: f64) -> Result<Self> {
        if !(hbar_omega > 0.0 && alpha > 0.0) {
            return Err(invalid("hbar_omega and alpha must be positive"));
        }
        self.hbar_omega = hbar_omega;
        self.alpha = alpha;
        Ok(self)
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn table(&self) -> &WignerDTable {
        &self.table
    }

    /// `N = 2j`.
    pub fn size(&self) -> usize {
        self.j.twice() as usize
    }

    pub fn p(&self) -> f64 {
        (self.beta / 2.0).sin().powi(2)
    }

    pub fn q(&self) -> f64 {
        (self.beta / 2.0).cos().powi(2)
    }

    /// `1/α`, the lattice spacing in physical length units.
    pub fn lattice_spacing(&self) -> f64 {
        1.0 / self.alpha
    }

    /// Physical position of grid point `x`: `(x - Np) / (α √(2Npq))`.
    pub fn position_coordinate(&self, x: usize) -> f64 {
        let n = self.size() as f64;
        (x as f64 - n * self.p()) / (self.alpha * (2.0 * n * self.p() * self.q()).sqrt())
    }

    /// Level `n` data `x ↦ d^j_{j-n, j-x}(β)`.
    pub fn level(&self, n: usize) -> Result<OscState> {
        if n > self.size() {
            return Err(invalid(format!("level {n} exceeds N = {}", self.size())));
        }
        Ok(OscState {
            level: Some(n),
            coeffs: self.table.rows()[n].clone(),
        })
    }

    /// Orthonormal Kravchuk form of level `n`: `(-1)^{x-n} d^j_{j-n, j-x}`.
    pub fn wavefunction(&self, n: usize) -> Result<Vec<f64>> {
        let lvl = self.level(n)?;
        Ok(lvl
            .coeffs
            .iter()
            .enumerate()
            .map(|(x, v)| if (x + n).is_multiple_of(2) { *v } else { -v })
            .collect())
    }

    fn check_len(&self, state: &OscState) -> Result<()> {
        if state.coeffs.len() != self.size() + 1 {
            return Err(invalid(format!(
                "state has {} entries, expected {}",
                state.coeffs.len(),
                self.size() + 1
            )));
        }
        Ok(())
    }

    /// Right-hand side of the first recurrence applied to level-`n` data.
    fn raise_rhs(&self, coeffs: &[f64], n: usize) -> Vec<f64> {
        let (big_n, p, q) = (self.size() as f64, self.p(), self.q());
        let nf = n as f64;
        (0..coeffs.len())
            .map(|x| {
                let xf = x as f64;
                let here = p * (big_n - xf - nf) * coeffs[x];
                let left = if x > 0 {
                    (p * q * xf * (big_n - xf + 1.0)).sqrt() * coeffs[x - 1]
                } else {
                    0.0
                };
                here + left
            })
            .collect()
    }

    /// Right-hand side of the second recurrence applied to level-`n` data.
    fn lower_rhs(&self, coeffs: &[f64], n: usize) -> Vec<f64> {
        let (big_n, p, q) = (self.size() as f64, self.p(), self.q());
        let nf = n as f64;
        let last = coeffs.len() - 1;
        (0..coeffs.len())
            .map(|x| {
                let xf = x as f64;
                let here = p * (big_n - xf - nf) * coeffs[x];
                let right = if x < last {
                    (p * q * (xf + 1.0) * (big_n - xf)).sqrt() * coeffs[x + 1]
                } else {
                    0.0
                };
                here + right
            })
            .collect()
    }

    /// Raising map: level-`n` data to `√(pq(n+1)(N-n))` times level `n+1`.
    /// The top level maps to the structural zero.
    pub fn raise(&self, state: &OscState) -> Result<OscState> {
        self.check_len(state)?;
        Ok(match state.level {
            Some(n) if n < self.size() => OscState {
                level: Some(n + 1),
                coeffs: self.raise_rhs(&state.coeffs, n),
            },
            _ => OscState::zero(state.coeffs.len()),
        })
    }

    /// Lowering map: level-`n` data to `√(pqn(N-n+1))` times level `n-1`.
    /// Level 0 maps to the structural zero.
    pub fn lower(&self, state: &OscState) -> Result<OscState> {
        self.check_len(state)?;
        Ok(match state.level {
            Some(n) if n > 0 => OscState {
                level: Some(n - 1),
                coeffs: self.lower_rhs(&state.coeffs, n),
            },
            _ => OscState::zero(state.coeffs.len()),
        })
    }

    /// [`raise`](Self::raise) applied to level `n`.
    pub fn raise_state(&self, n: usize) -> Result<OscState> {
        self.raise(&self.level(n)?)
    }

    /// [`lower`](Self::lower) applied to level `n`.
    pub fn lower_state(&self, n: usize) -> Result<OscState> {
        self.lower(&self.level(n)?)
    }

    fn ladder_scale(&self) -> f64 {
        1.0 / (self.p() * self.q() * self.size() as f64).sqrt()
    }

    /// `A†`.
    pub fn creation(&self, state: &OscState) -> Result<OscState> {
        Ok(self.raise(state)?.scaled(self.ladder_scale()))
    }

    /// `A`.
    pub fn annihilation(&self, state: &OscState) -> Result<OscState> {
        Ok(self.lower(state)?.scaled(self.ladder_scale()))
    }

    /// Largest elementwise misfit of the two recurrences at level `n`,
    /// each compared against the directly evaluated neighbouring level.
    /// Returns `(raising, lowering)`.
    pub fn ladder_residual(&self, n: usize) -> Result<(f64, f64)> {
        let big_n = self.size();
        let here = self.level(n)?;
        let (p, q) = (self.p(), self.q());
        let nf = n as f64;
        let bn = big_n as f64;

        let up = self.raise_rhs(&here.coeffs, n);
        let up_target: Vec<f64> = if n < big_n {
            let c = (p * q * (nf + 1.0) * (bn - nf)).sqrt();
            self.level(n + 1)?.coeffs.iter().map(|v| c * v).collect()
        } else {
            vec![0.0; big_n + 1]
        };
        let down = self.lower_rhs(&here.coeffs, n);
        let down_target: Vec<f64> = if n > 0 {
            let c = (p * q * nf * (bn - nf + 1.0)).sqrt();
            self.level(n - 1)?.coeffs.iter().map(|v| c * v).collect()
        } else {
            vec![0.0; big_n + 1]
        };
        Ok((max_diff(&up, &up_target), max_diff(&down, &down_target)))
    }

    fn measure(&self, n: usize, combine: impl Fn(&[f64], &[f64]) -> Vec<f64>) -> Result<Measured> {
        let psi = self.level(n)?;
        let aad = self.annihilation(&self.creation(&psi)?)?;
        let ada = self.creation(&self.annihilation(&psi)?)?;
        let applied = combine(&aad.coeffs, &ada.coeffs);
        let value = psi
            .coeffs
            .iter()
            .zip(&applied)
            .map(|(a, b)| a * b)
            .sum::<f64>()
            / psi.dot(&psi);
        let residual = psi
            .coeffs
            .iter()
            .zip(&applied)
            .map(|(a, b)| (value * a - b).abs())
            .fold(0.0, f64::max);
        Ok(Measured { value, residual })
    }

    /// `[A, A†]` applied to level `n` through the recurrences.
    pub fn commutator_eigenvalue(&self, n: usize) -> Result<Measured> {
        self.measure(n, |a, b| a.iter().zip(b).map(|(u, v)| u - v).collect())
    }

    /// `AA† + A†A` applied to level `n` through the recurrences.
    pub fn anticommutator_eigenvalue(&self, n: usize) -> Result<Measured> {
        self.measure(n, |a, b| a.iter().zip(b).map(|(u, v)| u + v).collect())
    }

    /// `(ħω/2)(AA† + A†A)` on level `n`.
    pub fn hamiltonian_eigenvalue(&self, n: usize) -> Result<f64> {
        Ok(0.5 * self.hbar_omega * self.anticommutator_eigenvalue(n)?.value)
    }

    /// Matrix of `A + A†` between levels, `⟨ψ_m, (A + A†) ψ_n⟩` summed over
    /// the grid.
    pub fn position_matrix(&self) -> Result<DMatrix<f64>> {
        let size = self.size() + 1;
        let levels: Vec<OscState> = (0..size).map(|n| self.level(n)).collect::<Result<_>>()?;
        let mut m = DMatrix::zeros(size, size);
        for (n, psi) in levels.iter().enumerate() {
            let up = self.creation(psi)?;
            let down = self.annihilation(psi)?;
            for (row, phi) in levels.iter().enumerate() {
                m[(row, n)] = phi.dot(&up) + phi.dot(&down);
            }
        }
        Ok(m)
    }

    /// Sorted eigenvalues of `A + A†`.
    pub fn position_spectrum(&self) -> Result<Vec<f64>> {
        let m = self.position_matrix()?;
        let sym = (&m + m.transpose()) * 0.5;
        let mut ev: Vec<f64> = SymmetricEigen::new(sym)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        Ok(ev)
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v).abs())
        .fold(0.0, f64::max)
}

/// Normalized Hermite function `ψ_n(s) = (2^n n! √π)^{-1/2} H_n(s) e^{-s²/2}`.
pub fn hermite_function(n: usize, s: f64) -> f64 {
    let h0 = PI.powf(-0.25) * (-0.5 * s * s).exp();
    if n == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = 2f64.sqrt() * s * h0;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * s * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// One row of [`hermite_convergence`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub j: HalfInt,
    pub sup_error: f64,
}

/// Sup-norm distance between `(2Npq)^{1/4} φ_n(x)` and `ψ_n(s)` at
/// `s = (x - Np)/√(2Npq)`, for each model. All models must have `β = π/2`.
pub fn hermite_convergence(models: &[OscillatorModel], n: usize) -> Result<Vec<ConvergenceRow>> {
    if models.is_empty() {
        return Err(invalid("empty model sequence"));
    }
    if let Some(m) = models.iter().find(|m| (m.beta - PI / 2.0).abs() > 1e-12) {
        return Err(invalid(format!(
            "convergence study needs beta = π/2, got {}",
            m.beta
        )));
    }
    let smallest = models.iter().map(OscillatorModel::size).min().unwrap_or(0);
    if n > smallest {
        return Err(invalid(format!(
            "level {n} exceeds the smallest grid size {smallest}"
        )));
    }
    models
        .iter()
        .map(|m| {
            let big_n = m.size() as f64;
            let width = (2.0 * big_n * m.p() * m.q()).sqrt();
            let phi = m.wavefunction(n)?;
            let sup_error = phi
                .iter()
                .enumerate()
                .map(|(x, v)| {
                    let s = (x as f64 - big_n * m.p()) / width;
                    (width.sqrt() * v - hermite_function(n, s)).abs()
                })
                .fold(0.0, f64::max);
            Ok(ConvergenceRow { j: m.j, sup_error })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(twice_j: i64, beta: f64) -> OscillatorModel {
        OscillatorModel::new(HalfInt::from_twice(twice_j), beta).unwrap()
    }

    #[test]
    fn rejects_degenerate_models() {
        assert!(OscillatorModel::new(HalfInt::from_twice(0), 1.0).is_err());
        assert!(OscillatorModel::new(HalfInt::from_twice(2), 0.0).is_err());
        assert!(model(2, 1.0).with_units(0.0, 1.0).is_err());
        assert!(model(2, 1.0).level(3).is_err());
    }

    #[test]
    fn top_and_bottom_annihilate() {
        let m = model(4, PI / 2.0);
        assert!(m.raise_state(4).unwrap().is_structural_zero());
        assert!(m.lower_state(0).unwrap().is_structural_zero());
        let (up, down) = m.ladder_residual(4).unwrap();
        assert!(up < 1e-14 && down < 1e-14);
        let (_, down0) = m.ladder_residual(0).unwrap();
        assert!(down0 < 1e-14);
    }

    #[test]
    fn raise_matches_direct_level() {
        let m = model(4, PI / 2.0);
        let (up, down) = m.ladder_residual(1).unwrap();
        assert!(up < 1e-12 && down < 1e-12);
        let m = model(6, 1.1);
        let (_, down) = m.ladder_residual(2).unwrap();
        assert!(down < 1e-12);
    }

    #[test]
    fn commutator_examples() {
        let m = model(20, 1.3);
        assert!((m.commutator_eigenvalue(0).unwrap().value - 1.0).abs() < 1e-10);
        assert!((m.commutator_eigenvalue(10).unwrap().value).abs() < 1e-10);
        assert!((m.commutator_eigenvalue(3).unwrap().value - 0.7).abs() < 1e-10);
    }

    #[test]
    fn anticommutator_examples() {
        let m = model(20, 2.0);
        assert!((m.anticommutator_eigenvalue(0).unwrap().value - 1.0).abs() < 1e-10);
        assert!((m.anticommutator_eigenvalue(4).unwrap().value - 7.4).abs() < 1e-10);
        let h = m.clone().with_units(2.0, 1.0).unwrap();
        assert!((h.hamiltonian_eigenvalue(4).unwrap() - 7.4).abs() < 1e-10);
    }

    #[test]
    fn anticommutator_grows_towards_odd_integers() {
        let n = 3;
        let vals: Vec<f64> = [8, 16, 32, 64]
            .iter()
            .map(|&t| {
                model(t, PI / 2.0)
                    .anticommutator_eigenvalue(n)
                    .unwrap()
                    .value
            })
            .collect();
        for w in vals.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(vals.iter().all(|v| *v < 7.0));
    }

    #[test]
    fn raise_then_lower_composes_prefactors() {
        let m = model(6, 0.8);
        let big_n = 6.0;
        let (p, q) = (m.p(), m.q());
        let mut state = m.level(0).unwrap();
        let mut factor = 1.0;
        for k in 0..3 {
            state = m.raise(&state).unwrap();
            factor *= (p * q * (k as f64 + 1.0) * (big_n - k as f64)).sqrt();
        }
        for k in (1..=3).rev() {
            state = m.lower(&state).unwrap();
            factor *= (p * q * k as f64 * (big_n - k as f64 + 1.0)).sqrt();
        }
        let start = m.level(0).unwrap();
        assert_eq!(state.level, Some(0));
        assert!(max_diff(&state.coeffs, &start.scaled(factor).coeffs) < 1e-12 * factor);
    }

    #[test]
    fn spin_half_position_pair() {
        let ev = model(1, PI / 2.0).position_spectrum().unwrap();
        assert_eq!(ev.len(), 2);
        assert!((ev[0] + ev[1]).abs() < 1e-14);
        assert!((ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hermite_function_low_orders() {
        let s: f64 = 0.7;
        let g = PI.powf(-0.25) * (-s * s / 2.0).exp();
        assert!((hermite_function(0, s) - g).abs() < 1e-15);
        assert!((hermite_function(1, s) - 2f64.sqrt() * s * g).abs() < 1e-15);
        let h2 = (4.0 * s * s - 2.0) / (8.0f64).sqrt();
        assert!((hermite_function(2, s) - h2 * g).abs() < 1e-15);
    }

    #[test]
    fn convergence_argument_checks() {
        let models = vec![model(4, 1.0)];
        assert!(hermite_convergence(&models, 0).is_err());
        let models = vec![model(4, PI / 2.0)];
        assert!(hermite_convergence(&models, 5).is_err());
        assert!(hermite_convergence(&[], 0).is_err());
    }

    #[test]
    fn wavefunction_parity_at_half() {
        let m = model(30, PI / 2.0);
        for n in 0..5 {
            let phi = m.wavefunction(n).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            for x in 0..=30 {
                assert!((phi[30 - x] - sign * phi[x]).abs() < 1e-13);
            }
        }
    }
}
