//! Finite Weyl-Heisenberg algebra on `C^N`.
//!
//! The shift matrix `A` (`A|j> = |j-1 mod N>`) and the clock matrix
//! `B = diag(1, ω, ..., ω^{N-1})` with `ω = exp(2πi/N)` satisfy
//! `A^s B^t = ω^{st} B^t A^s`. Momentum kets `|k>` have components
//! `ω^{jk}/√N`, and the finite Fourier transform `F[j][k] = ω^{jk}/√N`
//! exchanges the two bases.
//!
//! Everything here is dense and direct; the largest admissible dimension is
//! [`MAX_DIM`].

use std::f64::consts::PI;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{invalid, Result};

/// Largest dimension accepted by [`FiniteSpace::new`].
pub const MAX_DIM: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSpace {
    dim: usize,
    omega: Complex64,
}

impl FiniteSpace {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(invalid(format!(
                "dimension must be in 1..={MAX_DIM}, got {dim}"
            )));
        }
        Ok(Self {
            dim,
            omega: Complex64::from_polar(1.0, 2.0 * PI / dim as f64),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> Complex64 {
        self.omega
    }

    /// `ω^k` for any integer `k`, reduced mod N before exponentiating.
    pub fn omega_pow(&self, k: i64) -> Complex64 {
        let r = k.rem_euclid(self.dim as i64);
        Complex64::from_polar(1.0, 2.0 * PI * r as f64 / self.dim as f64)
    }

    fn wrap(&self, i: i64) -> usize {
        i.rem_euclid(self.dim as i64) as usize
    }

    /// Position ket `|j>`.
    pub fn position_ket(&self, j: i64) -> StateVector {
        let mut amps = vec![Complex64::new(0.0, 0.0); self.dim];
        amps[self.wrap(j)] = Complex64::new(1.0, 0.0);
        StateVector { amplitudes: amps }
    }

    /// Momentum ket `|k>` with components `ω^{jk}/√N`.
    pub fn momentum_ket(&self, k: i64) -> StateVector {
        let norm = 1.0 / (self.dim as f64).sqrt();
        let amplitudes = (0..self.dim as i64)
            .map(|j| self.omega_pow(j * k) * norm)
            .collect();
        StateVector { amplitudes }
    }
}

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    /// Integer power by repeated squaring; negative exponents are not
    /// supported since the operators here are reduced mod N first.
    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        let n = self.dim;
        let amplitudes = (0..n)
            .map(|i| {
                self.entries[i * n..(i + 1) * n]
                    .iter()
                    .zip(&v.amplitudes)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        StateVector { amplitudes }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Exactly one unit entry in every row and column, zeros elsewhere.
    pub fn is_permutation(&self) -> bool {
        let n = self.dim;
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let mut col_count = vec![0usize; n];
        for i in 0..n {
            let mut row_count = 0;
            for j in 0..n {
                let e = self.get(i, j);
                if e == one {
                    row_count += 1;
                    col_count[j] += 1;
                } else if e != zero {
                    return false;
                }
            }
            if row_count != 1 {
                return false;
            }
        }
        col_count.iter().all(|&c| c == 1)
    }
}

// Skips zero entries of the left factor, so permutation and diagonal
// products cost O(N^2).
impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = OperatorMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.entries[k * n..(k + 1) * n];
                let dst = &mut out.entries[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Shift matrix `A` with `A[i][i+1 mod N] = 1`, so that `A|j> = |j-1>`.
pub fn build_shift(space: &FiniteSpace) -> OperatorMatrix {
    let n = space.dim();
    let mut a = OperatorMatrix::zeros(n);
    for i in 0..n {
        a.set(i, (i + 1) % n, Complex64::new(1.0, 0.0));
    }
    a
}

/// Clock matrix `B = diag(ω^j)`.
pub fn build_clock(space: &FiniteSpace) -> OperatorMatrix {
    let n = space.dim();
    let mut b = OperatorMatrix::zeros(n);
    for j in 0..n {
        b.set(j, j, space.omega_pow(j as i64));
    }
    b
}

fn reduce(space: &FiniteSpace, e: i64) -> u64 {
    e.rem_euclid(space.dim() as i64) as u64
}

/// `U_a = A^a` with `a` reduced mod N.
pub fn translation(space: &FiniteSpace, a: i64) -> OperatorMatrix {
    build_shift(space).pow(reduce(space, a))
}

/// `V_b = B^b` with `b` reduced mod N.
pub fn modulation(space: &FiniteSpace, b: i64) -> OperatorMatrix {
    build_clock(space).pow(reduce(space, b))
}

/// `max |A^s B^t - ω^{st} B^t A^s|` over all entries.
pub fn weyl_residual(space: &FiniteSpace, s: i64, t: i64) -> f64 {
    let a_s = translation(space, s);
    let b_t = modulation(space, t);
    let lhs = &a_s * &b_t;
    let rhs = (&b_t * &a_s).scale(space.omega_pow(s * t));
    lhs.max_abs_diff(&rhs)
}

/// Unitary transform `F[j][k] = ω^{jk}/√N`.
///
/// Applied to a position-space vector it gives `F̂(k) = N^{-1/2} Σ_j F_j ω^{jk}`;
/// the inverse is the adjoint, with `ω^{-jk}`.
pub fn finite_fourier(space: &FiniteSpace) -> OperatorMatrix {
    let n = space.dim();
    let norm = 1.0 / (n as f64).sqrt();
    let mut f = OperatorMatrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            f.set(j, k, space.omega_pow((j * k) as i64) * norm);
        }
    }
    f
}

/// Forward transform by direct summation.
pub fn fourier_forward(space: &FiniteSpace, v: &StateVector) -> StateVector {
    finite_fourier(space).apply(v)
}

/// Inverse transform by direct summation.
pub fn fourier_inverse(space: &FiniteSpace, v: &StateVector) -> StateVector {
    finite_fourier(space).adjoint().apply(v)
}

/// `max |F†F - I|`.
pub fn fourier_unitarity_residual(space: &FiniteSpace) -> f64 {
    let f = finite_fourier(space);
    (&f.adjoint() * &f).max_abs_diff(&OperatorMatrix::identity(space.dim()))
}

/// Largest deviation of the momentum-ket actions
/// `U_a|k> = ω^{ak}|k>` and `V_b|k> = |k+b>` over all `k`.
pub fn basis_intertwine_residual(space: &FiniteSpace, a: i64, b: i64) -> f64 {
    let u = translation(space, a);
    let v = modulation(space, b);
    let mut worst: f64 = 0.0;
    for k in 0..space.dim() as i64 {
        let ket = space.momentum_ket(k);
        let phased = StateVector::new(
            ket.amplitudes
                .iter()
                .map(|c| c * space.omega_pow(a * k))
                .collect(),
        );
        worst = worst.max(u.apply(&ket).max_abs_diff(&phased));
        worst = worst.max(v.apply(&ket).max_abs_diff(&space.momentum_ket(k + b)));
    }
    worst
}

/// Largest deviation of the position-ket actions `U_a|j> = |j-a>` and
/// `V_b|j> = ω^{bj}|j>` over all `j`.
pub fn position_ket_residual(space: &FiniteSpace, a: i64, b: i64) -> f64 {
    let u = translation(space, a);
    let v = modulation(space, b);
    let mut worst: f64 = 0.0;
    for j in 0..space.dim() as i64 {
        let ket = space.position_ket(j);
        worst = worst.max(u.apply(&ket).max_abs_diff(&space.position_ket(j - a)));
        let phased = StateVector::new(
            ket.amplitudes
                .iter()
                .map(|c| c * space.omega_pow(b * j))
                .collect(),
        );
        worst = worst.max(v.apply(&ket).max_abs_diff(&phased));
    }
    worst
}

/// Residuals of the wavefunction-level actions on an arbitrary vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresentationResidual {
    /// `(U_a F)(j) = F(j+a)`.
    pub position_translation: f64,
    /// `(V_b F)(j) = ω^{-bj} F(j)`, realized by `V_b† = B^{-b}`.
    pub position_modulation: f64,
    /// `(U_a G)(k) = ω^{-ak} G(k)` with `G(k)` the forward transform.
    pub momentum_translation: f64,
    /// `(V_b G)(k) = G(k+b)` with `G(k)` the forward transform.
    pub momentum_modulation: f64,
}

impl RepresentationResidual {
    pub fn max(&self) -> f64 {
        self.position_translation
            .max(self.position_modulation)
            .max(self.momentum_translation)
            .max(self.momentum_modulation)
    }
}

/// Checks the function-space forms of the translation and modulation actions
/// on `f`.
///
/// The position-space modulation `ω^{-bj}F(j)` is the action of the adjoint
/// `B^{-b}`; the ket action `V_b|j> = ω^{bj}|j>` is checked separately by
/// [`position_ket_residual`].
pub fn representation_residual(
    space: &FiniteSpace,
    a: i64,
    b: i64,
    f: &StateVector,
) -> Result<RepresentationResidual> {
    let n = space.dim();
    if f.dim() != n {
        return Err(invalid(format!(
            "vector length {} != dimension {n}",
            f.dim()
        )));
    }
    let u = translation(space, a);
    let v_adj = modulation(space, -b);
    let v = modulation(space, b);
    let wrap = |i: i64| i.rem_euclid(n as i64) as usize;

    let uf = u.apply(f);
    let shifted = StateVector::new((0..n as i64).map(|j| f.amplitudes[wrap(j + a)]).collect());
    let vf = v_adj.apply(f);
    let phased = StateVector::new(
        (0..n as i64)
            .map(|j| space.omega_pow(-b * j) * f.amplitudes[j as usize])
            .collect(),
    );

    let g = fourier_forward(space, f);
    let ug = fourier_forward(space, &u.apply(f));
    let g_phased = StateVector::new(
        (0..n as i64)
            .map(|k| space.omega_pow(-a * k) * g.amplitudes[k as usize])
            .collect(),
    );
    let vg = fourier_forward(space, &v.apply(f));
    let g_shifted = StateVector::new((0..n as i64).map(|k| g.amplitudes[wrap(k + b)]).collect());

    Ok(RepresentationResidual {
        position_translation: uf.max_abs_diff(&shifted),
        position_modulation: vf.max_abs_diff(&phased),
        momentum_translation: ug.max_abs_diff(&g_phased),
        momentum_modulation: vg.max_abs_diff(&g_shifted),
    })
}

/// Fixed continuum parameters `σ = ξ s`, `τ = η t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumProbe {
    pub sigma: f64,
    pub tau: f64,
}

/// One row of [`continuum_limit_probe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumSample {
    pub dim: usize,
    /// Common step `ξ = η = √(2π/N)`.
    pub step: f64,
    pub s: i64,
    pub t: i64,
    /// `|ω^{st} - e^{iστ}|`.
    pub deviation: f64,
    /// `|ξs - σ|·|τ| + |ηt - τ|·|σ| + |ξs - σ|·|ηt - τ|`, which bounds `deviation`.
    pub envelope: f64,
}

/// Compares `ω^{st}` against `e^{iστ}` for each dimension, with
/// `ξ = η = √(2π/N)` and `s = round(σ/ξ)`, `t = round(τ/η)`.
pub fn continuum_limit_probe(
    probe: ContinuumProbe,
    dims: &[usize],
) -> Result<Vec<ContinuumSample>> {
    if dims.is_empty() {
        return Err(invalid("empty dimension sequence"));
    }
    if !probe.sigma.is_finite() || !probe.tau.is_finite() {
        return Err(invalid("sigma and tau must be finite"));
    }
    let target = Complex64::from_polar(1.0, probe.sigma * probe.tau);
    dims.iter()
        .map(|&n| {
            let space = FiniteSpace::new(n)?;
            let step = (2.0 * PI / n as f64).sqrt();
            let s = (probe.sigma / step).round() as i64;
            let t = (probe.tau / step).round() as i64;
            let deviation = (space.omega_pow(s * t) - target).norm();
            let ds = (step * s as f64 - probe.sigma).abs();
            let dt = (step * t as f64 - probe.tau).abs();
            let envelope = ds * probe.tau.abs() + dt * probe.sigma.abs() + ds * dt;
            Ok(ContinuumSample {
                dim: n,
                step,
                s,
                t,
                deviation,
                envelope,
            })
        })
        .collect()
}
