//! `Δf(j) = f(j+1) - f(j)`, `∇f(j) = f(j) - f(j-1)`,
//! `Δ̃f(j) = (f(j+1) + f(j))/2`, `∇̃f(j) = (f(j) + f(j-1))/2`, and
//!
//! ```text
//! δ⁺_μ = (1/ε) Δ_μ Π_{ν≠μ} Δ̃_ν     δ⁻_μ = (1/ε) ∇_μ Π_{ν≠μ} ∇̃_ν
//! η⁺   = Π_ν Δ̃_ν                   η⁻   = Π_ν ∇̃_ν
//! ```

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::field::{SiteField, Spinor, SpinorField};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffKind {
    /// `Δ`
    Forward,
    /// `∇`
    Backward,
    /// `Δ̃`
    ForwardAverage,
    /// `∇̃`
    BackwardAverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Linear combination of site shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct Stencil {
    terms: BTreeMap<[i64; 4], f64>,
}

impl Stencil {
    pub fn identity() -> Self {
        Self {
            terms: BTreeMap::from([([0; 4], 1.0)]),
        }
    }

    pub fn one_dim(mu: usize, kind: DiffKind) -> Self {
        let mut e = [0i64; 4];
        let (off, a, b) = match kind {
            DiffKind::Forward => (1, 1.0, -1.0),
            DiffKind::Backward => (-1, -1.0, 1.0),
            DiffKind::ForwardAverage => (1, 0.5, 0.5),
            DiffKind::BackwardAverage => (-1, 0.5, 0.5),
        };
        e[mu] = off;
        Self {
            terms: BTreeMap::from([(e, a), ([0; 4], b)]),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64; 4], &f64)> {
        self.terms.iter()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let off = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                *terms.entry(off).or_insert(0.0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0.0);
        Self { terms }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (off, c) in &other.terms {
            *terms.entry(*off).or_insert(0.0) += c;
        }
        terms.retain(|_, c| *c != 0.0);
        Self { terms }
    }

    pub fn scaled(mut self, c: f64) -> Self {
        self.terms.values_mut().for_each(|v| *v *= c);
        self
    }

    pub fn apply_at(&self, f: &impl SiteField, site: [i64; 4]) -> Spinor {
        self.terms.iter().fold(Spinor::zeros(), |acc, (off, c)| {
            let s = [
                site[0] + off[0],
                site[1] + off[1],
                site[2] + off[2],
                site[3] + off[3],
            ];
            acc + f.at(s) * Complex64::new(*c, 0.0)
        })
    }

    pub fn apply(&self, field: &SpinorField) -> SpinorField {
        SpinorField::from_fn(*field.params(), |s| self.apply_at(field, s))
    }
}

fn check_dir(mu: usize) -> Result<()> {
    if mu >= 4 {
        return Err(invalid(format!("direction {mu} is not in 0..4")));
    }
    Ok(())
}

fn kinds(sign: Sign) -> (DiffKind, DiffKind) {
    match sign {
        Sign::Plus => (DiffKind::Forward, DiffKind::ForwardAverage),
        Sign::Minus => (DiffKind::Backward, DiffKind::BackwardAverage),
    }
}

/// The 16-corner stencil of `δ^±_μ`.
pub fn delta_stencil(epsilon: f64, mu: usize, sign: Sign) -> Result<Stencil> {
    check_dir(mu)?;
    let (diff, avg) = kinds(sign);
    let s = (0..4).fold(Stencil::identity(), |acc, nu| {
        acc.compose(&Stencil::one_dim(nu, if nu == mu { diff } else { avg }))
    });
    Ok(s.scaled(1.0 / epsilon))
}

/// The 16-corner stencil of `η^±`.
pub fn eta_stencil(sign: Sign) -> Stencil {
    let (_, avg) = kinds(sign);
    (0..4).fold(Stencil::identity(), |acc, nu| {
        acc.compose(&Stencil::one_dim(nu, avg))
    })
}

/// One of `Δ_μ, ∇_μ, Δ̃_μ, ∇̃_μ` applied with periodic wraparound.
pub fn diff_ops(field: &SpinorField, mu: usize, kind: DiffKind) -> Result<SpinorField> {
    check_dir(mu)?;
    Ok(Stencil::one_dim(mu, kind).apply(field))
}

/// `δ^±_μ ψ` through its explicit stencil.
pub fn delta_pm(field: &SpinorField, mu: usize, sign: Sign) -> Result<SpinorField> {
    Ok(delta_stencil(field.params().epsilon, mu, sign)?.apply(field))
}

/// `δ^±_μ ψ` as successive one-direction passes, transverse averages
/// taken in the order given.
pub fn delta_pm_composed(
    field: &SpinorField,
    mu: usize,
    sign: Sign,
    order: [usize; 3],
) -> Result<SpinorField> {
    check_dir(mu)?;
    let (diff, avg) = kinds(sign);
    let mut seen = [false; 4];
    seen[mu] = true;
    for &nu in &order {
        check_dir(nu)?;
        if seen[nu] {
            return Err(invalid(format!(
                "transverse order {order:?} must list the three directions other than {mu}"
            )));
        }
        seen[nu] = true;
    }
    let mut out = diff_ops(field, mu, diff)?;
    for nu in order {
        out = diff_ops(&out, nu, avg)?;
    }
    Ok(out.scale(Complex64::new(1.0 / field.params().epsilon, 0.0)))
}

/// `η^± ψ`.
pub fn eta(field: &SpinorField, sign: Sign) -> SpinorField {
    eta_stencil(sign).apply(field)
}
