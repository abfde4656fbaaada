//! Wigner d-functions `d^j_{mm'}(β)` for rotations about the y axis.
//!
//! Convention: `d^{1/2}(β) = [[cos β/2, -sin β/2], [sin β/2, cos β/2]]` with
//! rows `m = 1/2, -1/2` and columns `m'` in the same order. In this
//! convention the orthonormal Kravchuk functions with `N = 2j`,
//! `p = sin²(β/2)`, `n = j - m`, `x = j - m'` satisfy
//! `(-1)^{m-m'} d^j_{mm'}(β) = φ_n(x)`, which is how [`WignerDTable`] is
//! filled. [`wigner_d`] evaluates the same function from its factorial sum.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::poly::kravchuk::KravchukFamily;

/// A half-integer stored as its double, so `j = 3/2` is `HalfInt(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        Self(twice)
    }

    pub fn from_int(v: i64) -> Self {
        Self(2 * v)
    }

    /// Accepts only exact multiples of 1/2.
    pub fn from_f64(v: f64) -> Result<Self> {
        let t = 2.0 * v;
        if !t.is_finite() || (t - t.round()).abs() > 1e-9 {
            return Err(invalid(format!("{v} is not a half-integer")));
        }
        Ok(Self(t.round() as i64))
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

fn check_angle(beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < std::f64::consts::PI) {
        return Err(invalid(format!("beta must lie in (0, π), got {beta}")));
    }
    Ok(())
}

/// Validates `|m| <= j`, `|m'| <= j` and that `j - m`, `j - m'` are integers.
/// Returns `(n, x) = (j - m, j - m')`.
fn grid_indices(j: HalfInt, m: HalfInt, mp: HalfInt) -> Result<(usize, usize)> {
    let (j2, m2, mp2) = (j.twice(), m.twice(), mp.twice());
    if j2 < 0 || m2.abs() > j2 || mp2.abs() > j2 || (j2 - m2) % 2 != 0 || (j2 - mp2) % 2 != 0 {
        return Err(invalid(format!(
            "(j, m, m') = ({j}, {m}, {mp}) is not on the spin grid"
        )));
    }
    Ok((((j2 - m2) / 2) as usize, ((j2 - mp2) / 2) as usize))
}

/// `d^j_{mm'}(β)` from the factorial sum
///
/// ```text
/// Σ_s (-1)^{m'-m+s} √((j+m)!(j-m)!(j+m')!(j-m')!)
///     / ((j+m'-s)! s! (m-m'+s)! (j-m-s)!) · cos^{2j+m'-m-2s}(β/2) sin^{m-m'+2s}(β/2)
/// ```
///
/// The alternating sum cancels badly for large `j`, so it is carried out
/// exactly in integers. Rounded to `f64`, `p = sin²(β/2)` is a dyadic
/// `P / 2^E` and `q = 1 - p = Q / 2^E` exactly, so every term is
/// `±Q^a P^b` times a product of binomials over a common denominator. The
/// only rounding is the final square root of `d²`, itself an exact ratio.
pub fn wigner_d(j: HalfInt, m: HalfInt, mp: HalfInt, beta: f64) -> Result<f64> {
    check_angle(beta)?;
    grid_indices(j, m, mp)?;
    let (j2, m2, mp2) = (j.twice(), m.twice(), mp.twice());
    let (big_p, e) = dyadic((beta / 2.0).sin().powi(2))?;
    let big_q = (BigInt::one() << e) - &big_p;
    let fact = |t: i64| -> BigInt { (1..=t).map(BigInt::from).product() };
    let binom =
        |n: i64, k: i64| -> BigInt { (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1)) };

    let cos_parity = (j2 + (mp2 - m2) / 2).rem_euclid(2);
    let sin_parity = ((m2 - mp2) / 2).rem_euclid(2);
    // Terms share the power of 2^E (cosine and sine powers add up to 2j) and
    // the denominator (j+m')! (j-m')! once the binomials are pulled out.
    let half_total = (j2 - cos_parity - sin_parity) / 2;
    let (upper, lower) = ((j2 + mp2) / 2, (j2 - mp2) / 2);
    let mut sum = BigInt::zero();
    for s in 0..=j2 {
        let a = upper - s;
        let c = (m2 - mp2) / 2 + s;
        let d = (j2 - m2) / 2 - s;
        if a < 0 || c < 0 || d < 0 {
            continue;
        }
        let q_pow = (j2 + (mp2 - m2) / 2 - 2 * s - cos_parity) / 2;
        let p_pow = half_total - q_pow;
        let term =
            big_q.pow(q_pow as u32) * big_p.pow(p_pow as u32) * binom(upper, s) * binom(lower, d);
        if ((mp2 - m2) / 2 + s).rem_euclid(2) == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return Ok(0.0);
    }
    let idx = |t: i64| t / 2;
    let f = fact(idx(j2 + m2)) * fact(idx(j2 - m2)) * fact(idx(j2 + mp2)) * fact(idx(j2 - mp2));
    let num = &sum * &sum * f * big_q.pow(cos_parity as u32) * big_p.pow(sin_parity as u32);
    let denom_fact = fact(upper) * fact(lower);
    let shift = e as i64 * (2 * half_total + cos_parity + sin_parity);
    let den = (&denom_fact * &denom_fact) << shift;
    let magnitude = BigRational::new(num, den)
        .to_f64()
        .unwrap_or(f64::NAN)
        .sqrt();
    Ok(if sum.is_negative() {
        -magnitude
    } else {
        magnitude
    })
}

/// `v = P / 2^E` exactly, for `0 < v < 1`.
fn dyadic(v: f64) -> Result<(BigInt, usize)> {
    if !(v > 0.0 && v < 1.0) {
        return Err(invalid(format!("sin²(β/2) = {v} is outside (0, 1)")));
    }
    let (mantissa, exponent, _) = v.integer_decode();
    Ok((BigInt::from(mantissa), (-exponent) as usize))
}

/// The full `(2j+1) × (2j+1)` matrix `d^j_{mm'}(β)`, stored by
/// `(n, x) = (j - m, j - m')`.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerDTable {
    j: HalfInt,
    beta: f64,
    values: Vec<Vec<f64>>,
}

impl WignerDTable {
    pub fn new(j: HalfInt, beta: f64) -> Result<Self> {
        check_angle(beta)?;
        if j.twice() < 0 {
            return Err(invalid(format!("j must be nonnegative, got {j}")));
        }
        let size = j.twice() as usize;
        let p = (beta / 2.0).sin().powi(2);
        let kt = KravchukFamily::new(size, p)?.table();
        let values = kt
            .values
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(x, v)| if (n + x) % 2 == 0 { *v } else { -v })
                    .collect()
            })
            .collect();
        Ok(Self { j, beta, values })
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `d^j_{mm'}(β)`.
    pub fn get(&self, m: HalfInt, mp: HalfInt) -> Result<f64> {
        let (n, x) = grid_indices(self.j, m, mp)?;
        Ok(self.values[n][x])
    }

    /// `d^j_{j-n, j-x}(β)`.
    pub fn by_index(&self, n: usize, x: usize) -> f64 {
        self.values[n][x]
    }

    /// Rows in `n = j - m` order; each row runs over `x = j - m'`.
    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Largest deviation of any row or column norm from 1.
    pub fn unit_norm_residual(&self) -> f64 {
        let size = self.values.len();
        let mut worst: f64 = 0.0;
        for i in 0..size {
            let row: f64 = self.values[i].iter().map(|v| v * v).sum();
            let col: f64 = self.values.iter().map(|r| r[i] * r[i]).sum();
            worst = worst.max((row - 1.0).abs()).max((col - 1.0).abs());
        }
        worst
    }
}
