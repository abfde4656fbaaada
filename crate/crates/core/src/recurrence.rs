//! Three-term recurrences for orthonormal functions with a running log scale.
//!
//! Both directions solve
//! `off[n] v[n+1] = center[n] v[n] - off[n-1] v[n-1]`
//! seeded by one exact boundary value given in log form, so that values far
//! below the f64 range at the seed do not underflow before the recurrence
//! carries them back into range.

const RESCALE_HI: f64 = 1e100;
const RESCALE_LO: f64 = 1e-100;

fn scaled(mantissa: f64, log_scale: f64) -> f64 {
    if mantissa == 0.0 {
        0.0
    } else {
        mantissa.signum() * (mantissa.abs().ln() + log_scale).exp()
    }
}

/// Runs the recurrence upwards from `v[0] = sign * exp(log_v0)` with
/// `v[-1] = 0`, returning `v[0..=upto]`.
pub(crate) fn forward(
    off: &[f64],
    center: &[f64],
    log_v0: f64,
    sign: f64,
    upto: usize,
) -> Vec<f64> {
    let mut out = Vec::with_capacity(upto + 1);
    let mut log_scale = log_v0;
    let mut prev = 0.0;
    let mut cur = sign;
    out.push(scaled(cur, log_scale));
    for n in 0..upto {
        let below = if n > 0 { off[n - 1] * prev } else { 0.0 };
        let next = (center[n] * cur - below) / off[n];
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > RESCALE_HI || (m < RESCALE_LO && m > 0.0) {
            cur /= m;
            prev /= m;
            log_scale += m.ln();
        }
        out.push(scaled(cur, log_scale));
    }
    out
}

/// Runs the recurrence downwards from `v[last] = sign * exp(log_vlast)` with
/// `v[last+1] = 0`, returning `v[downto..=last]`.
///
/// `off` must have length `last` at least (`off[n-1]` couples `n-1` and `n`).
pub(crate) fn backward(
    off: &[f64],
    center: &[f64],
    log_vlast: f64,
    sign: f64,
    last: usize,
    downto: usize,
) -> Vec<f64> {
    let mut out = vec![0.0; last - downto + 1];
    let mut log_scale = log_vlast;
    let mut above = 0.0;
    let mut cur = sign;
    out[last - downto] = scaled(cur, log_scale);
    let mut n = last;
    while n > downto {
        let top = if n < off.len() { off[n] * above } else { 0.0 };
        let next = (center[n] * cur - top) / off[n - 1];
        above = cur;
        cur = next;
        let m = cur.abs().max(above.abs());
        if m > RESCALE_HI || (m < RESCALE_LO && m > 0.0) {
            cur /= m;
            above /= m;
            log_scale += m.ln();
        }
        n -= 1;
        out[n - downto] = scaled(cur, log_scale);
    }
    out
}

/// `ln(k!)` for `k = 0..=n`.
pub(crate) fn ln_factorials(n: usize) -> Vec<f64> {
    let mut t = Vec::with_capacity(n + 1);
    t.push(0.0);
    let mut acc = 0.0;
    for k in 1..=n {
        acc += (k as f64).ln();
        t.push(acc);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    // Chebyshev U_n(x/2) obeys v[n+1] = x v[n] - v[n-1].
    #[test]
    fn forward_matches_chebyshev() {
        let x: f64 = 0.7;
        let off = vec![1.0; 20];
        let center = vec![x; 20];
        let v = forward(&off, &center, 0.0, 1.0, 19);
        let theta = (x / 2.0).acos();
        for (n, val) in v.iter().enumerate() {
            let exact = ((n as f64 + 1.0) * theta).sin() / theta.sin();
            assert!((val - exact).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn forward_survives_underflowing_seed() {
        let off = vec![1.0; 200];
        let center = vec![1000.0; 200];
        let v = forward(&off, &center, -1000.0, 1.0, 150);
        let expect = -1000.0 + 150.0 * 1000f64.ln();
        assert!(v[150].is_finite());
        assert!((v[150].ln() - expect).abs() < 1e-3);
    }

    #[test]
    fn backward_matches_reversed_chebyshev() {
        let x: f64 = -0.4;
        let last = 12;
        let off = vec![1.0; last];
        let center = vec![x; last + 1];
        let v = backward(&off, &center, 0.0, 1.0, last, 0);
        let theta = (x / 2.0).acos();
        for (n, val) in v.iter().enumerate() {
            let k = (last - n) as f64;
            let exact = ((k + 1.0) * theta).sin() / theta.sin();
            assert!((val - exact).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn ln_factorial_small() {
        let t = ln_factorials(5);
        assert!((t[5] - 120f64.ln()).abs() < 1e-14);
    }
}
