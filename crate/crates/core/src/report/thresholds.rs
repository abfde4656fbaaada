//! Pass thresholds for every check, keyed by `(suite, check)`.

/// Monotone-convergence checks report the largest ratio of consecutive
/// errors; anything below one is a strict decrease.
pub const MONOTONE: f64 = 1.0 - f64::EPSILON;

pub const TABLE: &[(&str, &str, f64)] = &[
    ("weyl", "commutation", 1e-12),
    ("weyl", "fourier-unitarity", 1e-12),
    ("weyl", "fourier-parseval", 1e-12),
    ("weyl", "intertwine", 1e-12),
    ("weyl", "continuum", MONOTONE),
    ("poly", "wigner-consistency", 1e-10),
    ("poly", "wigner-unit-norm", 1e-10),
    ("poly", "kravchuk-gram", 1e-10),
    ("poly", "meixner-diffeq", 1e-10),
    ("poly", "meixner-gram", 1e-10),
    ("oscillator", "ladder", 1e-10),
    ("oscillator", "commutator", 1e-10),
    ("oscillator", "anticommutator", 1e-10),
    ("oscillator", "spectrum", 1e-10),
    ("oscillator", "converge", MONOTONE),
    ("hydrogen", "diffeq", 1e-10),
    ("hydrogen", "eigenvalue", 1e-10),
    ("hydrogen", "orthogonality", 1e-10),
    ("hydrogen", "ladder-up-cosine", 1e-10),
    ("hydrogen", "ladder-up-prefactor", 1e-9),
    ("hydrogen", "ladder-down-cosine", 1e-10),
    ("hydrogen", "ladder-down-prefactor", 1e-9),
    ("hydrogen", "laguerre", MONOTONE),
    ("dirac", "clifford", 1e-14),
    ("dirac", "kernel", 1e-12),
    ("dirac", "dispersion", 1e-13),
    ("dirac", "planewave", 1e-11),
    ("dirac", "kg-planewave", 1e-11),
    ("dirac", "kg-factorization", 1e-12),
];

/// Threshold for `(suite, check)`.
///
/// # Panics
///
/// If the pair is not in [`TABLE`].
pub fn threshold(suite: &str, check: &str) -> f64 {
    TABLE
        .iter()
        .find(|(s, c, _)| *s == suite && *c == check)
        .map(|(_, _, t)| *t)
        .unwrap_or_else(|| panic!("no threshold for {suite}/{check}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_unique_and_positive() {
        for (i, (s, c, t)) in TABLE.iter().enumerate() {
            assert!(*t > 0.0);
            assert!(TABLE[i + 1..].iter().all(|(s2, c2, _)| (s2, c2) != (s, c)));
        }
    }
}
