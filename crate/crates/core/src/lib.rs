//! Exactly solvable quantum systems on finite lattices.
//!
//! The crate realizes four discrete systems as finite-dimensional
//! computations, each paired with residual checks for its defining
//! identities:
//!
//! * [`weyl`]: clock and shift matrices, the relation `AB = ωBA`, the finite
//!   Fourier transform and a continuum-limit probe.
//! * [`poly`]: orthonormal Kravchuk and Meixner functions and Wigner
//!   d-functions, evaluated by stable recurrences and cross-checked against
//!   closed-form oracles.
//! * [`oscillator`]: the discrete harmonic oscillator built on Wigner
//!   d-functions, its ladder operators and their spectra.
//! * [`hydrogen`]: the Meixner radial problem, its Sturm-Liouville form and
//!   ladder operators.
//! * [`dirac`]: difference operators on a periodic 4D lattice, the lattice
//!   Dirac equation, tan-dispersion and the Klein-Gordon factorization.
//!
//! [`report`] runs every check as a table of [`report::CheckRecord`]s and is
//! what the `latticeqm` binary drives.

#![allow(clippy::needless_range_loop)]

pub mod dirac;
pub mod error;
pub mod hydrogen;
pub mod oscillator;
pub mod poly;
pub mod report;
pub mod weyl;

mod recurrence;

pub use error::{Error, Result};
