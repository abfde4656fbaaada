//! Discrete orthogonal functions: Kravchuk, Wigner d and Meixner.
//!
//! Orthonormal functions are evaluated by three-term recurrences in the
//! degree with log-space seeds. The Wigner d-function also has a direct
//! factorial-sum evaluation ([`wigner::wigner_d`]) kept as an independent
//! route for cross-checks.

pub mod kravchuk;
pub mod meixner;
pub mod wigner;

pub use kravchuk::{KravchukFamily, KravchukTable};
pub use meixner::{MeixnerFamily, Truncation};
pub use wigner::{wigner_d, HalfInt, WignerDTable};
