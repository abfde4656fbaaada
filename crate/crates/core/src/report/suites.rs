use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::record::CheckRecord;
use super::thresholds::threshold;
use crate::dirac::{
    dirac_apply, dirac_spinor, dispersion_residual, dispersion_solve, kernel_identity_residual,
    kg_apply, kg_factorization_residual, FourMomentum, GammaSet, LatticeParams, PlaneWave,
    SpinorField,
};
use crate::error::{Error, Result};
use crate::hydrogen::{laguerre_limit_probe, printed_raising_prefactor, HydrogenModel};
use crate::oscillator::{hermite_convergence, OscillatorModel};
use crate::poly::{wigner_d, HalfInt, KravchukFamily, MeixnerFamily, WignerDTable};
use crate::weyl::{
    basis_intertwine_residual, continuum_limit_probe, fourier_forward, fourier_inverse,
    fourier_unitarity_residual, position_ket_residual, representation_residual, weyl_residual,
    ContinuumProbe, FiniteSpace, StateVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Weyl,
    Poly,
    Oscillator,
    Hydrogen,
    Dirac,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Weyl,
        Suite::Poly,
        Suite::Oscillator,
        Suite::Hydrogen,
        Suite::Dirac,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Weyl => "weyl",
            Suite::Poly => "poly",
            Suite::Oscillator => "oscillator",
            Suite::Hydrogen => "hydrogen",
            Suite::Dirac => "dirac",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Usage(format!(
                    "unknown suite '{s}'; known suites: {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WeylCheck {
    Commutation,
    Fourier,
    Intertwine,
    Continuum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyCheck {
    Gram,
    Diffeq,
    WignerConsistency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OscillatorCheck {
    Ladder,
    Commutator,
    Anticommutator,
    Spectrum,
    Converge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum HydrogenCheck {
    Diffeq,
    Orthogonality,
    Ladder,
    Laguerre,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DiracCheck {
    Kernel,
    Dispersion,
    Planewave,
    KgFactorization,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeylGrid {
    pub checks: Vec<WeylCheck>,
    pub dims: Vec<usize>,
    /// Random `(s, t)` pairs per dimension when `pair` is unset.
    pub pairs: usize,
    pub pair: Option<(i64, i64)>,
    pub probe: ContinuumProbe,
    pub probe_dims: Vec<usize>,
}

impl Default for WeylGrid {
    fn default() -> Self {
        let mut dims: Vec<usize> = (2..=32).collect();
        dims.extend([64, 256]);
        Self {
            checks: vec![
                WeylCheck::Commutation,
                WeylCheck::Fourier,
                WeylCheck::Intertwine,
                WeylCheck::Continuum,
            ],
            dims,
            pairs: 50,
            pair: None,
            probe: ContinuumProbe {
                sigma: 1.035,
                tau: 1.04,
            },
            probe_dims: vec![16, 32, 64, 128, 256],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyGrid {
    pub checks: Vec<PolyCheck>,
    /// Largest `2j` in the Wigner consistency sweep.
    pub twice_j_max: i64,
    pub betas: Vec<f64>,
    /// `(N, p)` pairs for the Kravchuk Gram check.
    pub kravchuk: Vec<(usize, f64)>,
    /// `(γ, μ)` pairs for the Meixner checks.
    pub meixner: Vec<(f64, f64)>,
    pub n_max: usize,
    pub x_max: usize,
}

impl Default for PolyGrid {
    fn default() -> Self {
        Self {
            checks: vec![
                PolyCheck::Gram,
                PolyCheck::Diffeq,
                PolyCheck::WignerConsistency,
            ],
            twice_j_max: 40,
            betas: vec![PI / 3.0, PI / 2.0, 2.0 * PI / 3.0],
            kravchuk: vec![(40, 0.5), (400, 0.5), (400, 0.3), (400, 0.02)],
            meixner: vec![(1.0, 0.3), (2.5, 0.5), (4.0, 0.7)],
            n_max: 10,
            x_max: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorGrid {
    pub checks: Vec<OscillatorCheck>,
    /// Values of `2j` for the identity checks.
    pub twice_js: Vec<i64>,
    pub betas: Vec<f64>,
    /// Values of `2j` for the Hermite limit, at `β = π/2`.
    pub converge_twice_js: Vec<i64>,
    pub converge_levels: Vec<usize>,
}

impl Default for OscillatorGrid {
    fn default() -> Self {
        Self {
            checks: vec![
                OscillatorCheck::Ladder,
                OscillatorCheck::Commutator,
                OscillatorCheck::Anticommutator,
                OscillatorCheck::Spectrum,
                OscillatorCheck::Converge,
            ],
            twice_js: (1..=40).collect(),
            betas: vec![PI / 3.0, PI / 2.0, 2.0 * PI / 3.0],
            converge_twice_js: vec![50, 100, 200, 400],
            converge_levels: vec![0, 1, 2],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HydrogenGrid {
    pub checks: Vec<HydrogenCheck>,
    pub points: Vec<(f64, f64)>,
    pub n_max: usize,
    /// Ladder checks run for `n <= ladder_levels`.
    pub ladder_levels: usize,
    pub laguerre_mus: Vec<f64>,
    /// `(n, l)` pairs for the Laguerre limit.
    pub laguerre_levels: Vec<(usize, usize)>,
}

impl Default for HydrogenGrid {
    fn default() -> Self {
        Self {
            checks: vec![
                HydrogenCheck::Diffeq,
                HydrogenCheck::Orthogonality,
                HydrogenCheck::Ladder,
                HydrogenCheck::Laguerre,
            ],
            points: vec![(1.0, 0.3), (2.0, 0.5), (4.0, 0.7)],
            n_max: 10,
            ladder_levels: 8,
            laguerre_mus: vec![0.9, 0.95, 0.975],
            laguerre_levels: vec![(1, 0), (2, 0), (2, 1), (3, 1)],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracGrid {
    pub checks: Vec<DiracCheck>,
    pub epsilon: f64,
    pub mass: f64,
    pub extents: [usize; 4],
    /// Explicit momentum; replaces the random draws.
    pub k: Option<[f64; 4]>,
    pub trials: usize,
    /// Largest `|n_i|` for quantized spatial momenta `n_i/(L_i ε)`.
    pub max_mode: i64,
    /// Largest `|k_μ ε|` for the kernel check.
    pub kernel_bound: f64,
    pub factorization_extents: Vec<[usize; 4]>,
    pub fields_per_lattice: usize,
}

impl Default for DiracGrid {
    fn default() -> Self {
        Self {
            checks: vec![
                DiracCheck::Kernel,
                DiracCheck::Dispersion,
                DiracCheck::Planewave,
                DiracCheck::KgFactorization,
            ],
            epsilon: 0.5,
            mass: 1.0,
            extents: [10; 4],
            k: None,
            trials: 20,
            max_mode: 2,
            kernel_bound: 0.45,
            factorization_extents: (2..=6).map(|l| [l; 4]).collect(),
            fields_per_lattice: 10,
        }
    }
}

type Params = Vec<(String, String)>;

fn kv(pairs: &[(&str, String)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_owned(), v.clone()))
        .collect()
}

fn rec(suite: Suite, check: &str, params: Params, residual: f64) -> CheckRecord {
    CheckRecord::new(
        suite.name(),
        check,
        params,
        residual,
        threshold(suite.name(), check),
    )
}

/// `π/3`-style labels for the usual angles, plain decimals otherwise.
fn angle_label(beta: f64) -> String {
    for (num, den) in [(1, 3), (1, 2), (2, 3), (1, 4), (3, 4), (1, 6), (5, 6)] {
        if (beta - PI * num as f64 / den as f64).abs() < 1e-15 {
            return if num == 1 {
                format!("pi/{den}")
            } else {
                format!("{num}pi/{den}")
            };
        }
    }
    format!("{beta}")
}

/// Largest ratio of consecutive entries; below one means strictly decreasing.
fn worst_ratio(errors: &[f64]) -> f64 {
    errors
        .windows(2)
        .map(|w| w[1] / w[0])
        .fold(f64::NEG_INFINITY, f64::max)
}

fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> StateVector {
    StateVector::new(
        (0..n)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect(),
    )
}

pub(crate) fn run_weyl(
    grid: &WeylGrid,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let s = Suite::Weyl;
    for &n in &grid.dims {
        let space = FiniteSpace::new(n)?;
        let ni = n as i64;
        let base = || kv(&[("N", n.to_string()), ("seed", seed.to_string())]);
        if grid.checks.contains(&WeylCheck::Commutation) {
            let pairs: Vec<(i64, i64)> = match grid.pair {
                Some(p) => vec![p],
                None => (0..grid.pairs)
                    .map(|_| (rng.random_range(-ni..2 * ni), rng.random_range(-ni..2 * ni)))
                    .collect(),
            };
            let worst = pairs
                .iter()
                .map(|&(a, b)| weyl_residual(&space, a, b))
                .fold(0.0, f64::max);
            let mut p = base();
            p.push(("pairs".into(), pairs.len().to_string()));
            out.push(rec(s, "commutation", p, worst));
        }
        if grid.checks.contains(&WeylCheck::Fourier) {
            out.push(rec(
                s,
                "fourier-unitarity",
                kv(&[("N", n.to_string())]),
                fourier_unitarity_residual(&space),
            ));
            let v = random_vector(n, rng);
            let fv = fourier_forward(&space, &v);
            let back = fourier_inverse(&space, &fv);
            let res = (fv.norm() - v.norm()).abs().max(back.max_abs_diff(&v));
            out.push(rec(s, "fourier-parseval", base(), res));
        }
        if grid.checks.contains(&WeylCheck::Intertwine) {
            let (a, b) = grid
                .pair
                .unwrap_or_else(|| (rng.random_range(-ni..2 * ni), rng.random_range(-ni..2 * ni)));
            let f = random_vector(n, rng);
            let res = basis_intertwine_residual(&space, a, b)
                .max(position_ket_residual(&space, a, b))
                .max(representation_residual(&space, a, b, &f)?.max());
            let mut p = base();
            p.extend(kv(&[("a", a.to_string()), ("b", b.to_string())]));
            out.push(rec(s, "intertwine", p, res));
        }
    }
    if grid.checks.contains(&WeylCheck::Continuum) {
        let samples = continuum_limit_probe(grid.probe, &grid.probe_dims)?;
        let devs: Vec<f64> = samples.iter().map(|x| x.deviation).collect();
        let dims: Vec<String> = grid.probe_dims.iter().map(|d| d.to_string()).collect();
        let p = kv(&[
            ("sigma", grid.probe.sigma.to_string()),
            ("tau", grid.probe.tau.to_string()),
            ("dims", dims.join("/")),
            (
                "last_deviation",
                format!("{:e}", devs.last().copied().unwrap_or(f64::NAN)),
            ),
        ]);
        out.push(rec(s, "continuum", p, worst_ratio(&devs)));
    }
    Ok(out)
}

pub(crate) fn run_poly(grid: &PolyGrid) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let s = Suite::Poly;
    if grid.checks.contains(&PolyCheck::WignerConsistency) {
        for tj in 1..=grid.twice_j_max {
            let j = HalfInt::from_twice(tj);
            for &beta in &grid.betas {
                let table = WignerDTable::new(j, beta)?;
                let mut worst: f64 = 0.0;
                for n in 0..=tj {
                    for x in 0..=tj {
                        let m = HalfInt::from_twice(tj - 2 * n);
                        let mp = HalfInt::from_twice(tj - 2 * x);
                        let direct = wigner_d(j, m, mp, beta)?;
                        worst = worst.max((table.by_index(n as usize, x as usize) - direct).abs());
                    }
                }
                let p = kv(&[("j", j.to_string()), ("beta", angle_label(beta))]);
                out.push(rec(s, "wigner-consistency", p.clone(), worst));
                out.push(rec(s, "wigner-unit-norm", p, table.unit_norm_residual()));
            }
        }
    }
    if grid.checks.contains(&PolyCheck::Gram) {
        for &(n, p) in &grid.kravchuk {
            let res = KravchukFamily::new(n, p)?.table().gram_residual();
            out.push(rec(
                s,
                "kravchuk-gram",
                kv(&[("N", n.to_string()), ("p", p.to_string())]),
                res,
            ));
        }
        for &(g, mu) in &grid.meixner {
            let fam = MeixnerFamily::new(g, mu)?;
            let tr = fam.truncation(grid.n_max)?;
            let res = fam.table(grid.n_max, tr.x_cut + 1).gram_residual(tr.x_cut);
            let p = kv(&[
                ("gamma", g.to_string()),
                ("mu", mu.to_string()),
                ("n_max", grid.n_max.to_string()),
                ("x_cut", tr.x_cut.to_string()),
                ("tail_bound", format!("{:e}", tr.tail_bound)),
            ]);
            out.push(rec(s, "meixner-gram", p, res));
        }
    }
    if grid.checks.contains(&PolyCheck::Diffeq) {
        for &(g, mu) in &grid.meixner {
            let table = MeixnerFamily::new(g, mu)?.table(grid.n_max, grid.x_max + 2);
            let mut worst: f64 = 0.0;
            for n in 0..=grid.n_max {
                for x in 0..=grid.x_max {
                    worst = worst.max(table.difference_residual(n, x)?.abs());
                }
            }
            let p = kv(&[
                ("gamma", g.to_string()),
                ("mu", mu.to_string()),
                ("n_max", grid.n_max.to_string()),
                ("x_max", grid.x_max.to_string()),
            ]);
            out.push(rec(s, "meixner-diffeq", p, worst));
        }
    }
    Ok(out)
}

pub(crate) fn run_oscillator(grid: &OscillatorGrid) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let s = Suite::Oscillator;
    let identity_checks = [
        OscillatorCheck::Ladder,
        OscillatorCheck::Commutator,
        OscillatorCheck::Anticommutator,
        OscillatorCheck::Spectrum,
    ];
    if identity_checks.iter().any(|c| grid.checks.contains(c)) {
        for &tj in &grid.twice_js {
            let j = HalfInt::from_twice(tj);
            for &beta in &grid.betas {
                let model = OscillatorModel::new(j, beta)?;
                let big_n = model.size();
                let jv = j.value();
                let p = || kv(&[("j", j.to_string()), ("beta", angle_label(beta))]);
                if grid.checks.contains(&OscillatorCheck::Ladder) {
                    let mut worst: f64 = 0.0;
                    for n in 0..=big_n {
                        let (up, down) = model.ladder_residual(n)?;
                        worst = worst.max(up).max(down);
                    }
                    out.push(rec(s, "ladder", p(), worst));
                }
                if grid.checks.contains(&OscillatorCheck::Commutator) {
                    let mut worst: f64 = 0.0;
                    for n in 0..=big_n {
                        let m = model.commutator_eigenvalue(n)?;
                        let expected = 1.0 - n as f64 / jv;
                        worst = worst.max((m.value - expected).abs()).max(m.residual);
                    }
                    out.push(rec(s, "commutator", p(), worst));
                }
                if grid.checks.contains(&OscillatorCheck::Anticommutator) {
                    let mut worst: f64 = 0.0;
                    for n in 0..=big_n {
                        let m = model.anticommutator_eigenvalue(n)?;
                        let nf = n as f64;
                        let expected = 2.0 * nf + 1.0 - nf * nf / jv;
                        worst = worst.max((m.value - expected).abs()).max(m.residual);
                    }
                    out.push(rec(s, "anticommutator", p(), worst));
                }
                if grid.checks.contains(&OscillatorCheck::Spectrum) {
                    let ev = model.position_spectrum()?;
                    let root = (big_n as f64).sqrt();
                    let worst = ev
                        .iter()
                        .enumerate()
                        .map(|(i, e)| (e - (2.0 * i as f64 - big_n as f64) / root).abs())
                        .fold(0.0, f64::max);
                    out.push(rec(s, "spectrum", p(), worst));
                }
            }
        }
    }
    if grid.checks.contains(&OscillatorCheck::Converge) && !grid.converge_twice_js.is_empty() {
        let models: Vec<OscillatorModel> = grid
            .converge_twice_js
            .iter()
            .map(|&tj| OscillatorModel::new(HalfInt::from_twice(tj), PI / 2.0))
            .collect::<Result<_>>()?;
        let js: Vec<String> = models.iter().map(|m| m.j().to_string()).collect();
        for &n in &grid.converge_levels {
            let rows = hermite_convergence(&models, n)?;
            let errs: Vec<f64> = rows.iter().map(|r| r.sup_error).collect();
            let p = kv(&[
                ("n", n.to_string()),
                ("js", js.join("/")),
                (
                    "last_error",
                    format!("{:e}", errs.last().copied().unwrap_or(f64::NAN)),
                ),
            ]);
            out.push(rec(s, "converge", p, worst_ratio(&errs)));
        }
    }
    Ok(out)
}

pub(crate) fn run_hydrogen(grid: &HydrogenGrid) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let s = Suite::Hydrogen;
    for &(g, mu) in &grid.points {
        let needs_model = grid.checks.iter().any(|c| *c != HydrogenCheck::Laguerre);
        if !needs_model {
            break;
        }
        let model = HydrogenModel::new(g, mu, grid.n_max)?;
        let base = || kv(&[("gamma", g.to_string()), ("mu", mu.to_string())]);
        if grid.checks.contains(&HydrogenCheck::Diffeq) {
            let mut worst: f64 = 0.0;
            for n in 0..=grid.n_max {
                for x in 0..=model.x_cut() {
                    worst = worst.max(model.sl_difference_residual(n, x)?.abs());
                }
            }
            let mut p = base();
            p.extend(kv(&[
                ("n_max", grid.n_max.to_string()),
                ("x_cut", model.x_cut().to_string()),
            ]));
            out.push(rec(s, "diffeq", p, worst));
            for n in 0..=grid.ladder_levels.min(grid.n_max) {
                let e = model.sl_eigenvalue(n)?;
                let expected = (mu - 1.0) * n as f64;
                let mut p = base();
                p.extend(kv(&[
                    ("n", n.to_string()),
                    ("measured", e.value.to_string()),
                ]));
                out.push(rec(
                    s,
                    "eigenvalue",
                    p,
                    (e.value - expected).abs().max(e.residual),
                ));
            }
        }
        if grid.checks.contains(&HydrogenCheck::Orthogonality) {
            let mut p = base();
            p.extend(kv(&[
                ("n_max", grid.n_max.to_string()),
                ("x_cut", model.x_cut().to_string()),
            ]));
            out.push(rec(s, "orthogonality", p, model.sl_off_diagonal()));
        }
        if grid.checks.contains(&HydrogenCheck::Ladder) {
            for n in 0..=grid.ladder_levels.min(grid.n_max) {
                let up = model.ladder_up_fit(n)?;
                let printed = printed_raising_prefactor(g, mu, n)
                    .map_or("undefined".to_owned(), |v| v.to_string());
                let mut p = base();
                p.push(("n".into(), n.to_string()));
                out.push(rec(
                    s,
                    "ladder-up-cosine",
                    p.clone(),
                    (1.0 - up.cosine).abs(),
                ));
                p.extend(kv(&[
                    ("measured", up.prefactor.to_string()),
                    ("printed", printed),
                ]));
                out.push(rec(
                    s,
                    "ladder-up-prefactor",
                    p,
                    (up.prefactor - up.expected).abs(),
                ));
                if n >= 1 {
                    let down = model.ladder_down_fit(n)?;
                    let printed_form = model.ladder_down_printed_fit(n)?;
                    let mut p = base();
                    p.push(("n".into(), n.to_string()));
                    let mut pc = p.clone();
                    pc.push((
                        "printed_form_cosine".into(),
                        printed_form.cosine.to_string(),
                    ));
                    out.push(rec(s, "ladder-down-cosine", pc, (1.0 - down.cosine).abs()));
                    p.push(("measured".into(), down.prefactor.to_string()));
                    out.push(rec(
                        s,
                        "ladder-down-prefactor",
                        p,
                        (down.prefactor - down.expected).abs(),
                    ));
                }
            }
        }
    }
    if grid.checks.contains(&HydrogenCheck::Laguerre) {
        let mut cache: Vec<(usize, Vec<HydrogenModel>)> = Vec::new();
        for &(n, l) in &grid.laguerre_levels {
            let k = n
                .checked_sub(l + 1)
                .ok_or_else(|| Error::InvalidArgument(format!("need n > l, got n={n}, l={l}")))?;
            let gamma = (2 * l + 2) as f64;
            let need = k.max(1);
            if !cache
                .iter()
                .any(|(ll, ms)| *ll == l && ms.iter().all(|m| m.n_max() >= need))
            {
                let models = grid
                    .laguerre_mus
                    .iter()
                    .map(|&mu| HydrogenModel::new(gamma, mu, need.max(3)))
                    .collect::<Result<Vec<_>>>()?;
                cache.retain(|(ll, _)| *ll != l);
                cache.push((l, models));
            }
            let models = &cache.iter().find(|(ll, _)| *ll == l).expect("cached").1;
            let rows = laguerre_limit_probe(models, n, l)?;
            let errs: Vec<f64> = rows.iter().map(|r| r.sup_error).collect();
            let mus: Vec<String> = grid.laguerre_mus.iter().map(|m| m.to_string()).collect();
            let p = kv(&[
                ("n", n.to_string()),
                ("l", l.to_string()),
                ("mus", mus.join("/")),
                (
                    "last_error",
                    format!("{:e}", errs.last().copied().unwrap_or(f64::NAN)),
                ),
            ]);
            out.push(rec(s, "laguerre", p, worst_ratio(&errs)));
        }
    }
    Ok(out)
}

fn trial_label(i: usize) -> String {
    format!("{i:03}")
}

pub(crate) fn run_dirac(
    grid: &DiracGrid,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let s = Suite::Dirac;
    let gammas = GammaSet::dirac();
    let params = LatticeParams::new(grid.epsilon, grid.extents, grid.mass)?;
    let eps = grid.epsilon;
    let extents = grid.extents.map(|l| l.to_string()).join("x");
    let base = |i: usize| {
        kv(&[
            ("eps", eps.to_string()),
            ("mass", grid.mass.to_string()),
            ("extents", extents.clone()),
            ("seed", seed.to_string()),
            ("trial", trial_label(i)),
        ])
    };
    let trials = if grid.k.is_some() { 1 } else { grid.trials };

    // Spatial momenta n_i/(L_i ε), or the explicit spatial part.
    let spatial = |rng: &mut ChaCha8Rng| -> Result<[f64; 3]> {
        match grid.k {
            Some(k) => Ok([k[1], k[2], k[3]]),
            None => {
                let n = [0, 1, 2].map(|_| rng.random_range(-grid.max_mode..=grid.max_mode));
                let q = params.quantized_momentum([0, n[0], n[1], n[2]])?.k();
                Ok([q[1], q[2], q[3]])
            }
        }
    };

    if grid.checks.contains(&DiracCheck::Kernel) {
        out.push(rec(
            s,
            "clifford",
            Vec::new(),
            gammas
                .clifford_residual()
                .max(gammas.hermiticity_residual()),
        ));
        for i in 0..trials {
            let k = match grid.k {
                Some(k) => FourMomentum::new(k, eps)?,
                None => {
                    let b = grid.kernel_bound / eps;
                    FourMomentum::new([0; 4].map(|_| rng.random_range(-b..=b)), eps)?
                }
            };
            let mut worst: f64 = 0.0;
            for mu in 0..4 {
                worst = worst.max(kernel_identity_residual(&params, &k, mu)?);
            }
            out.push(rec(s, "kernel", base(i), worst));
        }
    }
    if grid.checks.contains(&DiracCheck::Dispersion) {
        for i in 0..trials {
            let q = spatial(rng)?;
            let k0 = dispersion_solve(&params, q)?;
            let k = FourMomentum::new([k0, q[0], q[1], q[2]], eps)?;
            let mut p = base(i);
            p.push(("k0".into(), k0.to_string()));
            out.push(rec(
                s,
                "dispersion",
                p,
                dispersion_residual(&params, &k)?.abs(),
            ));
        }
    }
    if grid.checks.contains(&DiracCheck::Planewave) {
        for i in 0..trials {
            let q = spatial(rng)?;
            let k0 = dispersion_solve(&params, q)?;
            let k = FourMomentum::new([k0, q[0], q[1], q[2]], eps)?;
            let u = dirac_spinor(&gammas, &k, grid.mass, params.phase)?;
            let wave = PlaneWave::new(params, k, u);
            let mut p = base(i);
            p.push(("k".into(), k.k().map(|v| v.to_string()).join("/")));
            out.push(rec(
                s,
                "planewave",
                p.clone(),
                dirac_apply(&wave, &gammas).max_abs(),
            ));
            out.push(rec(s, "kg-planewave", p, kg_apply(&wave).max_abs()));
        }
    }
    if grid.checks.contains(&DiracCheck::KgFactorization) {
        let mut i = 0;
        for &ext in &grid.factorization_extents {
            let lp = LatticeParams::new(eps, ext, grid.mass)?;
            for _ in 0..grid.fields_per_lattice {
                let f = SpinorField::random(lp, rng);
                let p = kv(&[
                    ("eps", eps.to_string()),
                    ("mass", grid.mass.to_string()),
                    ("extents", ext.map(|v| v.to_string()).join("x")),
                    ("seed", seed.to_string()),
                    ("trial", trial_label(i)),
                ]);
                out.push(rec(
                    s,
                    "kg-factorization",
                    p,
                    kg_factorization_residual(&f, &gammas),
                ));
                i += 1;
            }
        }
    }
    Ok(out)
}
