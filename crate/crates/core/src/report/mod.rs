//! Check records, suite runner and report emission.
//!
//! Every suite returns [`CheckRecord`]s with `pass = residual <= threshold`,
//! thresholds coming from [`thresholds::TABLE`]. Suites draw randomness from
//! a ChaCha8 stream derived from the run seed and the suite, so reports are
//! reproducible byte for byte regardless of thread scheduling.

mod record;
mod suites;
pub mod thresholds;

use std::path::PathBuf;
use std::thread;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use record::{
    emit, format_float, parse_json, render, sort_records, to_csv, to_json, CheckRecord, Format,
};
pub use suites::{
    DiracCheck, DiracGrid, HydrogenCheck, HydrogenGrid, OscillatorCheck, OscillatorGrid, PolyCheck,
    PolyGrid, Suite, WeylCheck, WeylGrid,
};

use crate::error::{Error, Result};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "LATTICEQM_OUT_DIR";

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub weyl: WeylGrid,
    pub poly: PolyGrid,
    pub oscillator: OscillatorGrid,
    pub hydrogen: HydrogenGrid,
    pub dirac: DiracGrid,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suites: Suite::ALL.to_vec(),
            weyl: WeylGrid::default(),
            poly: PolyGrid::default(),
            oscillator: OscillatorGrid::default(),
            hydrogen: HydrogenGrid::default(),
            dirac: DiracGrid::default(),
            out: None,
            format: Format::Csv,
            seed: DEFAULT_SEED,
        }
    }
}

impl RunConfig {
    pub fn only(suite: Suite) -> Self {
        Self {
            suites: vec![suite],
            ..Self::default()
        }
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite as u64);
        rng
    }

    fn run_one(&self, suite: Suite) -> Result<Vec<CheckRecord>> {
        let mut rng = self.rng(suite);
        match suite {
            Suite::Weyl => suites::run_weyl(&self.weyl, self.seed, &mut rng),
            Suite::Poly => suites::run_poly(&self.poly),
            Suite::Oscillator => suites::run_oscillator(&self.oscillator),
            Suite::Hydrogen => suites::run_hydrogen(&self.hydrogen),
            Suite::Dirac => suites::run_dirac(&self.dirac, self.seed, &mut rng),
        }
    }
}

/// Runs the selected suites, one thread each, and returns their records in
/// `(suite, check, params)` order.
pub fn run_suite(config: &RunConfig) -> Result<Vec<CheckRecord>> {
    if config.suites.is_empty() {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        return Err(Error::Usage(format!(
            "no suite selected; choose from {}",
            names.join(", ")
        )));
    }
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    let results: Vec<Result<Vec<CheckRecord>>> = thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || config.run_one(s)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    sort_records(&mut records);
    Ok(records)
}

pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_selection_is_a_usage_error() {
        let cfg = RunConfig {
            suites: vec![],
            ..RunConfig::default()
        };
        assert!(matches!(run_suite(&cfg), Err(Error::Usage(_))));
    }

    #[test]
    fn unknown_suite_lists_known_ones() {
        let err = "quark".parse::<Suite>().unwrap_err().to_string();
        assert!(err.contains("weyl") && err.contains("dirac"));
    }

    #[test]
    fn weyl_dim_eight_passes() {
        let mut cfg = RunConfig::only(Suite::Weyl);
        cfg.weyl.dims = vec![8];
        cfg.weyl.checks = vec![
            WeylCheck::Commutation,
            WeylCheck::Fourier,
            WeylCheck::Intertwine,
        ];
        let recs = run_suite(&cfg).unwrap();
        let checks: Vec<&str> = recs.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(
            checks,
            [
                "commutation",
                "fourier-parseval",
                "fourier-unitarity",
                "intertwine"
            ]
        );
        assert!(all_pass(&recs));
    }

    #[test]
    fn same_seed_same_bytes() {
        let mut cfg = RunConfig::only(Suite::Dirac);
        cfg.dirac.trials = 3;
        cfg.dirac.extents = [4; 4];
        cfg.dirac.max_mode = 1;
        cfg.dirac.factorization_extents = vec![[2; 4], [2, 3, 2, 3]];
        cfg.dirac.fields_per_lattice = 2;
        let a = to_csv(&run_suite(&cfg).unwrap());
        let b = to_csv(&run_suite(&cfg).unwrap());
        assert_eq!(a, b);
        cfg.seed += 1;
        assert_ne!(a, to_csv(&run_suite(&cfg).unwrap()));
    }
}
