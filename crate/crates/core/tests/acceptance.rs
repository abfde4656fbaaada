//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use latticeqm::report::{
    run_suite, CheckRecord, DiracCheck, HydrogenCheck, OscillatorCheck, PolyCheck, RunConfig,
    Suite, WeylCheck,
};
use latticeqm::weyl::{continuum_limit_probe, ContinuumProbe};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

/// All records pass; reports the worst residual against its threshold.
fn summarize(records: &[CheckRecord], expect_checks: &[&str]) -> Outcome {
    let missing: Vec<_> = expect_checks
        .iter()
        .filter(|c| !records.iter().any(|r| r.check == **c))
        .collect();
    let failed = records.iter().filter(|r| !r.pass).count();
    let worst = records
        .iter()
        .max_by(|a, b| (a.residual / a.threshold).total_cmp(&(b.residual / b.threshold)))
        .map(|r| {
            format!(
                "worst {}/{} {:.2e} vs {:.0e}",
                r.check,
                r.params_string(),
                r.residual,
                r.threshold
            )
        })
        .unwrap_or_default();
    Outcome {
        pass: failed == 0 && missing.is_empty() && !records.is_empty(),
        detail: format!(
            "{} records, {failed} failed, missing {missing:?}; {worst}",
            records.len()
        ),
    }
}

/// Runs `cfg` and summarizes the records of the listed checks, which are
/// also returned.
fn run(cfg: &RunConfig, checks: &[&str]) -> (Outcome, Vec<CheckRecord>) {
    match run_suite(cfg) {
        Ok(recs) => {
            let recs: Vec<_> = recs
                .into_iter()
                .filter(|r| checks.contains(&r.check.as_str()))
                .collect();
            (summarize(&recs, checks), recs)
        }
        Err(e) => (
            Outcome {
                pass: false,
                detail: format!("error: {e}"),
            },
            Vec::new(),
        ),
    }
}

fn require(mut out: Outcome, ok: bool, what: String) -> Outcome {
    out.pass &= ok;
    out.detail.push_str(&format!("; {what}"));
    out
}

fn weyl_algebra() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Weyl);
    cfg.weyl.dims = (2..=256).collect();
    cfg.weyl.pairs = 50;
    cfg.weyl.checks = vec![WeylCheck::Commutation, WeylCheck::Fourier];
    let (out, recs) = run(
        &cfg,
        &["commutation", "fourier-unitarity", "fourier-parseval"],
    );
    let dims = recs.iter().filter(|r| r.check == "commutation").count();
    require(out, dims == 255, format!("{dims} dimensions"))
}

fn continuum_probe() -> Outcome {
    let dims = [16, 32, 64, 128, 256];
    match continuum_limit_probe(
        ContinuumProbe {
            sigma: 1.035,
            tau: 1.04,
        },
        &dims,
    ) {
        Ok(rows) => {
            let devs: Vec<f64> = rows.iter().map(|r| r.deviation).collect();
            let pass = devs.windows(2).all(|w| w[1] < w[0]);
            Outcome {
                pass,
                detail: format!(
                    "deviations {:?}",
                    devs.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>()
                ),
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn kravchuk_wigner() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Poly);
    cfg.poly.twice_j_max = 40;
    cfg.poly.betas = vec![PI / 3.0, PI / 2.0, 2.0 * PI / 3.0];
    cfg.poly.checks = vec![PolyCheck::WignerConsistency];
    let (out, recs) = run(&cfg, &["wigner-consistency"]);
    require(
        out,
        recs.len() == 40 * 3,
        format!("{} (j, β) pairs", recs.len()),
    )
}

fn oscillator_ladders() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Oscillator);
    cfg.oscillator.twice_js = (1..=40).collect();
    cfg.oscillator.betas = vec![PI / 3.0, PI / 2.0, 2.0 * PI / 3.0];
    cfg.oscillator.checks = vec![
        OscillatorCheck::Ladder,
        OscillatorCheck::Commutator,
        OscillatorCheck::Anticommutator,
    ];
    run(&cfg, &["ladder", "commutator", "anticommutator"]).0
}

fn hermite_convergence() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Oscillator);
    cfg.oscillator.converge_twice_js = vec![50, 100, 200, 400];
    cfg.oscillator.converge_levels = vec![0, 1, 2];
    cfg.oscillator.checks = vec![OscillatorCheck::Converge];
    let (out, recs) = run(&cfg, &["converge"]);
    require(out, recs.len() == 3, format!("{} levels", recs.len()))
}

fn meixner_system() -> Outcome {
    let mut poly = RunConfig::only(Suite::Poly);
    poly.poly.meixner = vec![(1.0, 0.3), (2.5, 0.5), (4.0, 0.7)];
    poly.poly.n_max = 10;
    poly.poly.x_max = 60;
    poly.poly.kravchuk.clear();
    poly.poly.checks = vec![PolyCheck::Diffeq];
    let (a, _) = run(&poly, &["meixner-diffeq"]);
    let mut hyd = RunConfig::only(Suite::Hydrogen);
    hyd.hydrogen.points = vec![(1.0, 0.3), (2.0, 0.5), (4.0, 0.7)];
    hyd.hydrogen.n_max = 10;
    hyd.hydrogen.checks = vec![HydrogenCheck::Diffeq, HydrogenCheck::Orthogonality];
    let (b, _) = run(&hyd, &["diffeq", "orthogonality"]);
    Outcome {
        pass: a.pass && b.pass,
        detail: format!("poly: {}; radial: {}", a.detail, b.detail),
    }
}

fn hydrogen_ladders() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Hydrogen);
    cfg.hydrogen.checks = vec![HydrogenCheck::Ladder];
    let checks = [
        "ladder-up-cosine",
        "ladder-down-cosine",
        "ladder-down-prefactor",
        "ladder-up-prefactor",
    ];
    let (out, recs) = run(&cfg, &checks);
    let logged = recs
        .iter()
        .filter(|r| r.check == "ladder-up-prefactor" && r.params.contains_key("printed"))
        .count();
    require(
        out,
        logged > 0,
        format!("printed L+ prefactor logged on {logged} records"),
    )
}

fn lattice_dirac() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Dirac);
    cfg.dirac.trials = 20;
    cfg.dirac.checks = vec![
        DiracCheck::Kernel,
        DiracCheck::Planewave,
        DiracCheck::Dispersion,
    ];
    let bound = cfg.dirac.max_mode as f64
        / cfg.dirac.extents[1..].iter().copied().min().unwrap_or(1) as f64;
    let (out, recs) = run(&cfg, &["kernel", "planewave", "dispersion"]);
    let waves = recs.iter().filter(|r| r.check == "planewave").count();
    require(
        out,
        bound <= 0.2 + 1e-12 && waves == 20,
        format!("{waves} plane waves, |k_i ε| <= {bound}"),
    )
}

fn klein_gordon() -> Outcome {
    let mut cfg = RunConfig::only(Suite::Dirac);
    cfg.dirac.factorization_extents = (2..=6).map(|l| [l; 4]).collect();
    cfg.dirac.fields_per_lattice = 10;
    cfg.dirac.checks = vec![DiracCheck::KgFactorization];
    let (out, recs) = run(&cfg, &["kg-factorization"]);
    require(out, recs.len() == 50, format!("{} fields", recs.len()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut bytes = Vec::new();
    let mut codes = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("report{i}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_latticeqm"))
            .args(["all", "--seed", "12345", "--out"])
            .arg(&path)
            .status();
        codes.push(status.ok().and_then(|s| s.code()));
        bytes.push(std::fs::read(&path).unwrap_or_default());
    }
    let identical = !bytes[0].is_empty() && bytes[0] == bytes[1];
    Outcome {
        pass: identical && codes.iter().all(|c| *c == Some(0)),
        detail: format!(
            "exit codes {codes:?}, {} bytes, identical: {identical}",
            bytes[0].len()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("weyl algebra", weyl_algebra),
        ("continuum probe", continuum_probe),
        ("kravchuk-wigner identity", kravchuk_wigner),
        ("oscillator ladders", oscillator_ladders),
        ("hermite convergence", hermite_convergence),
        ("meixner system", meixner_system),
        ("hydrogen ladders", hydrogen_ladders),
        ("lattice dirac", lattice_dirac),
        ("klein-gordon factorization", klein_gordon),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {name:<27} {verdict}  ({:.1}s) {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            out.detail
        );
        failed += usize::from(!out.pass);
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
