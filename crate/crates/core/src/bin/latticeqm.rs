use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latticeqm::poly::{KravchukFamily, MeixnerFamily};
use latticeqm::report::{
    self, all_pass, render, run_suite, DiracCheck, Format, HydrogenCheck, OscillatorCheck,
    PolyCheck, RunConfig, Suite, WeylCheck,
};
use latticeqm::weyl::ContinuumProbe;
use latticeqm::Error;

/// Residual checks for finite and lattice quantum systems.
#[derive(Parser)]
#[command(name = "latticeqm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output file; defaults to $LATTICEQM_OUT_DIR/<suite>.<ext>, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, default_value_t = report::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Clock/shift algebra, finite Fourier transform, continuum probe.
    Weyl {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, requires = "t", allow_negative_numbers = true)]
        s: Option<i64>,
        #[arg(long, requires = "s", allow_negative_numbers = true)]
        t: Option<i64>,
        /// Continuum-probe targets.
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, value_enum)]
        check: Vec<WeylCheck>,
        #[command(flatten)]
        common: Common,
    },
    /// Kravchuk, Wigner d and Meixner functions.
    Poly {
        #[arg(long, value_enum, default_value_t = Family::Kravchuk)]
        family: Family,
        /// Comma-separated `key=value`: kravchuk `n,p`; meixner `gamma,mu,n_max,x_max`.
        #[arg(long)]
        params: Option<String>,
        /// Writes `n,x,value` triples of the selected family here.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum)]
        check: Vec<PolyCheck>,
        #[command(flatten)]
        common: Common,
    },
    /// Discrete harmonic oscillator on Wigner d-functions.
    Oscillator {
        /// Half-integer `j`, e.g. 2.5.
        #[arg(long)]
        j: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, value_enum)]
        check: Vec<OscillatorCheck>,
        #[command(flatten)]
        common: Common,
    },
    /// Meixner radial functions and their ladder operators.
    Hydrogen {
        #[arg(long, requires = "mu")]
        gamma: Option<f64>,
        #[arg(long, requires = "gamma")]
        mu: Option<f64>,
        #[arg(long, value_enum)]
        check: Vec<HydrogenCheck>,
        #[command(flatten)]
        common: Common,
    },
    /// Lattice Dirac operator, tan-dispersion and Klein-Gordon factorization.
    Dirac {
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        mass: Option<f64>,
        /// `L0,L1,L2,L3`.
        #[arg(long, value_delimiter = ',')]
        extents: Option<Vec<usize>>,
        /// `k0,k1,k2,k3` with `|k ε| < 1/2`. Plane waves need `k_i = n/(L_i ε)`;
        /// `k0` is ignored where the dispersion relation fixes it.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        k: Option<Vec<f64>>,
        #[arg(long, value_enum)]
        check: Vec<DiracCheck>,
        #[command(flatten)]
        common: Common,
    },
    /// Every suite at its default grid.
    All {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kravchuk,
    Meixner,
}

fn parse_params(text: Option<&str>) -> latticeqm::Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for item in text
        .unwrap_or("")
        .split(',')
        .filter(|s| !s.trim().is_empty())
    {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("expected key=value, got '{item}'")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("'{v}' is not a number")))?;
        out.insert(k.trim().to_owned(), v);
    }
    Ok(out)
}

fn take(map: &mut BTreeMap<String, f64>, key: &str, default: f64) -> f64 {
    map.remove(key).unwrap_or(default)
}

fn reject_leftovers(map: &BTreeMap<String, f64>) -> latticeqm::Result<()> {
    match map.keys().next() {
        Some(k) => Err(Error::Usage(format!("unknown parameter '{k}'"))),
        None => Ok(()),
    }
}

fn write_output(
    text: &str,
    out: Option<&Path>,
    name: &str,
    format: Format,
) -> latticeqm::Result<()> {
    let path = out.map(Path::to_path_buf).or_else(|| {
        std::env::var_os(report::OUT_DIR_ENV)
            .map(|d| PathBuf::from(d).join(format!("{name}.{}", format.extension())))
    });
    match path {
        Some(p) => fs::write(&p, text).map_err(|source| Error::Io { path: p, source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn write_poly_table(
    family: Family,
    params: &BTreeMap<String, f64>,
    path: &Path,
) -> latticeqm::Result<()> {
    let mut text = String::from("n,x,value\n");
    match family {
        Family::Kravchuk => {
            let n = params["n"] as usize;
            let table = KravchukFamily::new(n, params["p"])?.table();
            for (deg, row) in table.values.iter().enumerate() {
                for (x, v) in row.iter().enumerate() {
                    text.push_str(&format!("{deg},{x},{}\n", report::format_float(*v)));
                }
            }
        }
        Family::Meixner => {
            let table = MeixnerFamily::new(params["gamma"], params["mu"])?
                .table(params["n_max"] as usize, params["x_max"] as usize + 1);
            for (deg, row) in table.values.iter().enumerate() {
                for (x, v) in row.iter().enumerate() {
                    text.push_str(&format!("{deg},{x},{}\n", report::format_float(*v)));
                }
            }
        }
    }
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

fn configure(command: Command) -> latticeqm::Result<(RunConfig, Common, &'static str)> {
    Ok(match command {
        Command::Weyl {
            dim,
            s,
            t,
            sigma,
            tau,
            check,
            common,
        } => {
            let mut cfg = RunConfig::only(Suite::Weyl);
            if let Some(n) = dim {
                cfg.weyl.dims = vec![n];
            }
            if let (Some(s), Some(t)) = (s, t) {
                cfg.weyl.pair = Some((s, t));
            }
            if sigma.is_some() || tau.is_some() {
                let d = cfg.weyl.probe;
                cfg.weyl.probe = ContinuumProbe {
                    sigma: sigma.unwrap_or(d.sigma),
                    tau: tau.unwrap_or(d.tau),
                };
            }
            if !check.is_empty() {
                cfg.weyl.checks = check;
            }
            (cfg, common, "weyl")
        }
        Command::Poly {
            family,
            params,
            table,
            check,
            common,
        } => {
            let mut cfg = RunConfig::only(Suite::Poly);
            let mut p = parse_params(params.as_deref())?;
            let given = !p.is_empty();
            let resolved: BTreeMap<String, f64> = match family {
                Family::Kravchuk => {
                    let n = take(&mut p, "n", 20.0);
                    let prob = take(&mut p, "p", 0.5);
                    reject_leftovers(&p)?;
                    if given {
                        cfg.poly.kravchuk = vec![(n as usize, prob)];
                        cfg.poly.twice_j_max = n as i64;
                        cfg.poly.betas = vec![2.0 * prob.sqrt().asin()];
                        cfg.poly.meixner.clear();
                    }
                    [("n", n), ("p", prob)]
                        .map(|(k, v)| (k.to_owned(), v))
                        .into()
                }
                Family::Meixner => {
                    let g = take(&mut p, "gamma", 2.0);
                    let mu = take(&mut p, "mu", 0.5);
                    let n_max = take(&mut p, "n_max", 10.0);
                    let x_max = take(&mut p, "x_max", 60.0);
                    reject_leftovers(&p)?;
                    if given {
                        cfg.poly.meixner = vec![(g, mu)];
                        cfg.poly.n_max = n_max as usize;
                        cfg.poly.x_max = x_max as usize;
                        cfg.poly.kravchuk.clear();
                        cfg.poly
                            .checks
                            .retain(|c| *c != PolyCheck::WignerConsistency);
                    }
                    [("gamma", g), ("mu", mu), ("n_max", n_max), ("x_max", x_max)]
                        .map(|(k, v)| (k.to_owned(), v))
                        .into()
                }
            };
            if let Some(path) = &table {
                write_poly_table(family, &resolved, path)?;
                if check.is_empty() {
                    cfg.suites.clear();
                }
            }
            if !check.is_empty() {
                cfg.poly.checks = check;
            }
            (cfg, common, "poly")
        }
        Command::Oscillator {
            j,
            beta,
            check,
            common,
        } => {
            let mut cfg = RunConfig::only(Suite::Oscillator);
            if let Some(j) = j {
                cfg.oscillator.twice_js = vec![latticeqm::poly::HalfInt::from_f64(j)?.twice()];
            }
            if let Some(b) = beta {
                cfg.oscillator.betas = vec![b];
            }
            if !check.is_empty() {
                cfg.oscillator.checks = check;
            }
            (cfg, common, "oscillator")
        }
        Command::Hydrogen {
            gamma,
            mu,
            check,
            common,
        } => {
            let mut cfg = RunConfig::only(Suite::Hydrogen);
            if let (Some(g), Some(m)) = (gamma, mu) {
                cfg.hydrogen.points = vec![(g, m)];
            }
            if !check.is_empty() {
                cfg.hydrogen.checks = check;
            }
            (cfg, common, "hydrogen")
        }
        Command::Dirac {
            eps,
            mass,
            extents,
            k,
            check,
            common,
        } => {
            let mut cfg = RunConfig::only(Suite::Dirac);
            if let Some(e) = eps {
                cfg.dirac.epsilon = e;
            }
            if let Some(m) = mass {
                cfg.dirac.mass = m;
            }
            if let Some(ext) = extents {
                let ext: [usize; 4] = ext
                    .try_into()
                    .map_err(|_| Error::Usage("--extents takes four values".into()))?;
                cfg.dirac.extents = ext;
                cfg.dirac.factorization_extents = vec![ext];
            }
            if let Some(k) = k {
                cfg.dirac.k = Some(
                    k.try_into()
                        .map_err(|_| Error::Usage("--k takes four values".into()))?,
                );
            }
            if !check.is_empty() {
                cfg.dirac.checks = check;
            }
            (cfg, common, "dirac")
        }
        Command::All { common } => (RunConfig::default(), common, "report"),
    })
}

fn run(cli: Cli) -> latticeqm::Result<bool> {
    let (mut cfg, common, name) = configure(cli.command)?;
    if cfg.suites.is_empty() {
        return Ok(true);
    }
    cfg.seed = common.seed;
    cfg.format = common.format;
    cfg.out = common.out.clone();
    let records = run_suite(&cfg)?;
    write_output(
        &render(&records, cfg.format),
        cfg.out.as_deref(),
        name,
        cfg.format,
    )?;
    let failed = records.iter().filter(|r| !r.pass).count();
    eprintln!(
        "{} checks, {failed} failed (seed {})",
        records.len(),
        cfg.seed
    );
    Ok(all_pass(&records))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("latticeqm: {e}");
            ExitCode::from(2)
        }
    }
}
