//! Command-line driver: spectrum tables and verification suites.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 resource limit,
//! 4 a verification check failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bondboson::{
    dirac_correspondence_report, dirac_scale_from_zero_momentum, reconcile_ssh_block, ssh_correspondence_report,
    SpectrumTable, DEFAULT_TOLERANCE, DIRAC_CLOSED_FORM_SCALE,
};
use crate::error::Error;
use crate::fock::{
    bond_grid, boson_commutator_report, hole_table, square_commutator_report, verify_dirac_bond_commutators,
    verify_ssh_bond_commutators, DiracPair, FockSpace, Sublattice, MAX_MODES,
};
use crate::interactions::{interaction_report, CouplingMatrix};
use crate::lattice::{ChainSpec, SquareSpec};
use crate::report::{float_value, render_json, spectrum_json, write_spectrum_csv, Check, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

/// Tolerance for exact operator identities when `--tolerance` is not given.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
/// Tolerance for pair reconstructions from bonds.
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-13;
/// Number of seeded random blocks in the closed-form check.
pub const RANDOM_BLOCKS: usize = 100;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error(transparent)]
    Library(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooManyModes { .. } => CliError::Resource(e.to_string()),
            Error::InvalidLattice(_) | Error::OffGrid { .. } | Error::InvalidBond(_) | Error::InvalidArgument(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Library(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Csv(_) | CliError::Library(_) => EXIT_IO,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ssh,
    Dirac2d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Commutators,
    Correspondence,
    Interactions,
    Identities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "bondboson",
    version,
    about = "Bond-boson spectra and exact verification for lattice fermions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boson block spectra with closed-form and fermion-pair columns.
    Spectrum {
        #[arg(value_enum)]
        model: ModelArg,
    },
    /// Run a verification suite and report per-check residuals.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
    },
}

#[derive(Debug, Default, clap::Args)]
struct Opts {
    /// Chain length (even).
    #[arg(long, global = true)]
    sites: Option<usize>,
    /// Lattice width (dirac2d).
    #[arg(long, global = true)]
    lx: Option<usize>,
    /// Lattice height (dirac2d).
    #[arg(long, global = true)]
    ly: Option<usize>,
    /// Uniform hopping amplitude [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    t0: Option<f64>,
    /// Dimerization strength: bonds alternate as t0 ± 2 alpha_u [default: 0]
    #[arg(long = "alpha-u", global = true, allow_negative_numbers = true)]
    alpha_u: Option<f64>,
    /// On-site mass of the lattice Dirac Hamiltonian.
    #[arg(long, alias = "delta", global = true, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Pass threshold for spectral comparisons [default: 1e-10]
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Seed for random holes, couplings and sample blocks [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of holes in the filled state (commutator suite).
    #[arg(long, global = true)]
    holes: Option<usize>,
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// File of `key = value` lines; flags given on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

/// Fully resolved run parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelArg,
    pub sites: Option<usize>,
    pub lx: Option<usize>,
    pub ly: Option<usize>,
    pub t0: f64,
    pub alpha_u: f64,
    pub mass: f64,
    pub tolerance: Option<f64>,
    pub seed: u64,
    pub holes: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn parse_config_file(path: &PathBuf) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("{}:{}: expected key = value", path.display(), i + 1)))?;
        out.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    Ok(out)
}

fn from_file<T: std::str::FromStr>(file: &BTreeMap<String, String>, key: &str) -> Result<Option<T>, CliError> {
    file.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| CliError::Usage(format!("config value for `{key}` is invalid: {v}")))
        })
        .transpose()
}

impl RunConfig {
    fn resolve(opts: Opts, model: Option<ModelArg>) -> Result<Self, CliError> {
        let file = match &opts.config {
            Some(p) => parse_config_file(p)?,
            None => BTreeMap::new(),
        };
        const KNOWN: [&str; 12] = [
            "model",
            "sites",
            "lx",
            "ly",
            "t0",
            "alpha_u",
            "mass",
            "tolerance",
            "seed",
            "holes",
            "format",
            "output",
        ];
        if let Some(k) = file.keys().find(|k| !KNOWN.contains(&k.as_str())) {
            return Err(CliError::Usage(format!("unknown config key `{k}`")));
        }
        let file_model = file
            .get("model")
            .map(|v| ModelArg::from_str(v, true).map_err(|_| CliError::Usage(format!("unknown model `{v}`"))))
            .transpose()?;
        let file_format = file
            .get("format")
            .map(|v| Format::from_str(v, true).map_err(|_| CliError::Usage(format!("unknown format `{v}`"))))
            .transpose()?;
        let cfg = RunConfig {
            model: model.or(file_model).unwrap_or(ModelArg::Ssh),
            sites: opts.sites.or(from_file(&file, "sites")?),
            lx: opts.lx.or(from_file(&file, "lx")?),
            ly: opts.ly.or(from_file(&file, "ly")?),
            t0: opts.t0.or(from_file(&file, "t0")?).unwrap_or(1.0),
            alpha_u: opts.alpha_u.or(from_file(&file, "alpha_u")?).unwrap_or(0.0),
            mass: opts.mass.or(from_file(&file, "mass")?).unwrap_or(0.0),
            tolerance: opts.tolerance.or(from_file(&file, "tolerance")?),
            seed: opts.seed.or(from_file(&file, "seed")?).unwrap_or(0),
            holes: opts.holes.or(from_file(&file, "holes")?).unwrap_or(0),
            format: opts.format.or(file_format).unwrap_or_default(),
            output: opts.output.or(from_file(&file, "output")?),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if let Some(t) = self.tolerance {
            if t <= 0.0 || !t.is_finite() {
                return Err(CliError::Usage(format!("tolerance must be positive, got {t}")));
            }
        }
        match self.model {
            ModelArg::Ssh => {
                if self.sites.is_none() {
                    return Err(CliError::Usage("the ssh model needs --sites".into()));
                }
                if self.lx.is_some() || self.ly.is_some() {
                    return Err(CliError::Usage("--lx/--ly do not apply to the ssh model".into()));
                }
            }
            ModelArg::Dirac2d => {
                if self.lx.is_none() || self.ly.is_none() {
                    return Err(CliError::Usage("the dirac2d model needs --lx and --ly".into()));
                }
                if self.sites.is_some() {
                    return Err(CliError::Usage("--sites does not apply to the dirac2d model".into()));
                }
            }
        }
        Ok(())
    }

    fn chain(&self) -> Result<ChainSpec, CliError> {
        Ok(ChainSpec::new(self.sites.expect("validated"), self.t0, self.alpha_u)?)
    }

    fn square(&self) -> Result<SquareSpec, CliError> {
        Ok(SquareSpec::new(
            self.lx.expect("validated"),
            self.ly.expect("validated"),
            self.mass,
        )?)
    }

    fn tolerance_or(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }

    /// Parameters relevant to the chosen model, for the report header.
    pub fn to_json(&self, command: &str) -> Value {
        let mut v = json!({ "command": command });
        let m = v.as_object_mut().expect("object");
        match self.model {
            ModelArg::Ssh => {
                m.insert("model".into(), json!("ssh"));
                m.insert("sites".into(), json!(self.sites));
                m.insert("t0".into(), float_value(self.t0));
                m.insert("alpha_u".into(), float_value(self.alpha_u));
            }
            ModelArg::Dirac2d => {
                m.insert("model".into(), json!("dirac2d"));
                m.insert("lx".into(), json!(self.lx));
                m.insert("ly".into(), json!(self.ly));
                m.insert("mass".into(), float_value(self.mass));
            }
        }
        if let Some(t) = self.tolerance {
            m.insert("tolerance".into(), float_value(t));
        }
        m.insert("seed".into(), json!(self.seed));
        m.insert("holes".into(), json!(self.holes));
        v
    }
}

fn emit(
    cfg: &RunConfig,
    json: Value,
    csv: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let mut buf: Vec<u8> = Vec::new();
    match cfg.format {
        Format::Json => buf.extend_from_slice(render_json(&json).as_bytes()),
        Format::Csv => csv(&mut buf)?,
    }
    match &cfg.output {
        Some(path) => fs::write(path, buf)?,
        None => io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

fn spectrum_table(cfg: &RunConfig) -> Result<SpectrumTable, CliError> {
    let tol = cfg.tolerance_or(DEFAULT_TOLERANCE);
    Ok(match cfg.model {
        ModelArg::Ssh => ssh_correspondence_report(&cfg.chain()?, tol)?,
        ModelArg::Dirac2d => dirac_correspondence_report(&cfg.square()?, tol)?,
    })
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<i32, CliError> {
    let table = spectrum_table(cfg)?;
    emit(cfg, spectrum_json(cfg.to_json("spectrum"), &table), |w| {
        write_spectrum_csv(w, &table).map_err(Into::into)
    })?;
    Ok(EXIT_OK)
}

fn check_modes(n_modes: usize) -> Result<(), CliError> {
    if n_modes > MAX_MODES {
        return Err(CliError::Resource(format!(
            "exact Fock checks need {n_modes} modes, the limit is {MAX_MODES}"
        )));
    }
    Ok(())
}

fn correspondence_suite(cfg: &RunConfig) -> Result<VerifyReport, CliError> {
    let table = spectrum_table(cfg)?;
    let mut checks = vec![
        Check::at_most(
            "block spectra vs closed form and fermion pairs",
            table.max_discrepancy,
            table.tolerance,
        ),
        Check::holds(
            "fermion energies lie on the exact single-particle spectrum",
            table.fermion_energies_on_spectrum,
        ),
        Check::at_most(
            "single-particle band vs exact diagonalization",
            table.band_discrepancy,
            1e-9,
        ),
    ];
    let mut details = spectrum_json(Value::Null, &table);
    let d = details.as_object_mut().expect("object");
    d.remove("config");
    match cfg.model {
        ModelArg::Ssh => {
            let spec = cfg.chain()?;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut samples: Vec<(f64, f64, f64, f64)> = spec
                .cell_momenta()
                .radians()
                .iter()
                .flat_map(|&[q]| spec.cell_momenta().radians().into_iter().map(move |[k]| (q, k)))
                .map(|(q, k)| (q, k, spec.t0, spec.alpha_u))
                .collect();
            samples.extend((0..RANDOM_BLOCKS).map(|_| {
                (
                    rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
                    rng.gen_range(-2.0 * std::f64::consts::PI..2.0 * std::f64::consts::PI),
                    rng.gen_range(0.1..3.0),
                    rng.gen_range(-1.0..1.0),
                )
            }));
            let rec = reconcile_ssh_block(&samples, table.tolerance)?;
            checks.push(Check::holds(
                "block entry convention reconciles with the closed form",
                rec.is_some(),
            ));
            d.insert(
                "convention".into(),
                match rec {
                    Some(r) => json!({
                        "adopted": r.convention.to_string(),
                        "tried": r.tried,
                        "samples": samples.len(),
                        "max_discrepancy": float_value(r.max_discrepancy),
                    }),
                    None => json!({ "adopted": null, "samples": samples.len() }),
                },
            );
        }
        ModelArg::Dirac2d => {
            let probe = if cfg.mass != 0.0 { cfg.mass } else { 1.0 };
            let scale = dirac_scale_from_zero_momentum(probe)?;
            checks.push(Check::at_most(
                "zero-momentum oracle reproduces the closed-form scale",
                (scale - DIRAC_CLOSED_FORM_SCALE).abs(),
                table.tolerance,
            ));
            d.insert(
                "scale".into(),
                json!({ "oracle": float_value(scale), "adopted": float_value(DIRAC_CLOSED_FORM_SCALE) }),
            );
        }
    }
    Ok(VerifyReport {
        suite: "correspondence".into(),
        checks,
        details,
    })
}

fn commutators_suite(cfg: &RunConfig) -> Result<VerifyReport, CliError> {
    let tol = cfg.tolerance_or(IDENTITY_TOLERANCE);
    let mut checks = Vec::new();
    let mut lines = Vec::new();
    let mut excluded = Vec::new();
    let details;
    match cfg.model {
        ModelArg::Ssh => {
            let spec = cfg.chain()?;
            check_modes(spec.n_sites)?;
            let space = Arc::new(FockSpace::chain(spec.n_sites, false)?);
            let grid = bond_grid(&space, Sublattice::All)?.radians();
            let n_cells = spec.n_cells();
            let mut worst_match: f64 = 0.0;
            let mut worst_other: f64 = 0.0;
            for l in 1..=n_cells {
                for lp in 1..=n_cells {
                    for &[k] in &grid {
                        for &[kp] in &grid {
                            let r = boson_commutator_report(&space, l, lp, k, kp, cfg.holes, cfg.seed)?;
                            let line = json!({
                                "l": l, "l_prime": lp,
                                "k": float_value(k), "k_prime": float_value(kp),
                                "expectation": [float_value(r.expectation.re), float_value(r.expectation.im)],
                                "normalized": [float_value(r.normalized_expectation.re), float_value(r.normalized_expectation.im)],
                                "target": float_value(r.target),
                                "deviation": float_value(r.deviation),
                            });
                            // The half-ring bond runs into itself and is excluded from the checks.
                            if l == n_cells || lp == n_cells {
                                excluded.push(line);
                                continue;
                            }
                            let matching = r.target != 0.0;
                            if matching {
                                let drop = 2.0 * cfg.holes as f64;
                                worst_match = worst_match.max((r.deviation - drop).abs());
                            } else if cfg.holes == 0 || l != lp {
                                worst_other = worst_other.max(r.deviation);
                            }
                            lines.push(line);
                        }
                    }
                }
            }
            checks.push(Check::at_most(
                format!("matching bonds equal {} - 2*holes", spec.n_sites),
                worst_match,
                tol,
            ));
            checks.push(Check::at_most("non-matching bonds vanish", worst_other, tol));
            let table: Vec<Value> = hole_table(&space, cfg.holes.max(3), cfg.seed)?
                .into_iter()
                .map(|h| {
                    json!({
                        "n_holes": h.n_holes,
                        "holes": h.holes,
                        "target": float_value(h.target),
                        "min_expectation": float_value(h.min_expectation),
                        "max_expectation": float_value(h.max_expectation),
                        "max_deviation": float_value(h.max_deviation),
                    })
                })
                .collect();
            details = json!({ "lines": lines, "excluded_half_ring_bond": excluded, "hole_table": table });
        }
        ModelArg::Dirac2d => {
            let spec = cfg.square()?;
            check_modes(2 * spec.n_sites())?;
            let space = Arc::new(FockSpace::square(spec.lx, spec.ly, true)?);
            let grid = spec.momenta().radians();
            let (lx, ly) = (spec.lx as isize, spec.ly as isize);
            let offsets: Vec<(isize, isize)> = (0..lx).flat_map(|a| (0..ly).map(move |b| (a, b))).collect();
            let self_reverse = |(a, b): (isize, isize)| (2 * a).rem_euclid(lx) == 0 && (2 * b).rem_euclid(ly) == 0;
            let mut worst: f64 = 0.0;
            for pair in [DiracPair::CC, DiracPair::CB] {
                for &o in &offsets {
                    for &k in &grid {
                        let r = square_commutator_report(&space, o, o, k, k, pair, cfg.holes, cfg.seed)?;
                        let line = json!({
                            "pair": format!("{pair:?}"),
                            "offset": [o.0, o.1],
                            "k": [float_value(k[0]), float_value(k[1])],
                            "expectation": [float_value(r.expectation.re), float_value(r.expectation.im)],
                            "target": float_value(r.target),
                            "deviation": float_value(r.deviation),
                        });
                        if pair == DiracPair::CC && self_reverse(o) {
                            excluded.push(line);
                            continue;
                        }
                        worst = worst.max(r.deviation);
                        lines.push(line);
                    }
                }
            }
            if cfg.holes == 0 {
                checks.push(Check::at_most(
                    format!("filled-state expectation equals {}", spec.n_sites()),
                    worst,
                    tol,
                ));
            }
            details = json!({ "lines": lines, "excluded_self_reverse_bonds": excluded });
        }
    }
    Ok(VerifyReport {
        suite: "commutators".into(),
        checks,
        details,
    })
}

fn identities_suite(cfg: &RunConfig) -> Result<VerifyReport, CliError> {
    let tol = cfg.tolerance_or(IDENTITY_TOLERANCE);
    let mut checks = Vec::new();
    let mut details = serde_json::Map::new();
    let mut record = |name: &str, r: crate::fock::IdentityReport, checks: &mut Vec<Check>| {
        checks.push(Check::at_most(format!("{name} residual"), r.max_residual, tol));
        details.insert(
            name.to_string(),
            json!({
                "operators": r.checks.len(),
                "adopted_sign": float_value(r.adopted_sign),
                "max_residual": float_value(r.max_residual),
                "literal_form_residual": float_value(r.max_literal_residual),
            }),
        );
    };
    match cfg.model {
        ModelArg::Ssh => {
            let spec = cfg.chain()?;
            check_modes(spec.n_sites)?;
            record("spinless chain", verify_ssh_bond_commutators(&spec)?, &mut checks);
            if 2 * spec.n_sites <= MAX_MODES {
                record(
                    "spinful chain",
                    verify_ssh_bond_commutators(&spec.spinful(true))?,
                    &mut checks,
                );
            }
        }
        ModelArg::Dirac2d => {
            let spec = cfg.square()?;
            check_modes(2 * spec.n_sites())?;
            record("dirac lattice", verify_dirac_bond_commutators(&spec)?, &mut checks);
        }
    }
    Ok(VerifyReport {
        suite: "identities".into(),
        checks,
        details: Value::Object(details),
    })
}

fn interactions_suite(cfg: &RunConfig) -> Result<VerifyReport, CliError> {
    if cfg.model != ModelArg::Ssh {
        return Err(CliError::Usage(
            "the interactions suite runs on chains (--model ssh --sites N)".into(),
        ));
    }
    let n = cfg.sites.expect("validated");
    check_modes(n)?;
    let space = Arc::new(FockSpace::chain(n, false)?);
    let alpha = CouplingMatrix::random_off_diagonal(n, 1.0, cfg.seed);
    let r = interaction_report(&space, &alpha)?;
    let tol = cfg.tolerance_or(IDENTITY_TOLERANCE);
    let checks = vec![
        Check::at_most("density form vs pair form", r.density_vs_pair, tol),
        Check::at_most(
            "pair bilinears rebuilt from bonds",
            r.pair_reconstruction,
            cfg.tolerance_or(RECONSTRUCTION_TOLERANCE),
        ),
        Check::at_most(
            "interaction assembled from bonds",
            r.assembled,
            tol * r.hc_norm.max(1.0),
        ),
    ];
    let details = json!({ "hc_norm": float_value(r.hc_norm) });
    Ok(VerifyReport {
        suite: "interactions".into(),
        checks,
        details,
    })
}

pub fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<i32, CliError> {
    let report = match suite {
        Suite::Correspondence => correspondence_suite(cfg)?,
        Suite::Commutators => commutators_suite(cfg)?,
        Suite::Identities => identities_suite(cfg)?,
        Suite::Interactions => interactions_suite(cfg)?,
    };
    let mut config = cfg.to_json("verify");
    config["suite"] = json!(format!("{suite:?}").to_lowercase());
    emit(cfg, report.to_json(config), |w| report.write_csv(w).map_err(Into::into))?;
    Ok(if report.passes() { EXIT_OK } else { EXIT_FAILED })
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("BONDBOSON_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("BONDBOSON_THREADS must be an integer >= 1, got `{v}`")))?;
    // A second call in the same process finds the pool already built; that is fine.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Spectrum { model } => RunConfig::resolve(cli.opts, Some(model)).and_then(|c| cmd_spectrum(&c)),
        Command::Verify { suite, model } => RunConfig::resolve(cli.opts, model).and_then(|c| cmd_verify(&c, suite)),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bondboson: {e}");
            e.exit_code()
        }
    }
}
