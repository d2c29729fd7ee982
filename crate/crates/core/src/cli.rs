//! Command-line front end.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::distr::Distribution;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{RunConfig, SCHEMA_VERSION};
use crate::diagnostics::{
    irregularity_growth, irregularity_growth_empirical, levy_tail_mass, tail_mass_monte_carlo, CharFnReport,
    JumpGrowthReport,
};
use crate::error::{Error, Result};
use crate::mc::{par_chunked, par_paths};
use crate::noise::{
    generate_subordinated_path, generate_white_noise_jumps, AxisBox, CharFnAccumulator, Representation,
};
use crate::rng::{streams, RngState};
use crate::sampling::{sample_rotational_stable, sample_uniform_sphere, StableSubordinator, SymmetricStable};
use crate::solver::simulate_mild_solution;
use crate::special::{c_alpha, d_alpha, sphere_moment, sphere_total_mass, StableModel};
use crate::spectral::{existence_integral, ExistenceReport, SemigroupSpec, Verdict};
use crate::tolerances::DEFAULT_TRUNCATION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INFINITE: i32 = 10;
pub const EXIT_INCONCLUSIVE: i32 = 11;
pub const EXIT_NOT_FINITE: i32 = 12;
pub const EXIT_BAND_FAILURE: i32 = 20;

#[derive(Debug, Parser)]
#[command(
    name = "stable-cauchy",
    version,
    about = "Stochastic Cauchy problem with canonical alpha-stable cylindrical noise"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "STABLE_CAUCHY_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print c_alpha, r_n, d_alpha and sphere moments as JSON.
    Constants {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n: u64,
    },
    /// Draw samples from one of the base laws as CSV.
    Sample(SampleArgs),
    /// Simulate one noise path (subordinated) or jump set (white noise) as CSV.
    SimulateNoise {
        #[command(flatten)]
        run: RunArgs,
        /// Output file (default: standard output).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the mild solution exists.
    CheckExistence {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Simulate Galerkin trajectories of the mild solution.
    Simulate {
        #[command(flatten)]
        run: RunArgs,
        /// Simulate even if the existence check does not return Finite.
        #[arg(long)]
        force: bool,
    },
    /// Run a statistical diagnostic suite.
    Diagnose {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        run: RunArgs,
        /// Monte Carlo sample size.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Sas,
    Subordinator,
    Sphere,
    Rotstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Charfn,
    Tails,
    Irregularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Powerlaw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReprArg {
    Subordinated,
    WhiteNoise,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Stability index in (0, 2).
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    /// Scale of the SaS law.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// Time step of the subordinator increment, or time of the rotational law.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    /// Dimension of the sphere and rotational laws.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Config file plus flag overrides.
#[derive(Debug, Args, Default)]
pub struct RunArgs {
    /// TOML run configuration; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Stability index in (0, 2).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Eigenvalue model; `powerlaw` with `--dim d` gives `lambda_k = k^{2/d}`.
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Spatial dimension d of the power-law model.
    #[arg(long)]
    pub dim: Option<u32>,
    /// Number of eigenvalues K kept by the existence check.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Time horizon.
    #[arg(long = "T", visible_alias = "horizon")]
    pub horizon: Option<f64>,
    /// Time step; must divide the horizon.
    #[arg(long)]
    pub dt: Option<f64>,
    /// Galerkin coordinates.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of independent trajectories.
    #[arg(long)]
    pub paths: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Lower cutoff of the existence integral.
    #[arg(long)]
    pub s_min: Option<f64>,
    /// Jump-size truncation of the white-noise representation.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Dimension of the white-noise domain box.
    #[arg(long)]
    pub space_dim: Option<usize>,
    #[arg(long, value_enum)]
    pub representation: Option<ReprArg>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

impl RunArgs {
    /// Loads the config file (or defaults) and applies the flags on top.
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path).map_err(|e| match e {
                Error::Io(io) => Error::Config(format!("{}: {io}", path.display())),
                other => other,
            })?,
            None => RunConfig::default(),
        };
        if let Some(a) = self.alpha {
            cfg.alpha = a;
        }
        if self.model.is_some() || self.dim.is_some() || self.truncation.is_some() {
            let truncation = self.truncation.unwrap_or(cfg.semigroup.truncation());
            cfg.semigroup = match (self.model, self.dim) {
                (_, Some(d)) => SemigroupSpec::heat(d, truncation),
                (Some(ModelKind::Powerlaw), None) => SemigroupSpec::heat(2, truncation),
                (None, None) => SemigroupSpec::new(cfg.semigroup.model().clone(), truncation),
            }
            .map_err(|e| Error::Config(format!("semigroup flags: {e}")))?;
        }
        if let Some(t) = self.horizon {
            cfg.horizon = t;
        }
        if let Some(dt) = self.dt {
            cfg.dt = dt;
        } else if self.horizon.is_some() && self.config.is_none() {
            cfg.dt = cfg.dt.min(cfg.horizon);
        }
        if let Some(n) = self.n {
            cfg.galerkin_n = n;
        }
        if let Some(p) = self.paths {
            cfg.paths = p;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(s) = self.s_min {
            cfg.s_min = s;
        }
        if let Some(e) = self.epsilon {
            cfg.epsilon = e;
        }
        if let Some(d) = self.space_dim {
            cfg.space_dim = d;
        }
        if let Some(r) = self.representation {
            cfg.representation = match r {
                ReprArg::Subordinated => Representation::Subordinated,
                ReprArg::WhiteNoise => Representation::WhiteNoise,
            };
        }
        if let Some(o) = &self.output_dir {
            cfg.output_dir = o.clone();
        }
        cfg.validate()
            .map_err(|e| Error::Config(format!("invalid value for {}: {}", e.field, e.message)))?;
        Ok(cfg)
    }
}

/// Maps a library error to a process exit code.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::Domain(_) | Error::Dimension(_) => EXIT_CONFIG,
        _ => EXIT_FAILURE,
    }
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> Result<i32> {
    if let Some(threads) = cli.threads {
        // Ignored if a pool already exists, e.g. when called twice in-process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match cli.command {
        Command::Constants { alpha, n } => constants(alpha, n),
        Command::Sample(args) => sample(&args),
        Command::SimulateNoise { run, output } => simulate_noise(&run.resolve()?, output.as_deref()),
        Command::CheckExistence { run } => check_existence(&run),
        Command::Simulate { run, force } => simulate(&run.resolve()?, force),
        Command::Diagnose { suite, run, samples } => diagnose(&run.resolve()?, suite, samples),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn constants(alpha: f64, n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let model = StableModel::new(alpha)?;
    print_json(&json!({
        "alpha": alpha,
        "n": n,
        "c_alpha": c_alpha(alpha)?,
        "sphere_total_mass": sphere_total_mass(n, alpha)?,
        "d_alpha": d_alpha(n, alpha)?,
        "sphere_moment_alpha": sphere_moment(n, alpha)?,
        "sphere_moment_2": sphere_moment(n, 2.0)?,
        "white_noise_normalization": model.white_noise_normalization(),
    }))?;
    Ok(EXIT_OK)
}

fn writer(output: Option<&Path>) -> Result<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match output {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    Ok(csv::Writer::from_writer(sink))
}

fn header(first: &str, prefix: &str, n: usize, last: Option<&str>) -> Vec<String> {
    let mut h = vec![first.to_string()];
    h.extend((1..=n).map(|k| format!("{prefix}{k}")));
    h.extend(last.map(str::to_string));
    h
}

fn fmt_row(lead: f64, xs: &[f64], tail: Option<f64>) -> Vec<String> {
    let mut r = Vec::with_capacity(xs.len() + 2);
    r.push(lead.to_string());
    r.extend(xs.iter().map(f64::to_string));
    r.extend(tail.map(|x| x.to_string()));
    r
}

fn sample(args: &SampleArgs) -> Result<i32> {
    let needs_alpha = args.law != Law::Sphere;
    let alpha = match (args.alpha, needs_alpha) {
        (Some(a), _) => a,
        (None, false) => 1.0,
        (None, true) => return Err(Error::Config(format!("--alpha is required for {:?}", args.law))),
    };
    let mut rng = RngState::new(args.seed, streams::SAMPLE).rng();
    let mut w = writer(args.output.as_deref())?;
    match args.law {
        Law::Sas => {
            let d = SymmetricStable::new(alpha, args.scale)?;
            w.write_record(["x"])?;
            for _ in 0..args.count {
                w.write_record([d.sample(&mut rng).to_string()])?;
            }
        }
        Law::Subordinator => {
            let d = StableSubordinator::new(alpha, args.t)?;
            w.write_record(["dl"])?;
            for _ in 0..args.count {
                w.write_record([d.sample(&mut rng).to_string()])?;
            }
        }
        Law::Sphere | Law::Rotstable => {
            w.write_record(header("i", "x_", args.n, None))?;
            for i in 0..args.count {
                let x = if args.law == Law::Sphere {
                    sample_uniform_sphere(args.n, &mut rng)?.into_coords()
                } else {
                    sample_rotational_stable(args.n, alpha, args.t, &mut rng)?
                };
                w.write_record(fmt_row(i as f64, &x, None))?;
            }
        }
    }
    w.flush()?;
    Ok(EXIT_OK)
}

fn simulate_noise(cfg: &RunConfig, output: Option<&Path>) -> Result<i32> {
    let state = RngState::new(cfg.seed, streams::NOISE);
    let mut rng = state.rng();
    let mut w = writer(output)?;
    match cfg.representation {
        Representation::Subordinated => {
            let grid = cfg.time_grid()?;
            let path = generate_subordinated_path(cfg.galerkin_n, cfg.alpha, &grid, &mut rng)?;
            let sub = path
                .subordinator_increments()
                .expect("subordinated paths carry the clock");
            w.write_record(header("t", "dL_", cfg.galerkin_n, Some("dl")))?;
            for (i, row) in path.rows().enumerate() {
                w.write_record(fmt_row(grid[i + 1], row, Some(sub[i])))?;
            }
        }
        Representation::WhiteNoise => {
            let domain = AxisBox::unit(cfg.space_dim)?;
            let jumps = generate_white_noise_jumps(&domain, cfg.alpha, cfg.horizon, cfg.epsilon, &mut rng)?;
            let mut rows: Vec<_> = jumps.jumps().collect();
            rows.sort_by(|a, b| a.time.total_cmp(&b.time));
            w.write_record(header("t", "x_", cfg.space_dim, Some("y")))?;
            for j in rows {
                w.write_record(fmt_row(j.time, j.location, Some(j.magnitude)))?;
            }
        }
    }
    w.flush()?;
    Ok(EXIT_OK)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Finite => EXIT_OK,
        Verdict::Infinite => EXIT_INFINITE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn check_existence(args: &RunArgs) -> Result<i32> {
    let cfg = args.resolve()?;
    let report = existence_integral(&cfg.semigroup, cfg.alpha, cfg.horizon, cfg.s_min)?;
    print_json(&report)?;
    if args.output_dir.is_some() || args.config.is_some() {
        fs::create_dir_all(&cfg.output_dir)?;
        fs::write(
            cfg.output_dir.join("existence.json"),
            serde_json::to_string_pretty(&report)?,
        )?;
    }
    Ok(verdict_code(report.verdict))
}

/// Paths are simulated this many at a time to bound memory.
const SIMULATE_BATCH: usize = 64;

/// File name of path `i`.
pub fn path_file_name(i: usize) -> String {
    format!("path_{i:05}.csv")
}

fn simulate(cfg: &RunConfig, force: bool) -> Result<i32> {
    let start = Instant::now();
    if cfg.representation != Representation::Subordinated {
        return Err(Error::Config(
            "simulate needs the subordinated representation; the white-noise one has no Galerkin coordinates".into(),
        ));
    }
    let existence = existence_integral(&cfg.semigroup, cfg.alpha, cfg.horizon, cfg.s_min)?;
    if existence.verdict != Verdict::Finite && !force {
        eprintln!(
            "existence check returned {:?} (critical ratio {:.4}); pass --force to simulate anyway",
            existence.verdict, existence.critical_ratio
        );
        return Ok(EXIT_NOT_FINITE);
    }
    fs::create_dir_all(&cfg.output_dir)?;
    let grid = cfg.time_grid()?;
    let n = cfg.galerkin_n;
    let x0 = vec![0.0; n];
    let base = RngState::new(cfg.seed, streams::SIMULATE);
    let mut files = Vec::with_capacity(cfg.paths);
    let mut begin = 0;
    while begin < cfg.paths {
        let count = SIMULATE_BATCH.min(cfg.paths - begin);
        let batch = par_paths(base.substream(begin as u64), count, |_, rng| {
            let noise = generate_subordinated_path(n, cfg.alpha, &grid, rng)?;
            simulate_mild_solution(&cfg.semigroup, &noise, &x0)
        });
        for (j, traj) in batch.into_iter().enumerate() {
            let traj = traj?;
            let name = path_file_name(begin + j);
            let mut w = writer(Some(&cfg.output_dir.join(&name)))?;
            w.write_record(header("t", "X_", n, None))?;
            for (t, x) in traj.states() {
                w.write_record(fmt_row(t, x, None))?;
            }
            w.flush()?;
            files.push(name);
        }
        begin += count;
    }
    let manifest = json!({
        "schema_version": SCHEMA_VERSION,
        "seed": cfg.seed,
        "config_hash": cfg.config_hash(),
        "alpha": cfg.alpha,
        "truncation": cfg.semigroup.truncation(),
        "dt": cfg.dt,
        "horizon": cfg.horizon,
        "galerkin_n": n,
        "model": cfg.model_label(),
        "representation": cfg.representation,
        "existence_verdict": existence.verdict,
        "forced": force && existence.verdict != Verdict::Finite,
        "paths": cfg.paths,
        "files": files,
        "config": cfg,
        "wall_time_seconds": start.elapsed().as_secs_f64(),
    });
    fs::write(
        cfg.output_dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)?,
    )?;
    cfg.save(&cfg.output_dir.join("config.toml"))?;
    Ok(EXIT_OK)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Streams `samples` draws of `draw` in parallel and accumulates the
/// empirical characteristic function at each frequency.
fn streamed_char_fn<F>(
    state: RngState,
    samples: usize,
    dim: usize,
    betas: &[Vec<f64>],
    draw: F,
) -> Result<Vec<crate::noise::CharFnEstimate>>
where
    F: Fn(&mut crate::rng::StreamRng, &mut [f64]) -> Result<()> + Sync,
{
    let parts = par_chunked(state, samples, |len, rng| -> Result<Vec<CharFnAccumulator>> {
        let mut accs = vec![CharFnAccumulator::new(); betas.len()];
        let mut x = vec![0.0; dim];
        for _ in 0..len {
            draw(rng, &mut x)?;
            for (acc, b) in accs.iter_mut().zip(betas) {
                acc.push(x.iter().zip(b).map(|(a, b)| a * b).sum());
            }
        }
        Ok(accs)
    });
    let mut total = vec![CharFnAccumulator::new(); betas.len()];
    for part in parts {
        for (t, p) in total.iter_mut().zip(part?) {
            t.merge(&p);
        }
    }
    total.iter().map(|a| a.estimate()).collect()
}

#[derive(Debug, Serialize)]
struct NamedCheck<T: Serialize> {
    name: String,
    pass: bool,
    report: T,
}

fn charfn_suite(cfg: &RunConfig, samples: usize) -> Result<(bool, Value)> {
    let alpha = cfg.alpha;
    let t = cfg.horizon;
    let state = RngState::new(cfg.seed, streams::DIAGNOSE);
    let mut checks = Vec::new();

    let scalar: Vec<Vec<f64>> = [0.5, 1.0, 2.0].iter().map(|b| vec![*b]).collect();
    let sas = SymmetricStable::new(alpha, 1.0)?;
    let est = streamed_char_fn(state.substream(0), samples, 1, &scalar, |rng, x| {
        x[0] = sas.sample(rng);
        Ok(())
    })?;
    let target = scalar.iter().map(|b| real((-b[0].abs().powf(alpha)).exp())).collect();
    let r = CharFnReport::from_estimates(scalar, &est, target, 0.0)?;
    checks.push(NamedCheck {
        name: "sas".into(),
        pass: r.pass,
        report: r,
    });

    let n = 3;
    let betas = vec![
        vec![0.5, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.6, -0.6, 0.3],
        vec![1.0, 1.0, 1.0],
        vec![-0.4, 1.2, 0.9],
    ];
    let target: Vec<Complex64> = betas
        .iter()
        .map(|b| real((-t * b.iter().map(|x| x * x).sum::<f64>().powf(alpha / 2.0)).exp()))
        .collect();
    let grid = [0.0, t];
    let est = streamed_char_fn(state.substream(1 << 32), samples, n, &betas, |rng, x| {
        let path = generate_subordinated_path(n, alpha, &grid, rng)?;
        x.copy_from_slice(path.row(0));
        Ok(())
    })?;
    let r = CharFnReport::from_estimates(betas.clone(), &est, target.clone(), 0.0)?;
    checks.push(NamedCheck {
        name: "subordinated_noise".into(),
        pass: r.pass,
        report: r,
    });

    let est = streamed_char_fn(state.substream(2 << 32), samples, n, &betas, |rng, x| {
        x.copy_from_slice(&sample_rotational_stable(n, alpha, t, rng)?);
        Ok(())
    })?;
    let r = CharFnReport::from_estimates(betas, &est, target, 0.0)?;
    checks.push(NamedCheck {
        name: "rotational_stable".into(),
        pass: r.pass,
        report: r,
    });

    let pass = checks.iter().all(|c| c.pass);
    Ok((pass, serde_json::to_value(checks)?))
}

fn tails_suite(cfg: &RunConfig, samples: usize) -> Result<(bool, Value)> {
    let alpha = cfg.alpha;
    let state = RngState::new(cfg.seed, streams::DIAGNOSE);
    let mut rows = Vec::new();
    let mut pass = true;
    for (i, n) in [1usize, 3, 10].into_iter().enumerate() {
        for (j, c) in [1.0, 5.0].into_iter().enumerate() {
            let (est, se) =
                tail_mass_monte_carlo(n, alpha, c, samples, state.substream((i * 2 + j) as u64 * CHUNK_BLOCK))?;
            let exact = levy_tail_mass(n as u64, alpha, c)?;
            let ok = (est - exact).abs() <= 3.0 * se + 1e-12 * exact;
            pass &= ok;
            rows.push(json!({ "n": n, "c": c, "exact": exact, "monte_carlo": est, "std_error": se, "pass": ok }));
        }
    }
    let paths = (samples / 20).max(1000);
    let jumps: JumpGrowthReport = irregularity_growth_empirical(
        alpha,
        cfg.horizon,
        &[5.0],
        &[3],
        cfg.steps(),
        paths,
        state.substream(100 * CHUNK_BLOCK),
    )?;
    let jump_ok = jumps.empirical_within_band().unwrap_or(false);
    pass &= jump_ok;
    Ok((
        pass,
        json!({ "tail_mass": rows, "jump_law": { "pass": jump_ok, "report": jumps } }),
    ))
}

/// Stream ids reserved per check, so checks never share random numbers.
const CHUNK_BLOCK: u64 = 1 << 32;

fn irregularity_suite(cfg: &RunConfig, samples: usize) -> Result<(bool, Value)> {
    let dims = [1, 10, 100, 1000, 10_000, 100_000];
    let predicted = irregularity_growth(cfg.alpha, cfg.horizon, &[1.0, 10.0, 100.0], &dims)?;
    let decreasing = predicted.predicted_decreasing();
    let paths = (samples / 50).max(500);
    let state = RngState::new(cfg.seed, streams::DIAGNOSE).substream(200 * CHUNK_BLOCK);
    let empirical = irregularity_growth_empirical(
        cfg.alpha,
        cfg.horizon,
        &[2.0, 5.0],
        &[1, 4, 16],
        cfg.steps(),
        paths,
        state,
    )?;
    let within = empirical.empirical_within_band().unwrap_or(false);
    Ok((
        decreasing && within,
        json!({
            "predicted": { "pass": decreasing, "report": predicted },
            "simulated": { "pass": within, "report": empirical },
        }),
    ))
}

fn diagnose(cfg: &RunConfig, suite: Suite, samples: usize) -> Result<i32> {
    let (pass, body) = match suite {
        Suite::Charfn => charfn_suite(cfg, samples)?,
        Suite::Tails => tails_suite(cfg, samples)?,
        Suite::Irregularity => irregularity_suite(cfg, samples)?,
    };
    let suite_name = format!("{suite:?}").to_lowercase();
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "suite": suite_name,
        "alpha": cfg.alpha,
        "seed": cfg.seed,
        "samples": samples,
        "pass": pass,
        "checks": body,
    });
    print_json(&report)?;
    Ok(if pass { EXIT_OK } else { EXIT_BAND_FAILURE })
}

/// The existence report for the heat semigroup on a `d`-dimensional domain.
pub fn heat_existence(alpha: f64, d: u32, horizon: f64, s_min: f64) -> Result<ExistenceReport> {
    existence_integral(&SemigroupSpec::heat(d, DEFAULT_TRUNCATION)?, alpha, horizon, s_min)
}
