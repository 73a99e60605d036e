//! The four commands behind the `seqforge` binary, callable as library functions.

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::io;
use crate::corr::{
    autocorrelation, isl, lp_metric, psl, wisl, CorrelationProfile, UnitModulusSequence,
    WeightVector,
};
use crate::error::{Error, Result};
use crate::seqlib::{exact_sqrt, frank, golomb, random_unimodular};
use crate::solvers::{
    default_p_schedule, run_solver, ConvergenceRecord, Init, Method, SolverConfig, StageSummary,
};

/// Environment variable capping the worker threads used by `bench`.
pub const THREADS_ENV: &str = "SEQFORGE_THREADS";

/// Lag zones of the zero-correlation-zone benchmark at N = 100.
pub const ZONE_LAGS: [(usize, usize); 2] = [(1, 20), (51, 70)];

/// Lengths of the PSL sweep when none are given.
pub const SWEEP_LENGTHS: [usize; 8] = [25, 49, 100, 400, 900, 2500, 4900, 10_000];

/// Exponents compared by the `p-compare` benchmark.
pub const COMPARE_PS: [f64; 4] = [10.0, 100.0, 1000.0, 10_000.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    Frank,
    Golomb,
    Random,
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "frank" => Ok(SeqKind::Frank),
            "golomb" => Ok(SeqKind::Golomb),
            "random" => Ok(SeqKind::Random),
            _ => Err(Error::InvalidConfig(format!(
                "unknown sequence kind {s:?} (expected frank, golomb or random)"
            ))),
        }
    }
}

/// Arguments of [`cmd_gen`]. Frank sequences take the order `m` (or a square
/// `n`); the other kinds take `n`.
#[derive(Debug, Clone)]
pub struct GenRequest {
    pub kind: SeqKind,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub seed: u64,
    pub out: PathBuf,
}

pub fn generate(
    kind: SeqKind,
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
) -> Result<UnitModulusSequence> {
    let need_n = || n.ok_or_else(|| Error::InvalidConfig("--n is required".into()));
    match kind {
        SeqKind::Frank => {
            let order = match (m, n) {
                (Some(m), _) => m,
                (None, Some(n)) => exact_sqrt(n).ok_or_else(|| {
                    Error::InvalidConfig(format!("Frank sequences need a square length, got {n}"))
                })?,
                (None, None) => return Err(Error::InvalidConfig("--m or --n is required".into())),
            };
            frank(order)
        }
        SeqKind::Golomb => golomb(need_n()?),
        SeqKind::Random => random_unimodular(need_n()?, seed),
    }
}

pub fn cmd_gen(req: &GenRequest) -> Result<UnitModulusSequence> {
    let seq = generate(req.kind, req.n, req.m, req.seed)?;
    io::write_sequence(&req.out, &seq)?;
    Ok(seq)
}

/// Sidelobe metrics of one sequence, as written by `eval`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub n: usize,
    pub isl: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wisl: Option<f64>,
    pub psl: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lp: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correlation_level_path: Option<PathBuf>,
}

pub fn compute_metrics(
    seq: &UnitModulusSequence,
    weights: Option<&WeightVector>,
    p: Option<f64>,
) -> Result<(Metrics, CorrelationProfile)> {
    if let Some(p) = p {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "p must be a finite number >= 1, got {p}"
            )));
        }
    }
    let profile = autocorrelation(seq)?;
    let metrics = Metrics {
        n: seq.len(),
        isl: isl(&profile),
        wisl: weights.map(|w| wisl(&profile, w)).transpose()?,
        psl: psl(&profile),
        p,
        lp: p.map(|p| lp_metric(&profile, p)),
        correlation_level_path: None,
    };
    Ok((metrics, profile))
}

/// Arguments of [`cmd_eval`]. Without `out`, results go next to the input as
/// `<stem>.metrics.json` and `<stem>.level.csv`.
#[derive(Debug, Clone)]
pub struct EvalRequest {
    pub input: PathBuf,
    pub weights: Option<PathBuf>,
    pub p: Option<f64>,
    pub out: Option<PathBuf>,
}

pub fn cmd_eval(req: &EvalRequest) -> Result<Metrics> {
    let seq = io::read_sequence(&req.input)?;
    let weights = req.weights.as_deref().map(io::read_weights).transpose()?;
    let (mut metrics, profile) = compute_metrics(&seq, weights.as_ref(), req.p)?;
    let json_path = req
        .out
        .clone()
        .unwrap_or_else(|| io::sibling(&req.input, "metrics.json"));
    let csv_path = io::sibling(&json_path, "level.csv");
    io::write_text(&csv_path, &io::correlation_level_csv(&profile))?;
    metrics.correlation_level_path = Some(csv_path);
    io::write_json(&json_path, &metrics)?;
    Ok(metrics)
}

/// Design parameters as read from a TOML file or command-line flags. Every
/// field is optional so flags can override a file field by field.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub struct DesignSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Frank order; implies `n = m²`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_schedule: Option<Vec<f64>>,
    /// Weight file path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<PathBuf>,
    /// Inclusive lag ranges with weight 1, as an alternative to `weights`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zones: Option<Vec<[usize; 2]>>,
    /// `random`, `frank`, `golomb`, or a phase file path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub init: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_floor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accelerate: Option<bool>,
}

impl DesignSpec {
    pub fn from_toml_file(path: &Path) -> Result<Self> {
        let mut spec: DesignSpec =
            toml::from_str(&io::read_text(path)?).map_err(|e| Error::Parse {
                path: path.to_path_buf(),
                reason: e.to_string(),
            })?;
        // Relative paths inside a config file are relative to the file.
        let base = path.parent().unwrap_or(Path::new(""));
        if let Some(w) = spec.weights.as_mut() {
            if w.is_relative() {
                *w = base.join(&*w);
            }
        }
        if let Some(init) = spec.init.as_mut() {
            if !matches!(init.as_str(), "random" | "frank" | "golomb")
                && Path::new(init).is_relative()
            {
                *init = base.join(&*init).to_string_lossy().into_owned();
            }
        }
        Ok(spec)
    }

    /// Fields set in `over` replace the ones in `self`.
    pub fn overridden_by(self, over: DesignSpec) -> DesignSpec {
        DesignSpec {
            method: over.method.or(self.method),
            n: over.n.or(self.n),
            m: over.m.or(self.m),
            p: over.p.or(self.p),
            p_schedule: over.p_schedule.or(self.p_schedule),
            weights: over.weights.or(self.weights),
            zones: over.zones.or(self.zones),
            init: over.init.or(self.init),
            seed: over.seed.or(self.seed),
            max_iter: over.max_iter.or(self.max_iter),
            rel_tol: over.rel_tol.or(self.rel_tol),
            abs_floor: over.abs_floor.or(self.abs_floor),
            accelerate: over.accelerate.or(self.accelerate),
        }
    }

    /// Builds the solver configuration, filling unset fields with the method's
    /// defaults, and returns it with the fully populated spec it came from.
    pub fn resolve(&self) -> Result<(SolverConfig, DesignSpec)> {
        let method = self
            .method
            .ok_or_else(|| Error::InvalidConfig("a method is required".into()))?;
        let weights = match (&self.weights, &self.zones) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidConfig(
                    "give either weights or zones, not both".into(),
                ))
            }
            (Some(path), None) => Some(io::read_weights(path)?),
            _ => None,
        };
        let n = match (self.n, self.m, &weights) {
            (Some(n), _, _) => n,
            (None, Some(m), _) => m * m,
            (None, None, Some(w)) => w.seq_len(),
            _ => {
                return Err(Error::InvalidConfig(
                    "sequence length n (or m) is required".into(),
                ))
            }
        };
        if let Some(m) = self.m {
            if m * m != n {
                return Err(Error::InvalidConfig(format!(
                    "m = {m} does not match n = {n}"
                )));
            }
        }
        let weights = match (&self.zones, weights) {
            (Some(zones), _) => {
                let ranges: Vec<(usize, usize)> = zones.iter().map(|z| (z[0], z[1])).collect();
                Some(WeightVector::zones(n, &ranges)?)
            }
            (None, w) => w,
        };
        if weights.is_some() && !method.is_wisl() {
            return Err(Error::InvalidConfig(format!(
                "weights apply to the WISL methods, not {}",
                method.name()
            )));
        }
        let init_name = self.init.clone().unwrap_or_else(|| "random".into());
        let init = match init_name.as_str() {
            "random" => Init::Random,
            "frank" => Init::Frank,
            "golomb" => Init::Golomb,
            path => Init::File(PathBuf::from(path)),
        };

        let mut cfg = match method {
            Method::Mwisl | Method::MwislDiag => {
                let w = match weights {
                    Some(w) => w,
                    None => WeightVector::uniform(n)?,
                };
                if method == Method::Mwisl {
                    SolverConfig::mwisl(w)
                } else {
                    SolverConfig::mwisl_diag(w)
                }
            }
            Method::MmPsl => SolverConfig::mm_psl(n, self.p.unwrap_or(100.0)),
            Method::MmPslAdaptive => SolverConfig::mm_psl_adaptive(n),
        };
        cfg.n = n;
        cfg.init = init;
        cfg.seed = self.seed.unwrap_or(0);
        cfg.accelerate = self.accelerate.unwrap_or(false);
        if let Some(v) = self.max_iter {
            cfg.max_iter = v;
        }
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        cfg.abs_floor = self.abs_floor;
        if let Some(s) = &self.p_schedule {
            cfg.p_schedule = s.clone();
        }
        cfg.validate()?;

        let resolved = DesignSpec {
            method: Some(method),
            n: Some(n),
            m: self.m,
            p: (method == Method::MmPsl).then_some(cfg.p),
            p_schedule: (method == Method::MmPslAdaptive).then(|| cfg.p_schedule.clone()),
            weights: self.weights.clone(),
            zones: self.zones.clone(),
            init: Some(init_name),
            seed: Some(cfg.seed),
            max_iter: Some(cfg.max_iter),
            rel_tol: Some(cfg.rel_tol),
            abs_floor: cfg.abs_floor,
            accelerate: Some(cfg.accelerate),
        };
        Ok((cfg, resolved))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub seconds: f64,
    pub iterations: usize,
    pub stages: Vec<StageSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputPaths {
    pub sequence: PathBuf,
    pub convergence: PathBuf,
    pub manifest: PathBuf,
}

/// Record of one `design` run: the resolved configuration, where the outputs
/// went, how long it took and the final metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub file_format: String,
    pub config: DesignSpec,
    pub seed: u64,
    pub initial_objective: f64,
    pub final_objective: f64,
    pub fixed_point_residual: f64,
    pub timings: Timings,
    pub outputs: OutputPaths,
    pub metrics: Metrics,
}

impl RunManifest {
    pub fn read(path: &Path) -> Result<Self> {
        io::read_json(path)
    }
}

/// Arguments of [`cmd_design`]: an optional TOML file, flag overrides and the
/// output sequence path. The convergence CSV and manifest are written next to
/// `out` as `<stem>.convergence.csv` and `<stem>.manifest.json`.
#[derive(Debug, Clone)]
pub struct DesignRequest {
    pub config: Option<PathBuf>,
    pub overrides: DesignSpec,
    pub out: PathBuf,
}

pub fn cmd_design(req: &DesignRequest) -> Result<RunManifest> {
    let base = match &req.config {
        Some(path) => DesignSpec::from_toml_file(path)?,
        None => DesignSpec::default(),
    };
    let spec = base.overridden_by(req.overrides.clone());
    let (cfg, resolved) = spec.resolve()?;
    let (seq, rec) = run_solver(&cfg)?;

    let convergence = io::sibling(&req.out, "convergence.csv");
    let manifest_path = io::sibling(&req.out, "manifest.json");
    io::write_sequence(&req.out, &seq)?;
    io::write_text(&convergence, &io::convergence_csv(&rec))?;

    let lp_p = match cfg.method {
        Method::MmPsl => Some(cfg.p),
        Method::MmPslAdaptive => cfg.p_schedule.last().copied(),
        _ => None,
    };
    let (metrics, _) = compute_metrics(
        &seq,
        cfg.method
            .is_wisl()
            .then_some(cfg.weights.as_ref())
            .flatten(),
        lp_p,
    )?;
    let manifest = RunManifest {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        file_format: "phases v1".into(),
        config: resolved,
        seed: cfg.seed,
        initial_objective: rec.initial_objective,
        final_objective: rec.final_objective(),
        fixed_point_residual: rec.fixed_point_residual,
        timings: Timings {
            seconds: rec.seconds,
            iterations: rec.iterations,
            stages: rec.stages.clone(),
        },
        outputs: OutputPaths {
            sequence: req.out.clone(),
            convergence,
            manifest: manifest_path.clone(),
        },
        metrics,
    };
    io::write_json(&manifest_path, &manifest)?;
    Ok(manifest)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    /// Zero-correlation-zone WISL design at N = 100 with all four WISL variants.
    WislZone,
    /// PSL versus length for Frank, Golomb and adaptive MM-PSL.
    PslSweep,
    /// ℓp traces for several fixed exponents at N = 400 from a Frank start.
    PCompare,
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wisl-zone" => Ok(Experiment::WislZone),
            "psl-sweep" => Ok(Experiment::PslSweep),
            "p-compare" => Ok(Experiment::PCompare),
            _ => Err(Error::InvalidConfig(format!(
                "unknown experiment {s:?} (expected wisl-zone, psl-sweep or p-compare)"
            ))),
        }
    }
}

/// Knobs shared by the benchmarks. Unset fields take each experiment's defaults.
#[derive(Debug, Clone, Default)]
pub struct BenchOptions {
    /// Lengths for `psl-sweep`.
    pub lengths: Option<Vec<usize>>,
    /// Length for `p-compare` (default 400, must be a square).
    pub n: Option<usize>,
    /// Iteration cap (per exponent for the adaptive runs).
    pub max_iter: Option<usize>,
    pub seed: u64,
    /// Worker threads; falls back to `SEQFORGE_THREADS`, then to the core count.
    pub threads: Option<usize>,
}

/// Worker count: explicit request, else `SEQFORGE_THREADS`, else available cores.
pub fn bench_threads(requested: Option<usize>) -> usize {
    requested
        .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1)
}

/// Runs `jobs` on at most `threads` scoped workers, returning results in job order.
fn parallel_map<T, R, F>(jobs: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads.min(jobs.len()).max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let r = f(job);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every job ran"))
        .collect()
}

/// Runs a benchmark and writes its CSV bundle into `out_dir`; returns the
/// files written.
pub fn cmd_bench(
    experiment: Experiment,
    out_dir: &Path,
    opts: &BenchOptions,
) -> Result<Vec<PathBuf>> {
    match experiment {
        Experiment::WislZone => bench_wisl_zone(out_dir, opts),
        Experiment::PslSweep => bench_psl_sweep(out_dir, opts),
        Experiment::PCompare => bench_p_compare(out_dir, opts),
    }
}

fn bench_wisl_zone(out_dir: &Path, opts: &BenchOptions) -> Result<Vec<PathBuf>> {
    let n = 100;
    let weights = WeightVector::zones(n, &ZONE_LAGS)?;
    let mut written = Vec::new();
    let weights_path = out_dir.join("weights.txt");
    io::write_weights(&weights_path, &weights)?;
    written.push(weights_path);

    let variants: Vec<(Method, bool)> = [Method::Mwisl, Method::MwislDiag]
        .into_iter()
        .flat_map(|m| [(m, true), (m, false)])
        .collect();
    let runs = parallel_map(
        &variants,
        bench_threads(opts.threads),
        |&(method, accelerate)| {
            let base = if method == Method::Mwisl {
                SolverConfig::mwisl(weights.clone())
            } else {
                SolverConfig::mwisl_diag(weights.clone())
            };
            let cfg = base
                .with_seed(opts.seed)
                .with_accelerate(accelerate)
                .with_max_iter(opts.max_iter.unwrap_or(1_000_000))
                .with_rel_tol(f64::MIN_POSITIVE)
                .with_abs_floor(1e-10);
            run_solver(&cfg)
        },
    );

    let mut summary = String::from("variant,iterations,seconds,final_wisl,backtracks\n");
    for ((method, accelerate), run) in variants.iter().zip(runs) {
        let (seq, rec) = run?;
        let name = format!(
            "{}{}",
            method.name(),
            if *accelerate { "-squarem" } else { "" }
        );
        let conv = out_dir.join(format!("{name}.convergence.csv"));
        io::write_text(&conv, &io::convergence_csv(&rec))?;
        let level = out_dir.join(format!("{name}.level.csv"));
        io::write_text(&level, &io::correlation_level_csv(&autocorrelation(&seq)?))?;
        let seq_path = out_dir.join(format!("{name}.txt"));
        io::write_sequence(&seq_path, &seq)?;
        summary += &format!(
            "{name},{},{:.6},{:e},{}\n",
            rec.iterations,
            rec.seconds,
            rec.final_objective(),
            rec.total_backtracks
        );
        written.extend([conv, level, seq_path]);
    }
    let summary_path = out_dir.join("summary.csv");
    io::write_text(&summary_path, &summary)?;
    written.push(summary_path);
    Ok(written)
}

fn adaptive_psl(init: UnitModulusSequence, opts: &BenchOptions) -> Result<f64> {
    let cfg = SolverConfig::mm_psl_adaptive(init.len())
        .with_init(Init::Sequence(init))
        .with_accelerate(true)
        .with_max_iter(opts.max_iter.unwrap_or(5_000));
    let (seq, _) = run_solver(&cfg)?;
    Ok(psl(&autocorrelation(&seq)?))
}

fn bench_psl_sweep(out_dir: &Path, opts: &BenchOptions) -> Result<Vec<PathBuf>> {
    let lengths = opts
        .lengths
        .clone()
        .unwrap_or_else(|| SWEEP_LENGTHS.to_vec());
    if let Some(&bad) = lengths.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidConfig(format!(
            "sweep length {bad} is below 2"
        )));
    }
    // One job per (length, start) pair so long runs spread across workers.
    let jobs: Vec<(usize, bool)> = lengths
        .iter()
        .flat_map(|&n| [(n, true), (n, false)])
        .filter(|&(n, use_frank)| !use_frank || exact_sqrt(n).is_some())
        .collect();
    let results = parallel_map(&jobs, bench_threads(opts.threads), |&(n, use_frank)| {
        let start = if use_frank {
            frank(exact_sqrt(n).expect("filtered to squares"))?
        } else {
            golomb(n)?
        };
        let base = psl(&autocorrelation(&start)?);
        Ok::<_, Error>((base, adaptive_psl(start, opts)?))
    });

    let mut table = String::from("n,frank_psl,golomb_psl,mm_psl_frank_init,mm_psl_golomb_init\n");
    let fmt = |v: Option<f64>| v.map(|v| format!("{v:.6}")).unwrap_or_default();
    let mut results = jobs.iter().zip(results);
    for &n in &lengths {
        let (mut fr, mut go) = (None, None);
        for _ in 0..if exact_sqrt(n).is_some() { 2 } else { 1 } {
            let (&(_, use_frank), r) = results.next().expect("one result per job");
            let r = r?;
            if use_frank {
                fr = Some(r);
            } else {
                go = Some(r);
            }
        }
        table += &format!(
            "{n},{},{},{},{}\n",
            fmt(fr.map(|r| r.0)),
            fmt(go.map(|r| r.0)),
            fmt(fr.map(|r| r.1)),
            fmt(go.map(|r| r.1))
        );
    }
    let path = out_dir.join("psl_sweep.csv");
    io::write_text(&path, &table)?;
    Ok(vec![path])
}

fn bench_p_compare(out_dir: &Path, opts: &BenchOptions) -> Result<Vec<PathBuf>> {
    let n = opts.n.unwrap_or(400);
    let m = exact_sqrt(n)
        .ok_or_else(|| Error::InvalidConfig(format!("p-compare needs a square length, got {n}")))?;
    let start = frank(m)?;
    let runs = parallel_map(&COMPARE_PS, bench_threads(opts.threads), |&p| {
        let cfg = SolverConfig::mm_psl(n, p)
            .with_init(Init::Sequence(start.clone()))
            .with_accelerate(true)
            .with_max_iter(opts.max_iter.unwrap_or(50_000));
        run_solver(&cfg).map(|(_, rec)| rec)
    });
    let mut written = Vec::new();
    for (p, rec) in COMPARE_PS.iter().zip(runs) {
        let rec: ConvergenceRecord = rec?;
        let path = out_dir.join(format!("p{p}.csv"));
        io::write_text(&path, &io::lp_trace_csv(&rec))?;
        written.push(path);
    }
    Ok(written)
}

/// Default exponent schedule, exposed for flag help text.
pub fn default_schedule_text() -> String {
    default_p_schedule()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
