use std::path::PathBuf;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel::squarem_step;
use crate::corr::{UnitModulusSequence, WeightVector};
use crate::error::{Error, Result};
use crate::seqlib::{exact_sqrt, frank, golomb, random_unimodular};
use crate::solvers::steps::{MmMap, MmPsl, Mwisl, MwislDiag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Mwisl,
    MwislDiag,
    MmPsl,
    MmPslAdaptive,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Mwisl,
        Method::MwislDiag,
        Method::MmPsl,
        Method::MmPslAdaptive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Mwisl => "mwisl",
            Method::MwislDiag => "mwisl-diag",
            Method::MmPsl => "mm-psl",
            Method::MmPslAdaptive => "mm-psl-adaptive",
        }
    }

    pub fn is_wisl(self) -> bool {
        matches!(self, Method::Mwisl | Method::MwislDiag)
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown method {s:?}")))
    }
}

/// Where the starting sequence comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Init {
    /// i.i.d. uniform phases from the configured seed.
    Random,
    /// Frank sequence; N must be a perfect square.
    Frank,
    Golomb,
    /// Phase file in the `seqforge phases v1` format.
    File(PathBuf),
    Sequence(UnitModulusSequence),
}

/// `2, 4, 8, …, 2^13`.
pub fn default_p_schedule() -> Vec<f64> {
    (1..=13).map(|e| 2f64.powi(e)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub method: Method,
    pub n: usize,
    /// Lag weights for the WISL methods; `None` means unit weights (plain ISL).
    pub weights: Option<WeightVector>,
    /// Exponent for `mm-psl`.
    pub p: f64,
    /// Exponents for `mm-psl-adaptive`, strictly increasing.
    pub p_schedule: Vec<f64>,
    /// Iteration cap; for `mm-psl-adaptive` the cap applies to each `p`.
    pub max_iter: usize,
    /// Relative-change stopping threshold. For `mm-psl-adaptive` the threshold
    /// used at exponent `p` is `rel_tol / p`.
    pub rel_tol: f64,
    /// Stop as soon as the objective is at or below this value.
    pub abs_floor: Option<f64>,
    pub accelerate: bool,
    pub seed: u64,
    pub init: Init,
}

impl SolverConfig {
    fn base(method: Method, n: usize) -> Self {
        Self {
            method,
            n,
            weights: None,
            p: 100.0,
            p_schedule: default_p_schedule(),
            max_iter: 10_000,
            rel_tol: 1e-10,
            abs_floor: None,
            accelerate: true,
            seed: 0,
            init: Init::Random,
        }
    }

    pub fn mwisl(weights: WeightVector) -> Self {
        let n = weights.seq_len();
        Self {
            weights: Some(weights),
            ..Self::base(Method::Mwisl, n)
        }
    }

    pub fn mwisl_diag(weights: WeightVector) -> Self {
        let n = weights.seq_len();
        Self {
            weights: Some(weights),
            ..Self::base(Method::MwislDiag, n)
        }
    }

    pub fn mm_psl(n: usize, p: f64) -> Self {
        Self {
            p,
            ..Self::base(Method::MmPsl, n)
        }
    }

    /// Increasing-`p` schedule with the per-stage threshold `1e-5/p` and a
    /// per-stage cap of 5000 iterations.
    pub fn mm_psl_adaptive(n: usize) -> Self {
        Self {
            max_iter: 5_000,
            rel_tol: 1e-5,
            ..Self::base(Method::MmPslAdaptive, n)
        }
    }

    pub fn with_init(mut self, init: Init) -> Self {
        self.init = init;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_floor(mut self, floor: f64) -> Self {
        self.abs_floor = Some(floor);
        self
    }

    pub fn with_accelerate(mut self, accelerate: bool) -> Self {
        self.accelerate = accelerate;
        self
    }

    pub fn with_p_schedule(mut self, schedule: Vec<f64>) -> Self {
        self.p_schedule = schedule;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("sequence length must be >= 2, got {}", self.n));
        }
        if self.max_iter < 1 {
            return bad("max_iter must be at least 1".into());
        }
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return bad(format!("rel_tol must be positive, got {}", self.rel_tol));
        }
        if let Some(f) = self.abs_floor {
            if !(f >= 0.0) {
                return bad(format!("abs_floor must be nonnegative, got {f}"));
            }
        }
        match self.method {
            Method::Mwisl | Method::MwislDiag => {
                if let Some(w) = &self.weights {
                    if w.seq_len() != self.n {
                        return Err(Error::LengthMismatch {
                            expected: self.n - 1,
                            actual: w.as_slice().len(),
                        });
                    }
                    if !w.has_positive() {
                        return Err(Error::InvalidWeights(
                            "at least one weight must be positive".into(),
                        ));
                    }
                }
            }
            Method::MmPsl => {
                if !(self.p >= 2.0) || !self.p.is_finite() {
                    return bad(format!("p must be a finite number >= 2, got {}", self.p));
                }
            }
            Method::MmPslAdaptive => {
                if self.p_schedule.is_empty() {
                    return bad("p schedule is empty".into());
                }
                if self
                    .p_schedule
                    .iter()
                    .any(|p| !(*p >= 2.0) || !p.is_finite())
                {
                    return bad("every scheduled p must be a finite number >= 2".into());
                }
                if self.p_schedule.windows(2).any(|w| w[1] <= w[0]) {
                    return bad("p schedule must be strictly increasing".into());
                }
            }
        }
        Ok(())
    }

    fn weights_or_unit(&self) -> Result<WeightVector> {
        match &self.weights {
            Some(w) => Ok(w.clone()),
            None => WeightVector::uniform(self.n),
        }
    }
}

/// Builds the starting sequence described by `config.init`.
pub fn initial_sequence(config: &SolverConfig) -> Result<UnitModulusSequence> {
    let n = config.n;
    let seq = match &config.init {
        Init::Random => random_unimodular(n, config.seed)?,
        Init::Frank => {
            let m = exact_sqrt(n).ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "Frank initialization needs a square length, got {n}"
                ))
            })?;
            frank(m)?
        }
        Init::Golomb => golomb(n)?,
        Init::File(path) => crate::cli::io::read_sequence(path)?,
        Init::Sequence(s) => s.clone(),
    };
    if seq.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: seq.len(),
        });
    }
    Ok(seq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    RelTol,
    AbsFloor,
    MaxIter,
}

/// Summary of one exponent of the adaptive schedule (or the single stage of a
/// fixed-exponent run).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageSummary {
    pub p: Option<f64>,
    pub iterations: usize,
    pub stop: StopReason,
}

/// Per-iteration trace of a solver run.
///
/// `objectives[i]` is the objective after iteration `i + 1`. For the ℓp
/// methods the objective is the rooted norm `(Σ|r_k|^p)^{1/p}`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub initial_objective: f64,
    pub objectives: Vec<f64>,
    pub peaks: Vec<f64>,
    pub cum_seconds: Vec<f64>,
    pub backtracks: Vec<u32>,
    /// Exponent in force at each iteration (ℓp methods only).
    pub stage_p: Vec<f64>,
    pub stages: Vec<StageSummary>,
    pub iterations: usize,
    pub seconds: f64,
    pub total_backtracks: u64,
    /// SQUAREM steps that fell back to the plain double MM step.
    pub fallbacks: u64,
    /// `‖x^{(l+1)} - x^{(l)}‖_∞` over the last iteration.
    pub fixed_point_residual: f64,
    /// Size-2N transforms executed by the map, excluding one-time setup.
    pub transforms: u64,
}

impl ConvergenceRecord {
    pub fn final_objective(&self) -> f64 {
        self.objectives
            .last()
            .copied()
            .unwrap_or(self.initial_objective)
    }

    /// Largest increase between consecutive objectives, including the initial one.
    pub fn max_increase(&self) -> f64 {
        std::iter::once(self.initial_objective)
            .chain(self.objectives.iter().copied())
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

struct LoopParams {
    max_iter: usize,
    rel_tol: f64,
    abs_floor: Option<f64>,
    accelerate: bool,
    p: Option<f64>,
}

fn inf_dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v).norm())
        .fold(0.0, f64::max)
}

fn should_stop(prev: f64, cur: f64, params: &LoopParams) -> Option<StopReason> {
    if params.abs_floor.is_some_and(|f| cur <= f) {
        return Some(StopReason::AbsFloor);
    }
    if prev == 0.0 || ((cur - prev).abs() / prev) <= params.rel_tol {
        return Some(StopReason::RelTol);
    }
    None
}

/// Runs one stage. Unaccelerated iterations reuse the objective that the next
/// step computes anyway, so each iteration costs exactly one map call; only
/// the last iterate of a capped run needs a separate evaluation.
fn run_stage<M: MmMap>(
    map: &mut M,
    x0: Vec<Complex64>,
    params: &LoopParams,
    rec: &mut ConvergenceRecord,
    clock: Instant,
) -> Result<Vec<Complex64>> {
    let first_stage = rec.stages.is_empty();
    let mut x = x0;
    let mut iterations = 0;
    let mut stop = StopReason::MaxIter;

    let log = |rec: &mut ConvergenceRecord, obj: f64, peak: f64, bt: u32| {
        rec.objectives.push(obj);
        rec.peaks.push(peak);
        rec.backtracks.push(bt);
        rec.cum_seconds.push(clock.elapsed().as_secs_f64());
        if let Some(p) = params.p {
            rec.stage_p.push(p);
        }
    };

    if params.accelerate {
        for it in 1..=params.max_iter {
            let out = squarem_step(map, &x)?;
            if it == 1 && first_stage {
                rec.initial_objective = out.start_objective;
            }
            if it == 1 && params.abs_floor.is_some_and(|f| out.start_objective <= f) {
                stop = StopReason::AbsFloor;
                break;
            }
            rec.fixed_point_residual = inf_dist(&out.next, &x);
            rec.total_backtracks += u64::from(out.backtracks);
            rec.fallbacks += u64::from(out.fell_back);
            log(rec, out.eval.objective, out.eval.peak, out.backtracks);
            iterations = it;
            x = out.next;
            if let Some(reason) = should_stop(out.start_objective, out.eval.objective, params) {
                stop = reason;
                break;
            }
        }
    } else {
        let first = map.step(&x)?;
        if first_stage {
            rec.initial_objective = first.objective;
        }
        let mut prev = first.objective;
        if params.abs_floor.is_some_and(|f| prev <= f) {
            stop = StopReason::AbsFloor;
        } else {
            let mut pending = first.next;
            for it in 1..=params.max_iter {
                let (obj, peak, next) = if it < params.max_iter {
                    let s = map.step(&pending)?;
                    (s.objective, s.peak, Some(s.next))
                } else {
                    let e = map.evaluate(&pending)?;
                    (e.objective, e.peak, None)
                };
                rec.fixed_point_residual = inf_dist(&pending, &x);
                x = pending;
                log(rec, obj, peak, 0);
                iterations = it;
                if let Some(reason) = should_stop(prev, obj, params) {
                    stop = reason;
                    break;
                }
                prev = obj;
                match next {
                    Some(n) => pending = n,
                    None => break,
                }
            }
        }
    }

    rec.iterations += iterations;
    rec.stages.push(StageSummary {
        p: params.p,
        iterations,
        stop,
    });
    Ok(x)
}

/// Runs the configured method from `config.init` until the relative objective
/// change drops to `rel_tol`, the objective reaches `abs_floor`, or `max_iter`
/// iterations have run.
pub fn run_solver(config: &SolverConfig) -> Result<(UnitModulusSequence, ConvergenceRecord)> {
    config.validate()?;
    let init = initial_sequence(config)?;
    run_solver_from(config, &init)
}

/// [`run_solver`] starting from an explicit sequence, ignoring `config.init`.
pub fn run_solver_from(
    config: &SolverConfig,
    init: &UnitModulusSequence,
) -> Result<(UnitModulusSequence, ConvergenceRecord)> {
    config.validate()?;
    if init.len() != config.n {
        return Err(Error::LengthMismatch {
            expected: config.n,
            actual: init.len(),
        });
    }
    let clock = Instant::now();
    let mut rec = ConvergenceRecord::default();
    let x0 = init.to_complex();
    let params = |p: Option<f64>, rel_tol: f64| LoopParams {
        max_iter: config.max_iter,
        rel_tol,
        abs_floor: config.abs_floor,
        accelerate: config.accelerate,
        p,
    };
    let x = match config.method {
        Method::Mwisl => {
            let mut map = Mwisl::new(config.weights_or_unit()?)?;
            let x = run_stage(&mut map, x0, &params(None, config.rel_tol), &mut rec, clock)?;
            rec.transforms = map.transform_count();
            x
        }
        Method::MwislDiag => {
            let mut map = MwislDiag::new(config.weights_or_unit()?)?;
            let x = run_stage(&mut map, x0, &params(None, config.rel_tol), &mut rec, clock)?;
            rec.transforms = map.transform_count();
            x
        }
        Method::MmPsl => {
            let mut map = MmPsl::new(config.n, config.p)?;
            let x = run_stage(
                &mut map,
                x0,
                &params(Some(config.p), config.rel_tol),
                &mut rec,
                clock,
            )?;
            rec.transforms = map.transform_count();
            x
        }
        Method::MmPslAdaptive => {
            let mut map = MmPsl::new(config.n, config.p_schedule[0])?;
            let mut x = x0;
            for &p in &config.p_schedule {
                map.set_p(p)?;
                x = run_stage(
                    &mut map,
                    x,
                    &params(Some(p), config.rel_tol / p),
                    &mut rec,
                    clock,
                )?;
            }
            rec.transforms = map.transform_count();
            x
        }
    };
    rec.seconds = clock.elapsed().as_secs_f64();
    Ok((UnitModulusSequence::from_complex(&x)?, rec))
}
