//! One-iteration MM maps. Each map spends four size-2N transforms per call:
//! `F[x;0]`, the inverse giving the correlations, `F·c` for the weighted
//! correlation column, and the adjoint producing `R·x`.

use num_complex::Complex64;

use crate::corr::{lp_norm, symmetric_extension, SpectrumWorkspace, WeightVector};
use crate::error::{Error, Result};
use crate::toeplitz::{lower_bound, upper_bound};

/// Result of one MM update applied to `x`.
#[derive(Debug, Clone)]
pub struct StepOutput {
    pub next: Vec<Complex64>,
    /// Objective at the input `x` (not at `next`).
    pub objective: f64,
    /// Peak sidelobe at the input `x`.
    pub peak: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub objective: f64,
    pub peak: f64,
}

/// A descent fixed-point map on the unit-modulus set, with its objective.
pub trait MmMap {
    fn seq_len(&self) -> usize;

    /// Applies the map once. The returned objective is the one at `x`.
    fn step(&mut self, x: &[Complex64]) -> Result<StepOutput>;

    fn evaluate(&mut self, x: &[Complex64]) -> Result<Evaluation>;

    /// Size-2N transforms executed so far, when the map counts them.
    fn transform_count(&self) -> u64 {
        0
    }
}

/// `max_k w_k (N - k)`, the largest eigenvalue of the lifted weight matrix.
pub fn lambda_max_l(weights: &WeightVector) -> Result<f64> {
    if !weights.has_positive() {
        return Err(Error::InvalidWeights(
            "at least one weight must be positive".into(),
        ));
    }
    Ok(lag_scaled_max(weights.as_slice()))
}

fn lag_scaled_max(w: &[f64]) -> f64 {
    let n = w.len() + 1;
    w.iter()
        .enumerate()
        .map(|(i, &wk)| wk * (n - i - 1) as f64)
        .fold(0.0, f64::max)
}

/// Element-wise `e^{i·arg(y_n)}`; where `y_n = 0` the previous `x_n` is kept.
pub(crate) fn project_unit(y: &[Complex64], fallback: &[Complex64]) -> Vec<Complex64> {
    y.iter()
        .zip(fallback)
        .map(|(&v, &old)| {
            let m = v.norm();
            if m > 0.0 && m.is_finite() {
                v / m
            } else {
                old
            }
        })
        .collect()
}

fn check_len(x: &[Complex64], ws: &SpectrumWorkspace) -> Result<()> {
    if x.len() != ws.seq_len() {
        return Err(Error::LengthMismatch {
            expected: ws.seq_len(),
            actual: x.len(),
        });
    }
    Ok(())
}

/// Shared body of the weighted-correlation update. Builds `c = r ∘ ext`,
/// `μ = F c`, `λ_u`, and `R·x` (from `Fᴴ(μ ∘ f)`), the latter with
/// the already-computed spectrum `f`.
struct WeightedBody {
    rx: Vec<Complex64>,
    lambda_u: f64,
}

fn weighted_body(
    spectrum: &[Complex64],
    lags: &[Complex64],
    ext: &[f64],
    ws: &mut SpectrumWorkspace,
) -> Result<WeightedBody> {
    let n = ws.seq_len();
    let mut mu: Vec<Complex64> = lags.iter().zip(ext).map(|(r, w)| r * w).collect();
    let scale: f64 = mu.iter().map(|v| v.norm()).sum();
    ws.forward(&mut mu);
    let tol = crate::corr::IMAG_RESIDUE_REL * scale.max(1.0);
    let mut mu_re = Vec::with_capacity(mu.len());
    for v in &mu {
        if v.im.abs() > tol {
            return Err(Error::Numerical(format!(
                "weighted correlation spectrum has imaginary residue {:e}",
                v.im
            )));
        }
        mu_re.push(v.re);
    }
    let lambda_u = upper_bound(&mu_re);
    let mut g: Vec<Complex64> = spectrum.iter().zip(&mu_re).map(|(f, m)| f * m).collect();
    ws.adjoint(&mut g);
    let inv = 1.0 / (2 * n) as f64;
    g.truncate(n);
    g.iter_mut().for_each(|v| *v *= inv);
    Ok(WeightedBody { rx: g, lambda_u })
}

fn wisl_update(
    x: &[Complex64],
    weights: &[f64],
    ext: &[f64],
    lambda_l: f64,
    diag: Option<&DiagPrecompute>,
    ws: &mut SpectrumWorkspace,
) -> Result<StepOutput> {
    check_len(x, ws)?;
    let n = x.len();
    let corr = ws.correlate(x);
    let objective = corr.weighted_isl(weights);
    let peak = corr.peak_sidelobe();
    let body = weighted_body(&corr.spectrum, &corr.lags, ext, ws)?;
    let y: Vec<Complex64> = match diag {
        None => {
            let denom = lambda_l * n as f64 + body.lambda_u;
            if !(denom > 0.0) {
                return Err(Error::Numerical(format!(
                    "MWISL step denominator λ_L·N + λ_u = {denom:e} is not positive"
                )));
            }
            x.iter()
                .zip(&body.rx)
                .map(|(xi, rxi)| xi - rxi / denom)
                .collect()
        }
        Some(pre) => {
            let denom = body.lambda_u - pre.lambda_b;
            if !(denom > 0.0) {
                return Err(Error::Numerical(format!(
                    "MWISL-Diag step denominator λ_u - λ_B = {denom:e} is not positive"
                )));
            }
            x.iter()
                .zip(&body.rx)
                .zip(&pre.b1)
                .map(|((xi, rxi), bi)| xi + (xi * bi - rxi) / denom)
                .collect()
        }
    };
    Ok(StepOutput {
        next: project_unit(&y, x),
        objective,
        peak,
    })
}

/// One MWISL iteration from `x`; `lambda_l` comes from [`lambda_max_l`].
pub fn mwisl_step(
    x: &[Complex64],
    weights: &WeightVector,
    lambda_l: f64,
    ws: &mut SpectrumWorkspace,
) -> Result<StepOutput> {
    if !weights.has_positive() {
        return Err(Error::InvalidWeights(
            "at least one weight must be positive".into(),
        ));
    }
    let ext = weights.symmetric_extension();
    wisl_update(x, weights.as_slice(), &ext, lambda_l, None, ws)
}

/// One-time quantities of the diagonal majorizer: `B·1` and the lower
/// eigenvalue bound `λ_B` of `B = Σ_k w_k (N-|k|) U_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagPrecompute {
    /// `B·1` (real since B is real symmetric).
    pub b1: Vec<f64>,
    pub lambda_b: f64,
}

/// Computes `ν = F w̃`, `B·1 = Fᴴ_{:,1:N}(ν ∘ F_{:,1:N} 1) / (2N)` and `λ_B`.
pub fn precompute_diag(
    weights: &WeightVector,
    ws: &mut SpectrumWorkspace,
) -> Result<DiagPrecompute> {
    if !weights.has_positive() {
        return Err(Error::InvalidWeights(
            "at least one weight must be positive".into(),
        ));
    }
    let n = weights.seq_len();
    if ws.seq_len() != n {
        return Err(Error::LengthMismatch {
            expected: ws.seq_len(),
            actual: n,
        });
    }
    let scaled: Vec<f64> = weights
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, w)| w * (n - i - 1) as f64)
        .collect();
    let w_tilde = symmetric_extension(&scaled);
    let mut nu: Vec<Complex64> = w_tilde.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let scale: f64 = w_tilde.iter().sum();
    ws.forward(&mut nu);
    let nu_re: Vec<f64> = nu
        .iter()
        .map(|v| crate::corr::real_part_checked(*v, scale, "ν"))
        .collect::<Result<_>>()?;
    let lambda_b = lower_bound(&nu_re);

    let mut ones = ws.zero_padded(&vec![Complex64::new(1.0, 0.0); n]);
    ws.forward(&mut ones);
    ones.iter_mut().zip(&nu_re).for_each(|(o, m)| *o *= m);
    ws.inverse(&mut ones);
    let b1 = ones[..n]
        .iter()
        .map(|v| crate::corr::real_part_checked(*v, scale, "B·1"))
        .collect::<Result<_>>()?;
    Ok(DiagPrecompute { b1, lambda_b })
}

/// One MWISL-Diag iteration from `x`.
pub fn mwisl_diag_step(
    x: &[Complex64],
    weights: &WeightVector,
    pre: &DiagPrecompute,
    ws: &mut SpectrumWorkspace,
) -> Result<StepOutput> {
    if pre.b1.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            actual: pre.b1.len(),
        });
    }
    let ext = weights.symmetric_extension();
    wisl_update(x, weights.as_slice(), &ext, 0.0, Some(pre), ws)
}

/// Quadratic majorizer data for `Σ|r_k|^p` at the current iterate.
///
/// `a`, `b` and `w_hat` are divided by `t^p`; the step is invariant to this
/// positive scaling.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizerCoefficients {
    /// Curvatures `a_k`, lags `1..N`.
    pub a: Vec<f64>,
    /// Linear coefficients `b_k <= 0`.
    pub b: Vec<f64>,
    /// Combined weights `ŵ_k = a_k + b_k / (2|r_k|)`.
    pub w_hat: Vec<f64>,
    /// ℓp norm of the sidelobes.
    pub t: f64,
    pub lambda_l: f64,
    pub lambda_u: f64,
}

/// `a_k / t^p` for a sidelobe of magnitude `mag`.
///
/// Closed form `[1 + (p-1)u^p - p u^{p-1}] / (t - |r_k|)²` with `u = |r_k|/t`.
/// Near `u = 1` the numerator cancels, so for `p·(1-u) < 1/2` the ratio is
/// summed as the power series `Σ_{j≥2} (-1)^j (j-1) C(p,j) ε^{j-2}` in
/// `ε = 1 - u`, whose value at `ε = 0` is the analytic limit `p(p-1)/2`.
pub fn normalized_curvature(mag: f64, t: f64, p: f64) -> f64 {
    let eps = ((t - mag) / t).max(0.0);
    let ratio = if p * eps < 0.5 {
        let mut coeff = 0.5 * p * (p - 1.0);
        let mut sum = coeff;
        let mut j = 2.0;
        while j < 200.0 {
            coeff *= -eps * (p - j) / (j + 1.0);
            let term = j * coeff;
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
            j += 1.0;
        }
        sum
    } else {
        let u = 1.0 - eps;
        (1.0 + (p - 1.0) * u.powf(p) - p * u.powf(p - 1.0)) / (eps * eps)
    };
    ratio / (t * t)
}

fn psl_coefficients(mags: &[f64], p: f64) -> (Vec<f64>, Vec<f64>, Vec<f64>, f64) {
    let t = lp_norm(mags.iter().copied(), p);
    let mut a = Vec::with_capacity(mags.len());
    let mut b = Vec::with_capacity(mags.len());
    let mut w_hat = Vec::with_capacity(mags.len());
    for &m in mags {
        let u = m / t;
        let ak = normalized_curvature(m, t, p);
        a.push(ak);
        b.push(p * u.powf(p - 1.0) / t - 2.0 * ak * m);
        w_hat.push(0.5 * p / (t * t) * u.powf(p - 2.0));
    }
    (a, b, w_hat, t)
}

struct PslCore {
    coeffs: MajorizerCoefficients,
    rx: Vec<Complex64>,
    peak: f64,
}

fn psl_core(x: &[Complex64], p: f64, ws: &mut SpectrumWorkspace) -> Result<Option<PslCore>> {
    check_len(x, ws)?;
    if !(p >= 2.0) || !p.is_finite() {
        return Err(Error::InvalidConfig(format!(
            "p must be a finite number >= 2, got {p}"
        )));
    }
    let n = x.len();
    let corr = ws.correlate(x);
    let mags: Vec<f64> = corr.sidelobe_magnitudes().collect();
    let peak = mags.iter().copied().fold(0.0, f64::max);
    if peak == 0.0 {
        return Ok(None);
    }
    let (a, b, w_hat, t) = psl_coefficients(&mags, p);
    let lambda_l = lag_scaled_max(&a);
    let ext = symmetric_extension(&w_hat);
    let body = weighted_body(&corr.spectrum, &corr.lags, &ext, ws)?;
    debug_assert_eq!(body.rx.len(), n);
    Ok(Some(PslCore {
        coeffs: MajorizerCoefficients {
            a,
            b,
            w_hat,
            t,
            lambda_l,
            lambda_u: body.lambda_u,
        },
        rx: body.rx,
        peak,
    }))
}

/// Majorizer coefficients of the ℓp objective at `x`, or `None` when every
/// sidelobe is already zero.
pub fn mm_psl_majorizer(
    x: &[Complex64],
    p: f64,
    ws: &mut SpectrumWorkspace,
) -> Result<Option<MajorizerCoefficients>> {
    Ok(psl_core(x, p, ws)?.map(|c| c.coeffs))
}

/// One MM-PSL iteration for the ℓp objective. The returned objective is the
/// rooted norm `(Σ|r_k|^p)^{1/p}` at `x`.
pub fn mm_psl_step(x: &[Complex64], p: f64, ws: &mut SpectrumWorkspace) -> Result<StepOutput> {
    let n = x.len();
    let Some(core) = psl_core(x, p, ws)? else {
        return Ok(StepOutput {
            next: x.to_vec(),
            objective: 0.0,
            peak: 0.0,
        });
    };
    let c = &core.coeffs;
    let denom = c.lambda_l * n as f64 + c.lambda_u;
    if !(denom > 0.0) {
        return Err(Error::Numerical(format!(
            "MM-PSL step denominator λ_L·N + λ_u = {denom:e} is not positive"
        )));
    }
    let y: Vec<Complex64> = x
        .iter()
        .zip(&core.rx)
        .map(|(xi, rxi)| xi - rxi / denom)
        .collect();
    Ok(StepOutput {
        next: project_unit(&y, x),
        objective: c.t,
        peak: core.peak,
    })
}

/// MWISL as a reusable map owning its workspace.
#[derive(Debug)]
pub struct Mwisl {
    weights: WeightVector,
    ext: Vec<f64>,
    lambda_l: f64,
    ws: SpectrumWorkspace,
}

impl Mwisl {
    pub fn new(weights: WeightVector) -> Result<Self> {
        let lambda_l = lambda_max_l(&weights)?;
        let ws = SpectrumWorkspace::new(weights.seq_len());
        Ok(Self {
            ext: weights.symmetric_extension(),
            weights,
            lambda_l,
            ws,
        })
    }

    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }
}

impl MmMap for Mwisl {
    fn seq_len(&self) -> usize {
        self.weights.seq_len()
    }

    fn step(&mut self, x: &[Complex64]) -> Result<StepOutput> {
        wisl_update(
            x,
            self.weights.as_slice(),
            &self.ext,
            self.lambda_l,
            None,
            &mut self.ws,
        )
    }

    fn evaluate(&mut self, x: &[Complex64]) -> Result<Evaluation> {
        check_len(x, &self.ws)?;
        let corr = self.ws.correlate(x);
        Ok(Evaluation {
            objective: corr.weighted_isl(self.weights.as_slice()),
            peak: corr.peak_sidelobe(),
        })
    }

    fn transform_count(&self) -> u64 {
        self.ws.transform_count()
    }
}

/// MWISL-Diag as a reusable map; `B·1` and `λ_B` are computed once in `new`.
#[derive(Debug)]
pub struct MwislDiag {
    weights: WeightVector,
    ext: Vec<f64>,
    pre: DiagPrecompute,
    ws: SpectrumWorkspace,
}

impl MwislDiag {
    pub fn new(weights: WeightVector) -> Result<Self> {
        let mut ws = SpectrumWorkspace::new(weights.seq_len());
        let pre = precompute_diag(&weights, &mut ws)?;
        // The counter reports per-iteration work only.
        ws.reset_count();
        Ok(Self {
            ext: weights.symmetric_extension(),
            weights,
            pre,
            ws,
        })
    }

    pub fn precomputed(&self) -> &DiagPrecompute {
        &self.pre
    }
}

impl MmMap for MwislDiag {
    fn seq_len(&self) -> usize {
        self.weights.seq_len()
    }

    fn step(&mut self, x: &[Complex64]) -> Result<StepOutput> {
        wisl_update(
            x,
            self.weights.as_slice(),
            &self.ext,
            0.0,
            Some(&self.pre),
            &mut self.ws,
        )
    }

    fn evaluate(&mut self, x: &[Complex64]) -> Result<Evaluation> {
        check_len(x, &self.ws)?;
        let corr = self.ws.correlate(x);
        Ok(Evaluation {
            objective: corr.weighted_isl(self.weights.as_slice()),
            peak: corr.peak_sidelobe(),
        })
    }

    fn transform_count(&self) -> u64 {
        self.ws.transform_count()
    }
}

/// MM-PSL for a fixed `p`, switchable between runs with [`set_p`](Self::set_p).
#[derive(Debug)]
pub struct MmPsl {
    p: f64,
    ws: SpectrumWorkspace,
}

impl MmPsl {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLength {
                len: n,
                reason: "sidelobe design needs N >= 2",
            });
        }
        let mut map = Self {
            p: 2.0,
            ws: SpectrumWorkspace::new(n),
        };
        map.set_p(p)?;
        Ok(map)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn set_p(&mut self, p: f64) -> Result<()> {
        if !(p >= 2.0) || !p.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "p must be a finite number >= 2, got {p}"
            )));
        }
        self.p = p;
        Ok(())
    }
}

impl MmMap for MmPsl {
    fn seq_len(&self) -> usize {
        self.ws.seq_len()
    }

    fn step(&mut self, x: &[Complex64]) -> Result<StepOutput> {
        mm_psl_step(x, self.p, &mut self.ws)
    }

    fn evaluate(&mut self, x: &[Complex64]) -> Result<Evaluation> {
        check_len(x, &self.ws)?;
        let corr = self.ws.correlate(x);
        let peak = corr.peak_sidelobe();
        Ok(Evaluation {
            objective: lp_norm(corr.sidelobe_magnitudes(), self.p),
            peak,
        })
    }

    fn transform_count(&self) -> u64 {
        self.ws.transform_count()
    }
}
