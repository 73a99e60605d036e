//! Aperiodic autocorrelation through a size-2N FFT, plus the sidelobe metrics
//! (ISL, WISL, PSL, ℓp and correlation level) built on top of it.
//!
//! The DFT convention is fixed: the forward kernel is `e^{-i2πmn/(2N)}` and is
//! unnormalized, the adjoint is its conjugate transpose (also unnormalized), and
//! the inverse is the adjoint scaled by `1/(2N)`.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Floor used by [`correlation_level`] for lags whose correlation is exactly zero.
pub const DEFAULT_LEVEL_FLOOR_DB: f64 = -200.0;

/// Relative threshold for the imaginary residue of quantities that are real in
/// exact arithmetic.
pub(crate) const IMAG_RESIDUE_REL: f64 = 1e-8;

/// A unit-modulus (polyphase) sequence stored by its phases in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitModulusSequence {
    phases: Vec<f64>,
}

impl UnitModulusSequence {
    pub fn new(phases: Vec<f64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::InvalidLength {
                len: 0,
                reason: "a sequence needs at least one element",
            });
        }
        if phases.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidConfig("phases must be finite".into()));
        }
        Ok(Self { phases })
    }

    /// Projects arbitrary nonzero complex values onto the unit circle.
    /// Zero entries map to phase 0.
    pub fn from_complex(values: &[Complex64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|v| if v.norm() == 0.0 { 0.0 } else { v.arg() })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn into_phases(self) -> Vec<f64> {
        self.phases
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&p| Complex64::from_polar(1.0, p))
            .collect()
    }

    /// Multiplies every element by `e^{iθ}`.
    pub fn rotated(&self, theta: f64) -> Self {
        Self {
            phases: self.phases.iter().map(|p| (p + theta) % TAU).collect(),
        }
    }
}

/// Aperiodic autocorrelations `r_0 .. r_{N-1}`; negative lags are `conj(r_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    r: Vec<Complex64>,
}

impl CorrelationProfile {
    pub fn new(r: Vec<Complex64>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidLength {
                len: 0,
                reason: "a profile needs at least lag 0",
            });
        }
        Ok(Self { r })
    }

    pub fn from_real(r: &[f64]) -> Result<Self> {
        Self::new(r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Number of non-negative lags, i.e. the sequence length N.
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn lags(&self) -> &[Complex64] {
        &self.r
    }

    /// Correlation at a signed lag.
    pub fn at(&self, lag: isize) -> Complex64 {
        if lag >= 0 {
            self.r[lag as usize]
        } else {
            self.r[(-lag) as usize].conj()
        }
    }

    /// Sidelobe magnitudes `|r_1| .. |r_{N-1}|`.
    pub fn sidelobe_magnitudes(&self) -> impl Iterator<Item = f64> + Clone + '_ {
        self.r.iter().skip(1).map(|v| v.norm())
    }
}

/// Nonnegative lag weights `w_1 .. w_{N-1}`; `w_0 = 0` and `w_{-k} = w_k` are implied.
///
/// All-zero vectors are representable (the WISL of any sequence is then zero);
/// the solvers reject them because the MM update has no positive curvature.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    w: Vec<f64>,
}

impl WeightVector {
    pub fn new(w: Vec<f64>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights(
                "need at least one lag (sequence length >= 2)".into(),
            ));
        }
        if let Some((k, v)) = w
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidWeights(format!(
                "w_{} = {v} is not a finite nonnegative number",
                k + 1
            )));
        }
        Ok(Self { w })
    }

    /// Unit weights on every lag, which turns WISL into ISL.
    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n.saturating_sub(1)])
    }

    /// Weight 1 on the listed inclusive lag ranges and 0 elsewhere.
    pub fn zones(n: usize, ranges: &[(usize, usize)]) -> Result<Self> {
        let mut w = vec![0.0; n.saturating_sub(1)];
        for &(lo, hi) in ranges {
            if lo == 0 || hi >= n || lo > hi {
                return Err(Error::InvalidWeights(format!(
                    "lag range {lo}..={hi} outside 1..={}",
                    n.saturating_sub(1)
                )));
            }
            w[lo - 1..hi].iter_mut().for_each(|v| *v = 1.0);
        }
        Self::new(w)
    }

    /// Sequence length N these weights apply to.
    pub fn seq_len(&self) -> usize {
        self.w.len() + 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }

    /// Weight at lag `k` in `1..N`.
    pub fn at(&self, k: usize) -> f64 {
        self.w[k - 1]
    }

    pub fn has_positive(&self) -> bool {
        self.w.iter().any(|&v| v > 0.0)
    }

    /// Symmetric length-2N extension `[0, w_1 .. w_{N-1}, 0, w_{N-1} .. w_1]`.
    pub fn symmetric_extension(&self) -> Vec<f64> {
        symmetric_extension(&self.w)
    }
}

/// `[0, v_1 .. v_{N-1}, 0, v_{N-1} .. v_1]` for `v` holding lags `1..N`.
pub(crate) fn symmetric_extension(v: &[f64]) -> Vec<f64> {
    let n = v.len() + 1;
    let mut out = vec![0.0; 2 * n];
    for (i, &w) in v.iter().enumerate() {
        out[i + 1] = w;
        out[2 * n - 1 - i] = w;
    }
    out
}

/// FFT plans and scratch for transforms of size 2N.
///
/// A workspace is single-consumer mutable state; create one per thread.
/// Every transform executed through it is counted.
pub struct SpectrumWorkspace {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    adjoint: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
    transforms: u64,
}

impl std::fmt::Debug for SpectrumWorkspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectrumWorkspace")
            .field("n", &self.n)
            .field("transforms", &self.transforms)
            .finish()
    }
}

impl SpectrumWorkspace {
    /// Workspace for sequences of length `n` (transform size `2n`).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "workspace needs a positive sequence length");
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(2 * n);
        let adjoint = planner.plan_fft_inverse(2 * n);
        let scratch_len = forward
            .get_inplace_scratch_len()
            .max(adjoint.get_inplace_scratch_len());
        Self {
            n,
            forward,
            adjoint,
            scratch: vec![Complex64::new(0.0, 0.0); scratch_len],
            transforms: 0,
        }
    }

    pub fn seq_len(&self) -> usize {
        self.n
    }

    /// Transform size 2N.
    pub fn size(&self) -> usize {
        2 * self.n
    }

    /// Number of size-2N transforms executed so far.
    pub fn transform_count(&self) -> u64 {
        self.transforms
    }

    pub fn reset_count(&mut self) {
        self.transforms = 0;
    }

    /// In-place `F·v`.
    pub fn forward(&mut self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.size());
        self.forward.process_with_scratch(buf, &mut self.scratch);
        self.transforms += 1;
    }

    /// In-place `Fᴴ·v` without the `1/(2N)` factor.
    pub fn adjoint(&mut self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.size());
        self.adjoint.process_with_scratch(buf, &mut self.scratch);
        self.transforms += 1;
    }

    /// In-place `Fᴴ·v / (2N)`, the exact inverse of [`forward`](Self::forward).
    pub fn inverse(&mut self, buf: &mut [Complex64]) {
        self.adjoint(buf);
        let scale = 1.0 / self.size() as f64;
        buf.iter_mut().for_each(|v| *v *= scale);
    }

    /// `[x; 0_N]` as a fresh length-2N buffer.
    pub fn zero_padded(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n);
        let mut buf = vec![Complex64::new(0.0, 0.0); self.size()];
        buf[..self.n].copy_from_slice(x);
        buf
    }

    /// Computes `f = F[x; 0]` and the full correlation vector
    /// `[r_0 .. r_{N-1}, 0, r_{1-N} .. r_{-1}] = Fᴴ|f|² / (2N)` with two transforms.
    pub fn correlate(&mut self, x: &[Complex64]) -> SpectralCorrelation {
        let mut spectrum = self.zero_padded(x);
        self.forward(&mut spectrum);
        let mut lags: Vec<Complex64> = spectrum
            .iter()
            .map(|f| Complex64::new(f.norm_sqr(), 0.0))
            .collect();
        self.inverse(&mut lags);
        SpectralCorrelation { spectrum, lags }
    }
}

/// Output of [`SpectrumWorkspace::correlate`].
#[derive(Debug, Clone)]
pub struct SpectralCorrelation {
    /// `F[x; 0]`.
    pub spectrum: Vec<Complex64>,
    /// Length-2N correlation vector, negative lags wrapped to the tail.
    pub lags: Vec<Complex64>,
}

impl SpectralCorrelation {
    pub fn seq_len(&self) -> usize {
        self.lags.len() / 2
    }

    /// Sidelobe magnitudes `|r_1| .. |r_{N-1}|`.
    pub fn sidelobe_magnitudes(&self) -> impl Iterator<Item = f64> + Clone + '_ {
        self.lags[1..self.seq_len()].iter().map(|v| v.norm())
    }

    pub fn peak_sidelobe(&self) -> f64 {
        self.sidelobe_magnitudes().fold(0.0, f64::max)
    }

    pub fn weighted_isl(&self, weights: &[f64]) -> f64 {
        self.lags[1..self.seq_len()]
            .iter()
            .zip(weights)
            .map(|(r, w)| w * r.norm_sqr())
            .sum()
    }
}

/// Checks that a mathematically real value has a negligible imaginary part and
/// returns its real part.
pub(crate) fn real_part_checked(v: Complex64, scale: f64, what: &str) -> Result<f64> {
    if v.im.abs() > IMAG_RESIDUE_REL * scale.max(1.0) {
        return Err(Error::Numerical(format!(
            "{what} has imaginary residue {:e} (scale {scale:e})",
            v.im
        )));
    }
    Ok(v.re)
}

/// Aperiodic autocorrelation through the FFT identity `r = Fᴴ|F[x;0]|² / (2N)`.
pub fn autocorrelation(seq: &UnitModulusSequence) -> Result<CorrelationProfile> {
    let mut ws = SpectrumWorkspace::new(seq.len());
    autocorrelation_with(seq, &mut ws)
}

/// [`autocorrelation`] reusing a caller-owned workspace.
pub fn autocorrelation_with(
    seq: &UnitModulusSequence,
    ws: &mut SpectrumWorkspace,
) -> Result<CorrelationProfile> {
    let n = seq.len();
    if ws.seq_len() != n {
        return Err(Error::LengthMismatch {
            expected: ws.seq_len(),
            actual: n,
        });
    }
    let SpectralCorrelation { mut lags, .. } = ws.correlate(&seq.to_complex());
    let structural_zero = lags[n].norm();
    let zero_tol = 1e-9 * (n as f64 / 1e4).max(1.0);
    if structural_zero > zero_tol {
        return Err(Error::Numerical(format!(
            "correlation bin N = {n} should vanish, got magnitude {structural_zero:e}"
        )));
    }
    let r0 = real_part_checked(lags[0], n as f64, "r_0")?;
    lags.truncate(n);
    lags[0] = Complex64::new(r0, 0.0);
    CorrelationProfile::new(lags)
}

/// Literal O(N²) evaluation of `r_k = Σ_{n} x_n* x_{n+k}`.
pub fn autocorr_direct(seq: &UnitModulusSequence) -> CorrelationProfile {
    let x = seq.to_complex();
    let n = x.len();
    let r = (0..n)
        .map(|k| (0..n - k).map(|i| x[i].conj() * x[i + k]).sum())
        .collect();
    CorrelationProfile { r }
}

/// Integrated sidelobe level `Σ_{k≥1} |r_k|²`.
pub fn isl(profile: &CorrelationProfile) -> f64 {
    profile.r.iter().skip(1).map(|v| v.norm_sqr()).sum()
}

/// Peak sidelobe level `max_{k≥1} |r_k|`.
pub fn psl(profile: &CorrelationProfile) -> f64 {
    profile.sidelobe_magnitudes().fold(0.0, f64::max)
}

/// Weighted integrated sidelobe level `Σ_{k≥1} w_k |r_k|²`.
pub fn wisl(profile: &CorrelationProfile, weights: &WeightVector) -> Result<f64> {
    if weights.seq_len() != profile.len() {
        return Err(Error::LengthMismatch {
            expected: profile.len(),
            actual: weights.seq_len(),
        });
    }
    Ok(profile
        .r
        .iter()
        .skip(1)
        .zip(&weights.w)
        .map(|(r, w)| w * r.norm_sqr())
        .sum())
}

/// ℓp-norm of the sidelobe magnitudes, `(Σ_{k≥1} |r_k|^p)^{1/p}`.
pub fn lp_metric(profile: &CorrelationProfile, p: f64) -> f64 {
    lp_norm(profile.sidelobe_magnitudes(), p)
}

/// ℓp norm of nonnegative magnitudes, scaled by the maximum so that large `p`
/// neither overflows nor underflows.
pub(crate) fn lp_norm(mags: impl Iterator<Item = f64> + Clone, p: f64) -> f64 {
    let peak = mags.clone().fold(0.0, f64::max);
    if peak == 0.0 {
        return 0.0;
    }
    let sum: f64 = mags.map(|m| (m / peak).powf(p)).sum();
    peak * sum.powf(1.0 / p)
}

/// `20·log10(|r_k| / r_0)` for lags `1-N ..= N-1`, with exact zeros mapped to
/// [`DEFAULT_LEVEL_FLOOR_DB`].
pub fn correlation_level(profile: &CorrelationProfile) -> Vec<f64> {
    correlation_level_with_floor(profile, DEFAULT_LEVEL_FLOOR_DB)
}

/// [`correlation_level`] with a caller-chosen floor. Index `i` holds lag `i - (N-1)`.
pub fn correlation_level_with_floor(profile: &CorrelationProfile, floor_db: f64) -> Vec<f64> {
    let n = profile.len() as isize;
    let r0 = profile.r[0].norm();
    (1 - n..n)
        .map(|k| {
            let mag = profile.at(k).norm();
            if mag == 0.0 || r0 == 0.0 {
                floor_db
            } else {
                (20.0 * (mag / r0).log10()).max(floor_db)
            }
        })
        .collect()
}
