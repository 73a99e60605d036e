//! Hermitian Toeplitz matrices through their 2N circulant embedding: FFT
//! matrix-vector products and the even/odd spectral bounds on the extreme
//! eigenvalues.

use num_complex::Complex64;

use crate::corr::{real_part_checked, SpectrumWorkspace};
use crate::error::{Error, Result};

/// N×N Hermitian Toeplitz matrix given by its first column `t_0 .. t_{N-1}`
/// (`t_0` real); the first row is the conjugate of the first column.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianToeplitzSpec {
    t: Vec<Complex64>,
}

impl HermitianToeplitzSpec {
    pub fn new(t: Vec<Complex64>) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::InvalidLength {
                len: 0,
                reason: "Toeplitz matrix needs at least one column entry",
            });
        }
        if t[0].im != 0.0 {
            return Err(Error::InvalidConfig(format!(
                "t_0 must be real, got imaginary part {}",
                t[0].im
            )));
        }
        Ok(Self { t })
    }

    pub fn from_real(t: &[f64]) -> Result<Self> {
        Self::new(t.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn first_column(&self) -> &[Complex64] {
        &self.t
    }

    /// Entry `(m, n)`: `t_{m-n}` below the diagonal and `conj(t_{n-m})` above.
    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        if m >= n {
            self.t[m - n]
        } else {
            self.t[n - m].conj()
        }
    }

    /// First column of the 2N circulant, `[t_0 .. t_{N-1}, 0, conj(t_{N-1}) .. conj(t_1)]`.
    pub fn embed(&self) -> Vec<Complex64> {
        let n = self.t.len();
        let mut c = vec![Complex64::new(0.0, 0.0); 2 * n];
        c[..n].copy_from_slice(&self.t);
        for k in 1..n {
            c[2 * n - k] = self.t[k].conj();
        }
        c
    }
}

/// Real spectrum `μ = F·c` of a Hermitian circulant embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSpectrum {
    mu: Vec<f64>,
}

impl ToeplitzSpectrum {
    pub fn from_spec(spec: &HermitianToeplitzSpec, ws: &mut SpectrumWorkspace) -> Result<Self> {
        if ws.seq_len() != spec.len() {
            return Err(Error::LengthMismatch {
                expected: ws.seq_len(),
                actual: spec.len(),
            });
        }
        let mut c = spec.embed();
        let scale: f64 = spec.t.iter().map(|v| v.norm()).sum();
        ws.forward(&mut c);
        let mu = c
            .into_iter()
            .map(|v| real_part_checked(v, scale, "embedding spectrum"))
            .collect::<Result<_>>()?;
        Ok(Self { mu })
    }

    /// Wraps an already-computed real spectrum of length 2N.
    pub fn from_values(mu: Vec<f64>) -> Result<Self> {
        if mu.len() < 2 || mu.len() % 2 != 0 {
            return Err(Error::InvalidLength {
                len: mu.len(),
                reason: "spectrum length must be 2N with N >= 1",
            });
        }
        Ok(Self { mu })
    }

    pub fn values(&self) -> &[f64] {
        &self.mu
    }

    pub fn eig_upper_bound(&self) -> f64 {
        upper_bound(&self.mu)
    }

    pub fn eig_lower_bound(&self) -> f64 {
        lower_bound(&self.mu)
    }
}

// The bound pairs the largest (smallest) spectrum value over the even bins with
// the one over the odd bins. With 1-based indexing μ_1 = mu[0], so μ_{2i-1}
// lives at even storage indices and μ_{2i} at odd ones; the sum is symmetric in
// the two groups.

/// `(max_even μ + max_odd μ) / 2`, an upper bound on λmax of the embedded matrix.
pub fn upper_bound(mu: &[f64]) -> f64 {
    let (even, odd) = split_fold(mu, f64::NEG_INFINITY, f64::max);
    0.5 * (even + odd)
}

/// `(min_even μ + min_odd μ) / 2`, a lower bound on λmin of the embedded matrix.
pub fn lower_bound(mu: &[f64]) -> f64 {
    let (even, odd) = split_fold(mu, f64::INFINITY, f64::min);
    0.5 * (even + odd)
}

fn split_fold(mu: &[f64], init: f64, f: fn(f64, f64) -> f64) -> (f64, f64) {
    let even = mu.iter().step_by(2).copied().fold(init, f);
    let odd = mu.iter().skip(1).step_by(2).copied().fold(init, f);
    (even, odd)
}

/// `T·x` via `Fᴴ Diag(F c) F [x; 0] / (2N)`, keeping the first N entries.
pub fn toeplitz_matvec(
    spec: &HermitianToeplitzSpec,
    x: &[Complex64],
    ws: &mut SpectrumWorkspace,
) -> Result<Vec<Complex64>> {
    let n = spec.len();
    if x.len() != n || ws.seq_len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: if x.len() != n { x.len() } else { ws.seq_len() },
        });
    }
    let mut c = spec.embed();
    ws.forward(&mut c);
    let mut buf = ws.zero_padded(x);
    ws.forward(&mut buf);
    buf.iter_mut().zip(&c).for_each(|(b, m)| *b *= m);
    ws.inverse(&mut buf);
    buf.truncate(n);
    Ok(buf)
}
