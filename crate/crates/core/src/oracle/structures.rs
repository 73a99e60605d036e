//! Literal dense constructions of the shift, lifted-weight, correlation and
//! DFT matrices, and dense reference versions of the three MM steps.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::dense::DenseMatrix;
use crate::corr::{autocorr_direct, CorrelationProfile, UnitModulusSequence, WeightVector};
use crate::error::{Error, Result};

/// Largest N for the N²×N² lifted matrices.
pub const LIFTED_CAP: usize = 8;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Shift matrix `U_k` (N×N) with ones at `(i, i+k)`; `U_{-k} = U_kᵀ`, so
/// `r_k = Tr(U_k x xᴴ)`.
#[allow(non_snake_case)]
pub fn build_shift_U(n: usize, k: isize) -> Result<DenseMatrix> {
    if k.unsigned_abs() >= n.max(1) {
        return Err(Error::InvalidConfig(format!(
            "lag {k} outside 1-N..N-1 for N = {n}"
        )));
    }
    Ok(DenseMatrix::from_fn(n, n, |i, j| {
        if j as isize - i as isize == k {
            ONE
        } else {
            ZERO
        }
    }))
}

fn vec_col_major(m: &DenseMatrix) -> Vec<Complex64> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            v.push(m[(i, j)]);
        }
    }
    v
}

/// `L = Σ_k w_k vec(U_k) vec(U_k)ᴴ` over `k = 1-N ..= N-1` with `w_{-k} = w_k`
/// and `w_0 = 0`. Only for N ≤ [`LIFTED_CAP`].
#[allow(non_snake_case)]
pub fn build_L_dense(weights: &WeightVector) -> Result<DenseMatrix> {
    let n = weights.seq_len();
    if n > LIFTED_CAP {
        return Err(Error::OracleCap {
            what: "build_L_dense",
            cap: LIFTED_CAP,
            n,
        });
    }
    let mut l = DenseMatrix::zeros(n * n, n * n);
    for k in 1..n as isize {
        let w = weights.at(k as usize);
        for lag in [k, -k] {
            let v = vec_col_major(&build_shift_U(n, lag)?);
            l = &l + &DenseMatrix::outer(&v, &v).scale(Complex64::new(w, 0.0));
        }
    }
    Ok(l)
}

/// `R = Σ_{k≠0} w_{|k|} r_{-k} U_k`, the weighted Hermitian Toeplitz matrix
/// with zero diagonal; entry `(m, n)` is `w_{|m-n|} r_{m-n}`.
#[allow(non_snake_case)]
pub fn build_R_dense(profile: &CorrelationProfile, weights: &WeightVector) -> Result<DenseMatrix> {
    let n = profile.len();
    if weights.seq_len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: weights.seq_len(),
        });
    }
    let mut r = DenseMatrix::zeros(n, n);
    for k in 1..n as isize {
        let w = weights.at(k as usize);
        for lag in [k, -k] {
            let coeff = profile.at(-lag) * w;
            r = &r + &build_shift_U(n, lag)?.scale(coeff);
        }
    }
    Ok(r)
}

/// Toeplitz matrix with entries `w_{|m-n|}(N - |m-n|)` off the diagonal and
/// zeros on it.
#[allow(non_snake_case)]
pub fn build_B_dense(weights: &WeightVector) -> DenseMatrix {
    let n = weights.seq_len();
    DenseMatrix::from_fn(n, n, |i, j| {
        let k = i.abs_diff(j);
        if k == 0 {
            ZERO
        } else {
            Complex64::new(weights.at(k) * (n - k) as f64, 0.0)
        }
    })
}

/// `size×size` DFT matrix with kernel `e^{-i2πmn/size}`, unnormalized.
pub fn dft_matrix(size: usize) -> DenseMatrix {
    DenseMatrix::from_fn(size, size, |m, n| {
        Complex64::from_polar(1.0, -TAU * ((m * n) % size) as f64 / size as f64)
    })
}

/// First column of the 2N circulant that embeds a Hermitian Toeplitz matrix.
fn circulant_column(m: &DenseMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut c = vec![ZERO; 2 * n];
    for k in 0..n {
        c[k] = m[(k, 0)];
    }
    for k in 1..n {
        c[2 * n - k] = m[(0, k)];
    }
    c
}

fn dense_embedding_spectrum(m: &DenseMatrix) -> Vec<f64> {
    let c = circulant_column(m);
    dft_matrix(c.len())
        .matvec(&c)
        .iter()
        .map(|v| v.re)
        .collect()
}

fn split(mu: &[f64], pick: fn(f64, f64) -> f64, init: f64) -> f64 {
    let a = mu.iter().step_by(2).fold(init, |acc, &v| pick(acc, v));
    let b = mu
        .iter()
        .skip(1)
        .step_by(2)
        .fold(init, |acc, &v| pick(acc, v));
    0.5 * (a + b)
}

/// Even/odd split upper bound evaluated through a dense DFT of the
/// circulant embedding of `m`.
pub fn dense_upper_bound(m: &DenseMatrix) -> f64 {
    split(&dense_embedding_spectrum(m), f64::max, f64::NEG_INFINITY)
}

/// Lower-bound counterpart of [`dense_upper_bound`].
pub fn dense_lower_bound(m: &DenseMatrix) -> f64 {
    split(&dense_embedding_spectrum(m), f64::min, f64::INFINITY)
}

/// Smallest and largest eigenvalue of a Hermitian matrix.
pub fn extreme_eigenvalues(m: &DenseMatrix) -> Result<(f64, f64)> {
    let eig = m.hermitian_eigenvalues()?;
    Ok((eig[0], eig[eig.len() - 1]))
}

fn project(y: &[Complex64], x: &[Complex64]) -> Vec<Complex64> {
    y.iter()
        .zip(x)
        .map(|(yi, xi)| {
            if yi.norm() == 0.0 {
                *xi
            } else {
                yi / yi.norm()
            }
        })
        .collect()
}

fn profile_of(x: &[Complex64]) -> Result<CorrelationProfile> {
    Ok(autocorr_direct(&UnitModulusSequence::from_complex(x)?))
}

/// Dense MWISL step `y = x - R x / (λmax(L)·N + λ_u)` with `λmax(L)` from an
/// eigensolve of the dense `L`.
pub fn dense_mwisl_step(x: &[Complex64], weights: &WeightVector) -> Result<Vec<Complex64>> {
    let n = x.len();
    let lambda_l = extreme_eigenvalues(&build_L_dense(weights)?)?.1;
    let r = build_R_dense(&profile_of(x)?, weights)?;
    let lambda_u = dense_upper_bound(&r);
    let rx = r.matvec(x);
    let denom = lambda_l * n as f64 + lambda_u;
    let y: Vec<Complex64> = x.iter().zip(&rx).map(|(xi, ri)| xi - ri / denom).collect();
    Ok(project(&y, x))
}

/// Dense MWISL-Diag step `ỹ = x + ((B·1)∘x - R x) / (λ_u - λ_B)`.
pub fn dense_mwisl_diag_step(x: &[Complex64], weights: &WeightVector) -> Result<Vec<Complex64>> {
    let n = x.len();
    let b = build_B_dense(weights);
    let b1 = b.matvec(&vec![ONE; n]);
    let lambda_b = dense_lower_bound(&b);
    let r = build_R_dense(&profile_of(x)?, weights)?;
    let lambda_u = dense_upper_bound(&r);
    let rx = r.matvec(x);
    let denom = lambda_u - lambda_b;
    let y: Vec<Complex64> = (0..n)
        .map(|i| x[i] + (b1[i] * x[i] - rx[i]) / denom)
        .collect();
    Ok(project(&y, x))
}

/// Unnormalized majorizer data for `Σ|r_k|^p`: curvatures `a_k`, linear
/// terms `b_k` and combined weights `ŵ_k = a_k + b_k/(2|r_k|)`.
pub fn dense_psl_coefficients(
    profile: &CorrelationProfile,
    p: f64,
) -> (Vec<f64>, Vec<f64>, Vec<f64>, f64) {
    let mags: Vec<f64> = profile.sidelobe_magnitudes().collect();
    let t = mags.iter().map(|m| m.powf(p)).sum::<f64>().powf(1.0 / p);
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut w = Vec::new();
    for &m in &mags {
        // At |r_k| = t the closed form is 0/0; its limit is p(p-1)t^{p-2}/2.
        let ak = if t - m <= 1e-12 * t {
            0.5 * p * (p - 1.0) * t.powf(p - 2.0)
        } else {
            super::checks::majorizer_quadratic(m, t, p).map_or(f64::NAN, |q| q.0)
        };
        let bk = p * m.powf(p - 1.0) - 2.0 * ak * m;
        let wk = if m > 0.0 {
            ak + bk / (2.0 * m)
        } else if p == 2.0 {
            1.0
        } else {
            0.0
        };
        a.push(ak);
        b.push(bk);
        w.push(wk);
    }
    (a, b, w, t)
}

/// Dense MM-PSL step with unnormalized coefficients; `λmax(L)` for the
/// curvature weights comes from an eigensolve.
pub fn dense_mm_psl_step(x: &[Complex64], p: f64) -> Result<Vec<Complex64>> {
    let n = x.len();
    let profile = profile_of(x)?;
    let (a, _, w_hat, _) = dense_psl_coefficients(&profile, p);
    let lambda_l = extreme_eigenvalues(&build_L_dense(&WeightVector::new(a)?)?)?.1;
    let r = build_R_dense(&profile, &WeightVector::new(w_hat)?)?;
    let lambda_u = dense_upper_bound(&r);
    let rx = r.matvec(x);
    let denom = lambda_l * n as f64 + lambda_u;
    let y: Vec<Complex64> = x.iter().zip(&rx).map(|(xi, ri)| xi - ri / denom).collect();
    Ok(project(&y, x))
}
