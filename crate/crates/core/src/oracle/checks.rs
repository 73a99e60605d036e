//! Matrix identities and inequalities behind the MM majorizers, checked
//! numerically, plus the scalar quadratic majorizer and a finite-difference
//! WISL gradient.

use num_complex::Complex64;

use super::dense::DenseMatrix;
use crate::corr::{autocorr_direct, wisl, UnitModulusSequence, WeightVector};
use crate::error::{Error, Result};

/// Whether `Diag(L·1) - L` is positive semidefinite, i.e. its smallest
/// eigenvalue is at least `-1e-9·‖L‖_F`. `L` must be real symmetric with
/// nonnegative entries.
pub fn psd_check_row_sum_diag(l: &DenseMatrix) -> Result<bool> {
    if !l.is_real() || !l.is_hermitian(0.0) {
        return Err(Error::InvalidConfig(
            "expected a real symmetric matrix".into(),
        ));
    }
    let n = l.rows();
    if (0..n).any(|i| (0..n).any(|j| l[(i, j)].re < 0.0)) {
        return Err(Error::InvalidConfig("expected nonnegative entries".into()));
    }
    let row_sums = l.matvec(&vec![Complex64::new(1.0, 0.0); n]);
    let d = &DenseMatrix::diag(&row_sums) - l;
    let min = d.hermitian_eigenvalues()?[0];
    Ok(min >= -1e-9 * l.frobenius_norm())
}

/// Whether `(A∘B)x = diag(A·Diag(x)·Bᵀ)` holds to `1e-10` relative to the
/// magnitude of the result.
pub fn hadamard_diag_identity_check(a: &DenseMatrix, b: &DenseMatrix, x: &[Complex64]) -> bool {
    let lhs = a.hadamard(b).matvec(x);
    let rhs = (&(a * &DenseMatrix::diag(x)) * &b.transpose()).diagonal();
    let scale = 1.0 + lhs.iter().map(|v| v.norm()).fold(0.0, f64::max);
    lhs.iter()
        .zip(&rhs)
        .all(|(l, r)| (l - r).norm() <= 1e-10 * scale)
}

/// Whether `B` and `B∘(x xᴴ)` have the same eigenvalues (to `1e-8` relative
/// to `‖B‖_F`) for Hermitian `B` and unit-modulus `x`, N ≤ 10.
pub fn eigset_check_phase_congruence(b: &DenseMatrix, x: &[Complex64]) -> Result<bool> {
    const CAP: usize = 10;
    if b.rows() > CAP {
        return Err(Error::OracleCap {
            what: "eigset_check_phase_congruence",
            cap: CAP,
            n: b.rows(),
        });
    }
    if x.iter().any(|v| (v.norm() - 1.0).abs() > 1e-12) {
        return Err(Error::InvalidConfig("x must be unit-modulus".into()));
    }
    let lhs = b.hermitian_eigenvalues()?;
    let rhs = b
        .hadamard(&DenseMatrix::outer(x, x))
        .hermitian_eigenvalues()?;
    let tol = 1e-8 * (1.0 + b.frobenius_norm());
    Ok(lhs.iter().zip(&rhs).all(|(l, r)| (l - r).abs() <= tol))
}

/// Quadratic `g(z) = a z² + lin·z + c` that touches `z^p` at `x0` and
/// dominates it on `[0, t]`:
/// `a = (t^p - x0^p - p x0^{p-1}(t - x0)) / (t - x0)²`.
/// Returns `(a, lin, c)`.
pub fn majorizer_quadratic(x0: f64, t: f64, p: f64) -> Result<(f64, f64, f64)> {
    if !(t > 0.0) || !(0.0..t).contains(&x0) || !(p >= 2.0) {
        return Err(Error::InvalidConfig(format!(
            "need 0 <= x0 < t and p >= 2, got x0 = {x0}, t = {t}, p = {p}"
        )));
    }
    let d = t - x0;
    let a = if d < 0.1 * t {
        curvature_binomial(x0, d, p)
    } else {
        (t.powf(p) - x0.powf(p) - p * x0.powf(p - 1.0) * d) / (d * d)
    };
    let lin = p * x0.powf(p - 1.0) - 2.0 * a * x0;
    let c = a * x0 * x0 - (p - 1.0) * x0.powf(p);
    Ok((a, lin, c))
}

/// The closed form cancels badly as `x0 → t`. Expanding `(x0 + d)^p` around
/// `x0` gives `a = Σ_{j≥2} C(p,j) x0^{p-j} d^{j-2}`, which converges for
/// `d < x0`.
fn curvature_binomial(x0: f64, d: f64, p: f64) -> f64 {
    let ratio = d / x0;
    // Term j carries C(p,j) (d/x0)^{j-2} relative to x0^{p-2}.
    let mut term = 0.5 * p * (p - 1.0);
    let mut sum = term;
    let mut j = 2.0;
    while j < 2000.0 {
        term *= (p - j) / (j + 1.0) * ratio;
        sum += term;
        if term == 0.0 || (term.abs() < 1e-18 * sum.abs() && j > p) {
            break;
        }
        j += 1.0;
    }
    sum * x0.powf(p - 2.0)
}

/// Central-difference gradient of WISL with respect to each phase, computed
/// from the direct O(N²) correlations.
pub fn wisl_phase_gradient_fd(
    seq: &UnitModulusSequence,
    weights: &WeightVector,
    h: f64,
) -> Result<Vec<f64>> {
    if !(h > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "step must be positive, got {h}"
        )));
    }
    let eval = |phases: Vec<f64>| -> Result<f64> {
        wisl(
            &autocorr_direct(&UnitModulusSequence::new(phases)?),
            weights,
        )
    };
    let base = seq.phases();
    (0..seq.len())
        .map(|i| {
            let mut plus = base.to_vec();
            let mut minus = base.to_vec();
            plus[i] += h;
            minus[i] -= h;
            Ok((eval(plus)? - eval(minus)?) / (2.0 * h))
        })
        .collect()
}
