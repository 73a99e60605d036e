//! Seeded sweeps comparing the fast paths with the dense oracle. Each sweep
//! reports how many cases it ran, how many failed and the worst discrepancy.

use num_complex::Complex64;
use rand::Rng;
use seqforge::oracle::{
    build_B_dense, build_L_dense, build_R_dense, dense_mm_psl_step, dense_mwisl_diag_step,
    dense_mwisl_step, dft_matrix, eigset_check_phase_congruence, extreme_eigenvalues,
    hadamard_diag_identity_check, majorizer_quadratic, psd_check_row_sum_diag, DenseMatrix,
};
use seqforge::solvers::{
    lambda_max_l, mm_psl_majorizer, mm_psl_step, mwisl_diag_step, mwisl_step, normalized_curvature,
    precompute_diag,
};
use seqforge::{
    autocorr_direct, autocorrelation, random_unimodular, HermitianToeplitzSpec, SpectrumWorkspace,
    ToeplitzSpectrum, UnitModulusSequence, WeightVector,
};

use super::{max_abs_diff, random_complex, random_matrix, random_weights, rng};

#[derive(Debug, Clone)]
pub struct Sweep {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub worst: f64,
}

impl Sweep {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    /// Records one case whose discrepancy `err` must not exceed `tol`.
    fn check(&mut self, err: f64, tol: f64) {
        self.cases += 1;
        self.worst = self.worst.max(err);
        if err.is_nan() || err > tol {
            self.failures += 1;
        }
    }

    fn check_bool(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {}/{} ok, worst {:.1e}",
            self.name,
            self.cases - self.failures,
            self.cases,
            self.worst
        )
    }
}

fn random_sequence(n: usize, seed: u64) -> UnitModulusSequence {
    random_unimodular(n.max(2), seed)
        .map(|s| {
            if n == 1 {
                UnitModulusSequence::new(vec![s.phases()[0]]).unwrap()
            } else {
                s
            }
        })
        .unwrap()
}

/// FFT autocorrelation against the O(N²) sum, N ≤ 512, 100 seeds, 1e-10.
pub fn autocorrelation_fft_vs_direct() -> Sweep {
    let mut sweep = Sweep::new("FFT vs direct autocorrelation");
    let mut r = rng(1);
    for seed in 0..100 {
        let n = if seed < 4 {
            [1, 2, 511, 512][seed as usize]
        } else {
            r.gen_range(1..=512)
        };
        let seq = random_sequence(n, seed);
        let fast = autocorrelation(&seq).unwrap();
        let slow = autocorr_direct(&seq);
        sweep.check(max_abs_diff(fast.lags(), slow.lags()), 1e-10);
    }
    sweep
}

/// Dense DFT matrix against the FFT engine for transform sizes up to 16.
pub fn dense_dft_vs_fft() -> Sweep {
    let mut sweep = Sweep::new("dense DFT vs FFT");
    let mut r = rng(2);
    for n in 1..=8 {
        let mut ws = SpectrumWorkspace::new(n);
        let x = random_complex(2 * n, &mut r);
        let mut fast = x.clone();
        ws.forward(&mut fast);
        let slow = dft_matrix(2 * n).matvec(&x);
        sweep.check(max_abs_diff(&fast, &slow), 1e-10);
    }
    sweep
}

fn step_inputs(seed: u64) -> (Vec<Complex64>, WeightVector) {
    let mut r = rng(1000 + seed);
    let n = r.gen_range(2..=8);
    let x = random_unimodular(n, seed).unwrap().to_complex();
    (x, random_weights(n, &mut r))
}

/// One MWISL step, fast against dense, N ≤ 8, 1e-9 per element.
pub fn mwisl_step_equivalence() -> Sweep {
    let mut sweep = Sweep::new("MWISL step vs dense");
    for seed in 0..60 {
        let (x, w) = step_inputs(seed);
        let mut ws = SpectrumWorkspace::new(x.len());
        let fast = mwisl_step(&x, &w, lambda_max_l(&w).unwrap(), &mut ws)
            .unwrap()
            .next;
        let slow = dense_mwisl_step(&x, &w).unwrap();
        sweep.check(max_abs_diff(&fast, &slow), 1e-9);
    }
    sweep
}

/// One MWISL-Diag step, fast against dense, N ≤ 8, 1e-9 per element.
pub fn mwisl_diag_step_equivalence() -> Sweep {
    let mut sweep = Sweep::new("MWISL-Diag step vs dense");
    for seed in 0..60 {
        let (x, w) = step_inputs(seed);
        let mut ws = SpectrumWorkspace::new(x.len());
        let pre = precompute_diag(&w, &mut ws).unwrap();
        let fast = mwisl_diag_step(&x, &w, &pre, &mut ws).unwrap().next;
        let slow = dense_mwisl_diag_step(&x, &w).unwrap();
        sweep.check(max_abs_diff(&fast, &slow), 1e-9);
    }
    sweep
}

/// One MM-PSL step, fast against dense, N ≤ 8, several p, 1e-9 per element.
pub fn mm_psl_step_equivalence() -> Sweep {
    let mut sweep = Sweep::new("MM-PSL step vs dense");
    for seed in 0..60 {
        let (x, _) = step_inputs(seed);
        let p = [2.0, 3.0, 4.5, 8.0, 16.0][seed as usize % 5];
        let mut ws = SpectrumWorkspace::new(x.len());
        let fast = mm_psl_step(&x, p, &mut ws).unwrap().next;
        let slow = dense_mm_psl_step(&x, p).unwrap();
        sweep.check(max_abs_diff(&fast, &slow), 1e-9);
    }
    sweep
}

/// `max_k w_k(N-k)` against the largest eigenvalue of the dense lifted matrix.
pub fn lambda_l_closed_form() -> Sweep {
    let mut sweep = Sweep::new("λmax(L) closed form vs eigensolve");
    let mut r = rng(3);
    for _ in 0..50 {
        let n = r.gen_range(2..=8);
        let w = random_weights(n, &mut r);
        let closed = lambda_max_l(&w).unwrap();
        let dense = extreme_eigenvalues(&build_L_dense(&w).unwrap()).unwrap().1;
        sweep.check((closed - dense).abs() / (1.0 + closed), 1e-9);
    }
    sweep
}

/// Spectral upper bound against the largest eigenvalue of the dense weighted
/// correlation matrix, for WISL weights and for the MM-PSL weights `ŵ`.
pub fn lambda_u_brackets() -> Sweep {
    let mut sweep = Sweep::new("λ_u >= λmax(R)");
    let mut r = rng(4);
    for seed in 0..100 {
        let n = r.gen_range(2..=24);
        let seq = random_unimodular(n, seed).unwrap();
        let profile = autocorrelation(&seq).unwrap();
        let w = random_weights(n, &mut r);
        let dense = build_R_dense(&profile, &w).unwrap();
        let (lo, hi) = extreme_eigenvalues(&dense).unwrap();
        let column: Vec<Complex64> = (0..n)
            .map(|k| {
                if k == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    profile.lags()[k] * w.at(k)
                }
            })
            .collect();
        let spec = HermitianToeplitzSpec::new(column).unwrap();
        let mut ws = SpectrumWorkspace::new(n);
        let spectrum = ToeplitzSpectrum::from_spec(&spec, &mut ws).unwrap();
        let tol = 1e-9 * (1.0 + dense.frobenius_norm());
        // Excess of the true extreme eigenvalues beyond the bounds.
        sweep.check(
            (hi - spectrum.eig_upper_bound())
                .max(spectrum.eig_lower_bound() - lo)
                .max(0.0),
            tol,
        );

        let p = [2.0, 4.0, 10.0][seed as usize % 3];
        let coeffs = mm_psl_majorizer(&seq.to_complex(), p, &mut ws)
            .unwrap()
            .unwrap();
        let w_hat = WeightVector::new(coeffs.w_hat.clone()).unwrap();
        let dense_hat = build_R_dense(&profile, &w_hat).unwrap();
        let hi_hat = extreme_eigenvalues(&dense_hat).unwrap().1;
        let tol_hat = 1e-9 * (1.0 + dense_hat.frobenius_norm());
        sweep.check((hi_hat - coeffs.lambda_u).max(0.0), tol_hat);
    }
    sweep
}

/// `λ_B <= λmin(B)` and `B·1` against the dense product.
pub fn lambda_b_brackets() -> Sweep {
    let mut sweep = Sweep::new("λ_B <= λmin(B), B·1 vs dense");
    let mut r = rng(5);
    let mut cases: Vec<WeightVector> = (0..100)
        .map(|_| {
            let n = r.gen_range(2..=24);
            random_weights(n, &mut r)
        })
        .collect();
    cases.push(WeightVector::zones(100, &[(1, 20), (51, 70)]).unwrap());
    for w in cases {
        let n = w.seq_len();
        let mut ws = SpectrumWorkspace::new(n);
        let pre = precompute_diag(&w, &mut ws).unwrap();
        let b = build_B_dense(&w);
        let lo = extreme_eigenvalues(&b).unwrap().0;
        let tol = 1e-9 * (1.0 + b.frobenius_norm());
        sweep.check((pre.lambda_b - lo).max(0.0), tol);
        let b1 = b.matvec(&vec![Complex64::new(1.0, 0.0); n]);
        let err = pre
            .b1
            .iter()
            .zip(&b1)
            .map(|(f, d)| (Complex64::new(*f, 0.0) - d).norm())
            .fold(0.0, f64::max);
        sweep.check(err, tol);
    }
    sweep
}

fn random_nonnegative_symmetric(n: usize, r: &mut impl Rng) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = Complex64::new(r.gen_range(0.0..2.0), 0.0);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

/// `Diag(L·1) - L ⪰ 0` for nonnegative symmetric `L`, including lifted ones.
pub fn row_sum_diag_psd_sweep() -> Sweep {
    let mut sweep = Sweep::new("Diag(L1) - L is PSD");
    let mut r = rng(6);
    for _ in 0..100 {
        let n = r.gen_range(1..=10);
        let m = random_nonnegative_symmetric(n, &mut r);
        sweep.check_bool(psd_check_row_sum_diag(&m).unwrap());
    }
    for _ in 0..10 {
        let n = r.gen_range(2..=5);
        let l = build_L_dense(&random_weights(n, &mut r)).unwrap();
        sweep.check_bool(psd_check_row_sum_diag(&l).unwrap());
    }
    sweep
}

/// `(A∘B)x = diag(A·Diag(x)·Bᵀ)` on random complex data.
pub fn hadamard_identity_sweep() -> Sweep {
    let mut sweep = Sweep::new("Hadamard-product identity");
    let mut r = rng(7);
    for _ in 0..100 {
        let n = r.gen_range(1..=7);
        let a = random_matrix(n, n, &mut r);
        let b = random_matrix(n, n, &mut r);
        let x = random_complex(n, &mut r);
        sweep.check_bool(hadamard_diag_identity_check(&a, &b, &x));
    }
    sweep
}

/// `B` and `B∘(x xᴴ)` share eigenvalues for unit-modulus `x`.
pub fn phase_congruence_spectra_sweep() -> Sweep {
    let mut sweep = Sweep::new("B and B∘xxᴴ share eigenvalues");
    let mut r = rng(8);
    for seed in 0..100 {
        let n = r.gen_range(2..=10);
        let b = if seed % 2 == 0 {
            let t: Vec<f64> = (0..n).map(|_| r.gen_range(-1.0..1.0)).collect();
            DenseMatrix::from_fn(n, n, |i, j| Complex64::new(t[i.abs_diff(j)], 0.0))
        } else {
            let a = random_matrix(n, n, &mut r);
            &a + &a.adjoint()
        };
        let x = random_unimodular(n, seed).unwrap().to_complex();
        sweep.check_bool(eigset_check_phase_congruence(&b, &x).unwrap());
    }
    sweep
}

/// The quadratic majorizer dominates `z^p` on `[0, t]`, touches at `x0`,
/// and its curvature matches the solver's normalized curvature.
pub fn majorizer_dominance_sweep() -> Sweep {
    let mut sweep = Sweep::new("quadratic majorizer dominance");
    let mut r = rng(9);
    for _ in 0..100 {
        let t: f64 = r.gen_range(0.5..5.0);
        let x0 = t * r.gen_range(0.0..0.98);
        let p = r.gen_range(2.0..50.0);
        let (a, lin, c) = majorizer_quadratic(x0, t, p).unwrap();
        let scale = t.powf(p).max(1.0);
        let g = |z: f64| a * z * z + lin * z + c;
        let worst_violation = (0..=1000)
            .map(|i| t * i as f64 / 1000.0)
            .map(|z| z.powf(p) - g(z))
            .fold(f64::NEG_INFINITY, f64::max);
        sweep.check(worst_violation.max(0.0) / scale, 1e-9);
        sweep.check((g(x0) - x0.powf(p)).abs() / scale, 1e-9);
        let solver_a = normalized_curvature(x0, t, p) * t.powf(p);
        sweep.check((solver_a - a).abs() / a.abs().max(1e-300), 1e-8);
    }
    sweep
}

pub fn all() -> Vec<Sweep> {
    vec![
        autocorrelation_fft_vs_direct(),
        dense_dft_vs_fft(),
        mwisl_step_equivalence(),
        mwisl_diag_step_equivalence(),
        mm_psl_step_equivalence(),
        lambda_l_closed_form(),
        lambda_u_brackets(),
        lambda_b_brackets(),
        row_sum_diag_psd_sweep(),
        hadamard_identity_sweep(),
        phase_congruence_spectra_sweep(),
        majorizer_dominance_sweep(),
    ]
}
