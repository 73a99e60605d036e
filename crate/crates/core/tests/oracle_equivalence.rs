//! Fast paths against the dense oracle: seeded sweeps plus property tests.

mod common;

use common::suite;

use proptest::prelude::*;
use seqforge::oracle::{majorizer_quadratic, wisl_phase_gradient_fd};
use seqforge::solvers::{lambda_max_l, mm_psl_majorizer, mwisl_step};
use seqforge::{
    autocorr_direct, autocorrelation, wisl, SpectrumWorkspace, UnitModulusSequence, WeightVector,
};

fn assert_sweep(s: suite::Sweep) {
    assert!(s.passed(), "{}", s.summary());
}

#[test]
fn autocorrelation_matches_direct_sum() {
    assert_sweep(suite::autocorrelation_fft_vs_direct());
}

#[test]
fn dense_dft_matches_fft() {
    assert_sweep(suite::dense_dft_vs_fft());
}

#[test]
fn mwisl_step_matches_dense() {
    assert_sweep(suite::mwisl_step_equivalence());
}

#[test]
fn mwisl_diag_step_matches_dense() {
    assert_sweep(suite::mwisl_diag_step_equivalence());
}

#[test]
fn mm_psl_step_matches_dense() {
    assert_sweep(suite::mm_psl_step_equivalence());
}

#[test]
fn lambda_l_matches_eigensolve() {
    assert_sweep(suite::lambda_l_closed_form());
}

#[test]
fn lambda_u_bounds_dense_spectrum() {
    assert_sweep(suite::lambda_u_brackets());
}

#[test]
fn lambda_b_bounds_dense_spectrum() {
    assert_sweep(suite::lambda_b_brackets());
}

#[test]
fn matrix_identity_sweeps() {
    for s in [
        suite::row_sum_diag_psd_sweep(),
        suite::hadamard_identity_sweep(),
        suite::phase_congruence_spectra_sweep(),
        suite::majorizer_dominance_sweep(),
    ] {
        assert_sweep(s);
    }
}

#[test]
fn fd_gradient_agrees_with_richardson_estimate() {
    let seq = seqforge::random_unimodular(16, 5).unwrap();
    let w = WeightVector::uniform(16).unwrap();
    let g1 = wisl_phase_gradient_fd(&seq, &w, 1e-3).unwrap();
    let g2 = wisl_phase_gradient_fd(&seq, &w, 5e-4).unwrap();
    let fine = wisl_phase_gradient_fd(&seq, &w, 1e-6).unwrap();
    for i in 0..16 {
        let richardson = (4.0 * g2[i] - g1[i]) / 3.0;
        // Central differences are O(h²); extrapolation removes that term.
        assert!(
            (richardson - fine[i]).abs() <= 1e-5 * (1.0 + fine[i].abs()),
            "i={i}"
        );
        assert!((g1[i] - fine[i]).abs() <= 1e-2 * (1.0 + fine[i].abs()));
    }
}

fn phases(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<f64>> {
    n.prop_flat_map(|n| prop::collection::vec(0.0..std::f64::consts::TAU, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fft_autocorrelation_equals_direct(ph in phases(1..=96)) {
        let seq = UnitModulusSequence::new(ph).unwrap();
        let fast = autocorrelation(&seq).unwrap();
        let slow = autocorr_direct(&seq);
        prop_assert!(common::max_abs_diff(fast.lags(), slow.lags()) <= 1e-10);
    }

    #[test]
    fn zero_lag_is_energy_and_sidelobes_are_bounded(ph in phases(2..=64)) {
        let n = ph.len();
        let prof = autocorrelation(&UnitModulusSequence::new(ph).unwrap()).unwrap();
        prop_assert!((prof.lags()[0].re - n as f64).abs() < 1e-9);
        for (k, r) in prof.lags().iter().enumerate().skip(1) {
            prop_assert!(r.norm() <= (n - k) as f64 + 1e-9);
        }
    }

    #[test]
    fn global_phase_leaves_correlation_magnitudes(ph in phases(2..=48), theta in 0.0..std::f64::consts::TAU) {
        let seq = UnitModulusSequence::new(ph).unwrap();
        let a = autocorrelation(&seq).unwrap();
        let b = autocorrelation(&seq.rotated(theta)).unwrap();
        for (u, v) in a.lags().iter().zip(b.lags()) {
            prop_assert!((u - v).norm() <= 1e-10);
        }
    }

    #[test]
    fn majorizer_dominates_power(t in 0.2..4.0f64, frac in 0.0..0.995f64, p in 2.0..40.0f64) {
        let x0 = t * frac;
        let (a, lin, c) = majorizer_quadratic(x0, t, p).unwrap();
        let scale = t.powf(p).max(1.0);
        for i in 0..=200 {
            let z = t * i as f64 / 200.0;
            prop_assert!(a * z * z + lin * z + c >= z.powf(p) - 1e-9 * scale);
        }
    }

    #[test]
    fn psl_majorizer_coefficient_signs(ph in phases(3..=40), p in 2.0..64.0f64) {
        let x = UnitModulusSequence::new(ph).unwrap().to_complex();
        let mut ws = SpectrumWorkspace::new(x.len());
        let Some(c) = mm_psl_majorizer(&x, p, &mut ws).unwrap() else { return Ok(()); };
        let prof = autocorr_direct(&UnitModulusSequence::from_complex(&x).unwrap());
        let t = c.t;
        for (k, m) in prof.sidelobe_magnitudes().enumerate() {
            prop_assert!(c.a[k] > 0.0);
            prop_assert!(c.b[k] <= 1e-12 * c.a[k] * t);
            if m > 1e-9 * t {
                let combined = c.a[k] + c.b[k] / (2.0 * m);
                prop_assert!((combined - c.w_hat[k]).abs() <= 1e-9 * c.w_hat[k].abs().max(1e-300) + 1e-12 * c.a[k]);
            }
            // Normalized form: ŵ_k t^p equals (p/2)|r_k|^{p-2}.
            let expect = 0.5 * p * (m / t).powf(p - 2.0) / (t * t);
            prop_assert!((c.w_hat[k] - expect).abs() <= 1e-9 * expect.max(1e-300));
        }
    }

    #[test]
    fn mwisl_step_never_increases_wisl(ph in phases(2..=64), wseed in 0u64..1000) {
        let seq = UnitModulusSequence::new(ph).unwrap();
        let n = seq.len();
        let w = common::random_weights(n, &mut common::rng(wseed));
        let mut ws = SpectrumWorkspace::new(n);
        let x = seq.to_complex();
        let out = mwisl_step(&x, &w, lambda_max_l(&w).unwrap(), &mut ws).unwrap();
        let after = wisl(&autocorr_direct(&UnitModulusSequence::from_complex(&out.next).unwrap()), &w).unwrap();
        prop_assert!(after <= out.objective + 1e-9 * (1.0 + out.objective));
        prop_assert!(out.next.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }
}
