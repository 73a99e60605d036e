//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqforge::oracle::DenseMatrix;
use seqforge::{CorrelationProfile, WeightVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonnegative weights with roughly a third of the lags zeroed, at least one positive.
pub fn random_weights(n: usize, rng: &mut ChaCha8Rng) -> WeightVector {
    let mut w: Vec<f64> = (1..n)
        .map(|_| {
            if rng.gen_bool(0.35) {
                0.0
            } else {
                rng.gen_range(0.1..3.0)
            }
        })
        .collect();
    if w.iter().all(|&v| v == 0.0) {
        let k = rng.gen_range(0..w.len());
        w[k] = 1.0;
    }
    WeightVector::new(w).unwrap()
}

pub fn random_complex(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// Random correlation-like profile with a real, dominant zero lag.
pub fn random_profile(n: usize, rng: &mut ChaCha8Rng) -> CorrelationProfile {
    let mut r = random_complex(n, rng);
    r[0] = Complex64::new(n as f64, 0.0);
    CorrelationProfile::new(r).unwrap()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
pub mod suite;
