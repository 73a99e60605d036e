//! Compare the FFT-based spectral bounds of a Hermitian Toeplitz matrix with
//! its exact extreme eigenvalues, and check the fast matrix-vector product
//! against the dense one.
//!
//! Run with `cargo run --release --example toeplitz_bounds`.

use num_complex::Complex64;
use seqforge::oracle::{extreme_eigenvalues, DenseMatrix};
use seqforge::{
    random_unimodular, toeplitz_matvec, HermitianToeplitzSpec, SpectrumWorkspace, ToeplitzSpectrum,
};

fn main() -> seqforge::Result<()> {
    println!(
        "{:>4} {:>12} {:>12} {:>12} {:>12} {:>10}",
        "N", "lower", "λmin", "λmax", "upper", "matvec err"
    );
    for n in [4usize, 8, 16, 32, 64] {
        // A Toeplitz column with decaying, phase-rotated entries.
        let phases = random_unimodular(n, n as u64)?.to_complex();
        let t: Vec<Complex64> = (0..n)
            .map(|k| {
                if k == 0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    phases[k] / (1.0 + k as f64)
                }
            })
            .collect();
        let spec = HermitianToeplitzSpec::new(t)?;
        let mut ws = SpectrumWorkspace::new(n);
        let spectrum = ToeplitzSpectrum::from_spec(&spec, &mut ws)?;

        let dense = DenseMatrix::from_fn(n, n, |i, j| spec.entry(i, j));
        let (lo, hi) = extreme_eigenvalues(&dense)?;
        let fast = toeplitz_matvec(&spec, &phases, &mut ws)?;
        let slow = dense.matvec(&phases);
        let err = fast
            .iter()
            .zip(&slow)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!(
            "{n:>4} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>10.1e}",
            spectrum.eig_lower_bound(),
            lo,
            hi,
            spectrum.eig_upper_bound(),
            err
        );
    }
    Ok(())
}
