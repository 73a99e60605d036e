//! Closed-form polyphase sequences and seeded random initialization.

use std::f64::consts::{PI, TAU};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::corr::UnitModulusSequence;
use crate::error::{Error, Result};

/// Frank sequence of length `M²`: element `nM + k` has phase `2πnk/M`.
///
/// Phases are reduced modulo 2π with exact integer arithmetic.
pub fn frank(m: usize) -> Result<UnitModulusSequence> {
    if m < 1 {
        return Err(Error::InvalidLength {
            len: m,
            reason: "Frank order M must be positive",
        });
    }
    let mm = m as u64;
    let phases = (0..mm)
        .flat_map(|n| (0..mm).map(move |k| TAU * ((n * k) % mm) as f64 / mm as f64))
        .collect();
    UnitModulusSequence::new(phases)
}

/// Golomb sequence of length `N`: element `n` (1-based) has phase `π(n-1)n/N`.
pub fn golomb(n: usize) -> Result<UnitModulusSequence> {
    if n < 1 {
        return Err(Error::InvalidLength {
            len: n,
            reason: "Golomb length must be positive",
        });
    }
    let nn = n as u64;
    // π(i-1)i/N reduced modulo 2π, i.e. (i-1)i modulo 2N.
    let phases = (1..=nn)
        .map(|i| PI * (((i - 1) * i) % (2 * nn)) as f64 / nn as f64)
        .collect();
    UnitModulusSequence::new(phases)
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// i.i.d. phases uniform on `[0, 2π)`.
///
/// The generator is ChaCha20 (`rand_chacha`) seeded with `seed_from_u64`; each
/// phase takes the top 53 bits of one `next_u64` draw, so the output is
/// identical on every platform.
pub fn random_unimodular(n: usize, seed: u64) -> Result<UnitModulusSequence> {
    if n < 2 {
        return Err(Error::InvalidLength {
            len: n,
            reason: "random initialization needs N >= 2",
        });
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let phases = (0..n)
        .map(|_| TAU * ((rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)))
        .collect();
    UnitModulusSequence::new(phases)
}
