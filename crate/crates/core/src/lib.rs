//! Unit-modulus sequence design with low aperiodic autocorrelation sidelobes.
//!
//! The crate minimizes the weighted integrated sidelobe level (WISL) and the
//! ℓp norm of the sidelobes (a smooth surrogate of the peak sidelobe level)
//! with majorization-minimization iterations whose cost per step is four
//! FFTs of size 2N. Iterations can be wrapped in SQUAREM extrapolation.
//!
//! ```
//! use seqforge::{run_solver, SolverConfig, WeightVector};
//!
//! let weights = WeightVector::zones(32, &[(1, 5)]).unwrap();
//! let cfg = SolverConfig::mwisl(weights).with_seed(3).with_max_iter(200);
//! let (seq, record) = run_solver(&cfg).unwrap();
//! assert_eq!(seq.len(), 32);
//! assert!(record.final_objective() <= record.initial_objective);
//! ```

// Negated comparisons deliberately reject NaN alongside out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod accel;
pub mod cli;
pub mod corr;
pub mod error;
pub mod oracle;
pub mod seqlib;
pub mod solvers;
pub mod toeplitz;

pub use accel::{squarem_step, SquaremOutcome};
pub use corr::{
    autocorr_direct, autocorrelation, autocorrelation_with, correlation_level,
    correlation_level_with_floor, isl, lp_metric, psl, wisl, CorrelationProfile, SpectrumWorkspace,
    UnitModulusSequence, WeightVector,
};
pub use error::{Error, Result};
pub use seqlib::{frank, golomb, random_unimodular};
pub use solvers::{
    run_solver, run_solver_from, ConvergenceRecord, Init, Method, MmMap, SolverConfig,
};
pub use toeplitz::{toeplitz_matvec, HermitianToeplitzSpec, ToeplitzSpectrum};
