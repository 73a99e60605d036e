//! MM iterations for WISL and ℓp sidelobe objectives, and the driver that runs
//! them to convergence.

mod run;
pub mod steps;

pub use run::{
    default_p_schedule, initial_sequence, run_solver, run_solver_from, ConvergenceRecord, Init,
    Method, SolverConfig, StageSummary, StopReason,
};
pub use steps::{
    lambda_max_l, mm_psl_majorizer, mm_psl_step, mwisl_diag_step, mwisl_step, normalized_curvature,
    precompute_diag, DiagPrecompute, Evaluation, MajorizerCoefficients, MmMap, MmPsl, Mwisl,
    MwislDiag, StepOutput,
};
