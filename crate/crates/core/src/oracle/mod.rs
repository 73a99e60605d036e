//! Deliberately naive dense references for the structured fast paths:
//! explicit matrices, an in-repo Jacobi eigensolver, matrix-identity checks
//! and literal versions of each MM step. Intended for tests and validation
//! runs, not for production use.

pub mod checks;
pub mod dense;
pub mod structures;

pub use checks::{
    eigset_check_phase_congruence, hadamard_diag_identity_check, majorizer_quadratic,
    psd_check_row_sum_diag, wisl_phase_gradient_fd,
};
pub use dense::{symmetric_eigenvalues, DenseMatrix};
pub use structures::{
    build_B_dense, build_L_dense, build_R_dense, build_shift_U, dense_lower_bound,
    dense_mm_psl_step, dense_mwisl_diag_step, dense_mwisl_step, dense_psl_coefficients,
    dense_upper_bound, dft_matrix, extreme_eigenvalues, LIFTED_CAP,
};
