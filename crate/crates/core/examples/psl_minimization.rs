//! Lower the peak sidelobe of a length-400 Frank sequence by minimizing the
//! ℓ100 norm of its sidelobes with accelerated MM.
//!
//! Run with `cargo run --release --example psl_minimization [iterations]`.

use seqforge::{autocorrelation, frank, psl, run_solver, Init, SolverConfig};

fn main() -> seqforge::Result<()> {
    let iterations = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50_000);
    let start = frank(20)?;
    let start_psl = psl(&autocorrelation(&start)?);

    let cfg = SolverConfig::mm_psl(400, 100.0)
        .with_init(Init::Sequence(start))
        .with_accelerate(true)
        .with_max_iter(iterations);
    let (seq, rec) = run_solver(&cfg)?;
    let end_psl = psl(&autocorrelation(&seq)?);

    println!("Frank PSL        {start_psl:.4}");
    println!(
        "MM-PSL (p=100)   {end_psl:.4} after {} iterations, {:.2} s",
        rec.iterations, rec.seconds
    );
    println!(
        "l100 objective   {:.4} -> {:.4}",
        rec.initial_objective,
        rec.final_objective()
    );
    println!(
        "backtracks       {}  fallbacks {}",
        rec.total_backtracks, rec.fallbacks
    );
    Ok(())
}
