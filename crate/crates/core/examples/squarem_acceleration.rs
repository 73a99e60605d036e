//! Minimize the plain ISL of a random length-256 sequence with and without
//! SQUAREM and compare iterations and time to the same relative tolerance.
//!
//! Run with `cargo run --release --example squarem_acceleration`.

use seqforge::{run_solver, SolverConfig, WeightVector};

fn main() -> seqforge::Result<()> {
    let n = 256;
    for accelerate in [false, true] {
        let cfg = SolverConfig::mwisl(WeightVector::uniform(n)?)
            .with_seed(42)
            .with_accelerate(accelerate)
            .with_rel_tol(1e-8)
            .with_max_iter(200_000);
        let (_, rec) = run_solver(&cfg)?;
        println!(
            "{:<10} ISL {:>10.3} -> {:>8.3}  {:>6} iterations  {:>7.3} s  backtracks {}",
            if accelerate { "squarem" } else { "plain" },
            rec.initial_objective,
            rec.final_objective(),
            rec.iterations,
            rec.seconds,
            rec.total_backtracks
        );
    }
    Ok(())
}
