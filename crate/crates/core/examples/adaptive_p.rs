//! Minimize the peak sidelobe through an increasing exponent schedule
//! p = 2, 4, …, 8192, warm-starting each stage from the previous one.
//!
//! Run with `cargo run --release --example adaptive_p [n] [per-stage cap]`.

use seqforge::seqlib::exact_sqrt;
use seqforge::{autocorrelation, frank, golomb, psl, run_solver, Init, SolverConfig};

fn main() -> seqforge::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(400);
    let cap = args.next().flatten().unwrap_or(5_000);
    let start = match exact_sqrt(n) {
        Some(m) => frank(m)?,
        None => golomb(n)?,
    };
    let start_psl = psl(&autocorrelation(&start)?);

    let cfg = SolverConfig::mm_psl_adaptive(n)
        .with_init(Init::Sequence(start))
        .with_accelerate(true)
        .with_max_iter(cap);
    let (seq, rec) = run_solver(&cfg)?;

    println!("start PSL {start_psl:.4}");
    println!("{:>8} {:>8} {:>10}", "p", "iters", "stop");
    for stage in &rec.stages {
        println!(
            "{:>8} {:>8} {:>10?}",
            stage.p.unwrap_or(f64::NAN),
            stage.iterations,
            stage.stop
        );
    }
    println!(
        "final PSL {:.4} after {} iterations in {:.2} s",
        psl(&autocorrelation(&seq)?),
        rec.iterations,
        rec.seconds
    );
    Ok(())
}
