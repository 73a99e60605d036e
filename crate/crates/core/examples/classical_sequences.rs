//! Peak and integrated sidelobe levels of Frank and Golomb sequences over a
//! range of square lengths.
//!
//! Run with `cargo run --release --example classical_sequences`.

use std::time::Instant;

use seqforge::{autocorrelation, frank, golomb, isl, psl};

fn main() -> seqforge::Result<()> {
    println!(
        "{:>7} {:>10} {:>10} {:>14} {:>14} {:>8}",
        "N", "Frank PSL", "Golomb PSL", "Frank ISL", "Golomb ISL", "ms"
    );
    for m in [5usize, 7, 10, 20, 30, 50, 70, 100] {
        let clock = Instant::now();
        let f = autocorrelation(&frank(m)?)?;
        let g = autocorrelation(&golomb(m * m)?)?;
        println!(
            "{:>7} {:>10.4} {:>10.4} {:>14.2} {:>14.2} {:>8.2}",
            m * m,
            psl(&f),
            psl(&g),
            isl(&f),
            isl(&g),
            clock.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}
