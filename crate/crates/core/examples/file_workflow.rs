//! The generate / design / evaluate cycle through phase files, using the same
//! functions as the `seqforge` binary. Output goes to a directory given as the
//! first argument (default `seqforge-demo`).
//!
//! Run with `cargo run --release --example file_workflow [dir]`.

use std::path::PathBuf;

use seqforge::cli::{
    cmd_design, cmd_eval, cmd_gen, DesignRequest, DesignSpec, EvalRequest, GenRequest, SeqKind,
};
use seqforge::Method;

fn main() -> seqforge::Result<()> {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "seqforge-demo".into()),
    );

    let start = dir.join("golomb64.txt");
    cmd_gen(&GenRequest {
        kind: SeqKind::Golomb,
        n: Some(64),
        m: None,
        seed: 0,
        out: start.clone(),
    })?;
    let before = cmd_eval(&EvalRequest {
        input: start.clone(),
        weights: None,
        p: Some(16.0),
        out: None,
    })?;

    let designed = dir.join("designed64.txt");
    let manifest = cmd_design(&DesignRequest {
        config: None,
        overrides: DesignSpec {
            method: Some(Method::MmPsl),
            n: Some(64),
            p: Some(16.0),
            init: Some(start.to_string_lossy().into_owned()),
            max_iter: Some(5_000),
            accelerate: Some(true),
            ..Default::default()
        },
        out: designed.clone(),
    })?;

    println!(
        "Golomb(64): PSL {:.4}, l16 {:.4}",
        before.psl,
        before.lp.unwrap_or(f64::NAN)
    );
    println!(
        "designed:   PSL {:.4}, l16 {:.4} ({} iterations)",
        manifest.metrics.psl,
        manifest.metrics.lp.unwrap_or(f64::NAN),
        manifest.timings.iterations
    );
    println!("manifest:   {}", manifest.outputs.manifest.display());
    Ok(())
}
