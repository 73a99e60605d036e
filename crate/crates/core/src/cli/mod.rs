//! Command-line front end: file formats, the `gen`/`eval`/`design`/`bench`
//! commands and their argument grammar.

pub mod args;
pub mod commands;
pub mod io;

pub use args::{run, Cli};
pub use commands::{
    bench_threads, cmd_bench, cmd_design, cmd_eval, cmd_gen, compute_metrics, BenchOptions,
    DesignRequest, DesignSpec, EvalRequest, Experiment, GenRequest, Metrics, RunManifest, SeqKind,
};
