//! Command-line grammar of the `seqforge` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::commands::{
    cmd_bench, cmd_design, cmd_eval, cmd_gen, BenchOptions, DesignRequest, DesignSpec, EvalRequest,
    Experiment, GenRequest, SeqKind,
};
use crate::error::{Error, Result};
use crate::solvers::Method;

#[derive(Debug, Parser)]
#[command(
    name = "seqforge",
    version,
    about = "Design unit-modulus sequences with low autocorrelation sidelobes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a Frank, Golomb or random phase file.
    Gen(GenArgs),
    /// Compute ISL/WISL/PSL/ℓp metrics and the correlation-level curve.
    Eval(EvalArgs),
    /// Run a solver and write the sequence, convergence CSV and manifest.
    Design(DesignArgs),
    /// Reproduce a benchmark experiment as CSV files.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// frank, golomb or random.
    #[arg(value_parser = parse_kind)]
    pub kind: SeqKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Frank order (length m²).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Phase file to evaluate.
    pub input: PathBuf,
    /// Weight file; adds the WISL field.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Exponent; adds the ℓp field.
    #[arg(long)]
    pub p: Option<f64>,
    /// Metrics JSON path (default `<input stem>.metrics.json`).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DesignArgs {
    /// TOML file with design parameters; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// mwisl, mwisl-diag, mm-psl or mm-psl-adaptive.
    #[arg(long, value_parser = parse_method)]
    pub method: Option<Method>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Comma-separated exponents for mm-psl-adaptive.
    #[arg(long, value_delimiter = ',')]
    pub p_schedule: Option<Vec<f64>>,
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Weighted lag ranges, e.g. `1-20,51-70`.
    #[arg(long, value_delimiter = ',', value_parser = parse_zone)]
    pub zones: Option<Vec<[usize; 2]>>,
    /// random, frank, golomb, or a phase file path.
    #[arg(long)]
    pub init: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_iter: Option<usize>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_floor: Option<f64>,
    #[arg(long)]
    pub accelerate: bool,
    /// Output phase file.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// wisl-zone, psl-sweep or p-compare.
    #[arg(long, value_parser = parse_experiment)]
    pub experiment: Experiment,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// Comma-separated lengths for psl-sweep.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
    /// Length for p-compare.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub max_iter: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_kind(s: &str) -> std::result::Result<SeqKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_experiment(s: &str) -> std::result::Result<Experiment, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_zone(s: &str) -> std::result::Result<[usize; 2], String> {
    let (lo, hi) = s.split_once('-').unwrap_or((s, s));
    let lo = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad zone {s:?}: {e}"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad zone {s:?}: {e}"))?;
    Ok([lo, hi])
}

/// Executes a parsed command line and returns the line to print on success.
pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Gen(a) => {
            let seq = cmd_gen(&GenRequest {
                kind: a.kind,
                n: a.n,
                m: a.m,
                seed: a.seed,
                out: a.out.clone(),
            })?;
            Ok(format!("wrote {} phases to {}", seq.len(), a.out.display()))
        }
        Command::Eval(a) => {
            let metrics = cmd_eval(&EvalRequest {
                input: a.input,
                weights: a.weights,
                p: a.p,
                out: a.out,
            })?;
            serde_json::to_string(&metrics).map_err(|e| Error::InvalidConfig(e.to_string()))
        }
        Command::Design(a) => {
            let overrides = DesignSpec {
                method: a.method,
                n: a.n,
                m: a.m,
                p: a.p,
                p_schedule: a.p_schedule,
                weights: a.weights,
                zones: a.zones,
                init: a.init,
                seed: a.seed,
                max_iter: a.max_iter,
                rel_tol: a.rel_tol,
                abs_floor: a.abs_floor,
                accelerate: a.accelerate.then_some(true),
            };
            let manifest = cmd_design(&DesignRequest {
                config: a.config,
                overrides,
                out: a.out,
            })?;
            Ok(format!(
                "{} iterations in {:.3} s, objective {:e} -> {:e}, PSL {:.6}; manifest {}",
                manifest.timings.iterations,
                manifest.timings.seconds,
                manifest.initial_objective,
                manifest.final_objective,
                manifest.metrics.psl,
                manifest.outputs.manifest.display()
            ))
        }
        Command::Bench(a) => {
            let files = cmd_bench(
                a.experiment,
                &a.out,
                &BenchOptions {
                    lengths: a.lengths,
                    n: a.n,
                    max_iter: a.max_iter,
                    seed: a.seed,
                    threads: None,
                },
            )?;
            Ok(format!(
                "wrote {} files to {}",
                files.len(),
                a.out.display()
            ))
        }
    }
}
