//! Flat-file formats: phase and weight files, CSV traces, JSON documents.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{de::DeserializeOwned, Serialize};

use crate::corr::{correlation_level, CorrelationProfile, UnitModulusSequence, WeightVector};
use crate::error::{Error, Result};
use crate::solvers::ConvergenceRecord;

const PHASES_TAG: &str = "# seqforge phases v1";
const WEIGHTS_TAG: &str = "# seqforge weights v1";

/// Renders phases with 17 significant digits, enough to round-trip binary64.
pub fn format_sequence(seq: &UnitModulusSequence) -> String {
    format_values(PHASES_TAG, seq.len(), seq.phases())
}

pub fn format_weights(weights: &WeightVector) -> String {
    format_values(WEIGHTS_TAG, weights.seq_len(), weights.as_slice())
}

fn format_values(tag: &str, n: usize, values: &[f64]) -> String {
    let mut out = format!("{tag} N={n}\n");
    for v in values {
        writeln!(out, "{v:.16e}").expect("writing to a String cannot fail");
    }
    out
}

pub fn parse_sequence(text: &str, path: &Path) -> Result<UnitModulusSequence> {
    let (n, values) = parse_values(PHASES_TAG, text, path)?;
    if values.len() != n {
        return Err(parse_err(
            path,
            format!("header says N={n}, found {} phases", values.len()),
        ));
    }
    UnitModulusSequence::new(values)
}

pub fn parse_weights(text: &str, path: &Path) -> Result<WeightVector> {
    let (n, values) = parse_values(WEIGHTS_TAG, text, path)?;
    if values.len() + 1 != n {
        return Err(parse_err(
            path,
            format!(
                "header says N={n}, expected {} weights, found {}",
                n.saturating_sub(1),
                values.len()
            ),
        ));
    }
    WeightVector::new(values)
}

fn parse_err(path: &Path, reason: String) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        reason,
    }
}

fn parse_values(tag: &str, text: &str, path: &Path) -> Result<(usize, Vec<f64>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| parse_err(path, "empty file".into()))?;
    let n = header
        .strip_prefix(tag)
        .and_then(|rest| rest.trim().strip_prefix("N="))
        .and_then(|n| n.trim().parse::<usize>().ok())
        .ok_or_else(|| {
            parse_err(
                path,
                format!("expected header `{tag} N=<n>`, got `{header}`"),
            )
        })?;
    let values = lines
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.trim()
                .parse::<f64>()
                .map_err(|e| parse_err(path, format!("line {}: {e}", i + 2)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((n, values))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn read_sequence(path: &Path) -> Result<UnitModulusSequence> {
    parse_sequence(&read_text(path)?, path)
}

pub fn write_sequence(path: &Path, seq: &UnitModulusSequence) -> Result<()> {
    write_text(path, &format_sequence(seq))
}

pub fn read_weights(path: &Path) -> Result<WeightVector> {
    parse_weights(&read_text(path)?, path)
}

pub fn write_weights(path: &Path, weights: &WeightVector) -> Result<()> {
    write_text(path, &format_weights(weights))
}

/// `iter,objective,cum_seconds,backtracks`, one row per completed iteration.
/// The starting objective is not a row; it is kept in the run manifest.
pub fn convergence_csv(rec: &ConvergenceRecord) -> String {
    let mut out = String::from("iter,objective,cum_seconds,backtracks\n");
    for (i, obj) in rec.objectives.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{obj:e},{:.6},{}",
            i + 1,
            rec.cum_seconds[i],
            rec.backtracks[i]
        );
    }
    out
}

/// Like [`convergence_csv`] with the exponent and peak sidelobe per iteration.
pub fn lp_trace_csv(rec: &ConvergenceRecord) -> String {
    let mut out = String::from("iter,p,objective,psl,cum_seconds,backtracks\n");
    for (i, obj) in rec.objectives.iter().enumerate() {
        let p = rec.stage_p.get(i).copied().unwrap_or(f64::NAN);
        let _ = writeln!(
            out,
            "{},{p},{obj:e},{:e},{:.6},{}",
            i + 1,
            rec.peaks[i],
            rec.cum_seconds[i],
            rec.backtracks[i]
        );
    }
    out
}

/// `lag,level_db` for lags `1-N ..= N-1`.
pub fn correlation_level_csv(profile: &CorrelationProfile) -> String {
    let n = profile.len() as isize;
    let mut out = String::from("lag,level_db\n");
    for (i, level) in correlation_level(profile).iter().enumerate() {
        let _ = writeln!(out, "{},{level:.6}", i as isize - (n - 1));
    }
    out
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidConfig(format!("cannot serialize {}: {e}", path.display())))?;
    write_text(path, &(text + "\n"))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?).map_err(|e| parse_err(path, e.to_string()))
}

/// `dir/stem.suffix` next to `path`, e.g. `out/seq.txt` → `out/seq.manifest.json`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    path.with_file_name(format!("{stem}.{suffix}"))
}
