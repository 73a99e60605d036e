//! End-to-end runs of the `seqforge` binary.

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use seqforge::cli::io::{read_sequence, read_weights};
use seqforge::cli::{Metrics, RunManifest};
use seqforge::{frank, golomb, WeightVector};

fn seqforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqforge"))
        .args(args)
        .env("SEQFORGE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = seqforge(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_metrics(path: &Path) -> Metrics {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gen_writes_expected_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("frank.txt");
    ok(&["gen", "frank", "--m", "10", "--out", s(&f)]);
    let text = std::fs::read_to_string(&f).unwrap();
    assert_eq!(text.lines().count(), 101);
    assert!(text.starts_with("# seqforge phases v1 N=100\n"));
    assert_eq!(read_sequence(&f).unwrap(), frank(10).unwrap());

    let g = dir.path().join("golomb.txt");
    ok(&["gen", "golomb", "--n", "13", "--out", s(&g)]);
    assert_eq!(read_sequence(&g).unwrap(), golomb(13).unwrap());
}

#[test]
fn random_generation_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    ok(&["gen", "random", "--n", "100", "--seed", "7", "--out", s(&a)]);
    ok(&["gen", "random", "--n", "100", "--seed", "7", "--out", s(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn eval_reports_classical_values() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("frank100.txt");
    ok(&["gen", "frank", "--m", "100", "--out", s(&f)]);
    let json = dir.path().join("m.json");
    ok(&["eval", s(&f), "--out", s(&json)]);
    let m = read_metrics(&json);
    assert_eq!(m.n, 10_000);
    assert!((m.psl - 31.84).abs() <= 0.01, "{}", m.psl);
    let csv = m.correlation_level_path.unwrap();
    let level = std::fs::read_to_string(csv).unwrap();
    assert!(level.starts_with("lag,level_db\n"));
    assert_eq!(level.lines().count(), 1 + 2 * 10_000 - 1);

    // Constant sequence of length 4: r = [4, 3, 2, 1], ISL 14.
    let c = dir.path().join("const.txt");
    std::fs::write(&c, "# seqforge phases v1 N=4\n0\n0\n0\n0\n").unwrap();
    ok(&["eval", s(&c), "--p", "2"]);
    let m = read_metrics(&dir.path().join("const.metrics.json"));
    assert!((m.isl - 14.0).abs() < 1e-9);
    assert!((m.psl - 3.0).abs() < 1e-9);
    assert!((m.lp.unwrap() - 14f64.sqrt()).abs() < 1e-9);
    assert!(m.wisl.is_none());

    // Barker 13.
    let b = dir.path().join("barker.txt");
    let pi = std::f64::consts::PI;
    let phases = [0., 0., 0., 0., 0., pi, pi, 0., 0., pi, 0., pi, 0.];
    let body: String = phases.iter().map(|p| format!("{p:.16e}\n")).collect();
    std::fs::write(&b, format!("# seqforge phases v1 N=13\n{body}")).unwrap();
    ok(&["eval", s(&b)]);
    let m = read_metrics(&dir.path().join("barker.metrics.json"));
    assert!((m.psl - 1.0).abs() < 1e-9);
}

#[test]
fn gen_eval_round_trip_preserves_phases() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("r.txt");
    ok(&["gen", "random", "--n", "64", "--seed", "3", "--out", s(&a)]);
    ok(&["eval", s(&a)]);
    let seq = read_sequence(&a).unwrap();
    let b = dir.path().join("again.txt");
    seqforge::cli::io::write_sequence(&b, &seq).unwrap();
    let back = read_sequence(&b).unwrap();
    for (x, y) in seq.phases().iter().zip(back.phases()) {
        assert!((x - y).abs() <= 1e-12);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn design_with_one_iteration_logs_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.txt");
    ok(&[
        "design",
        "--method",
        "mwisl",
        "--n",
        "32",
        "--max-iter",
        "1",
        "--out",
        s(&out),
    ]);
    let csv = std::fs::read_to_string(dir.path().join("d.convergence.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("iter,objective,cum_seconds,backtracks"));
    assert_eq!(lines.count(), 1);
}

#[test]
fn design_zone_run_reaches_floor_and_manifest_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("zone.toml");
    std::fs::write(
        &cfg,
        "method = \"mwisl-diag\"\nn = 100\nzones = [[1, 20], [51, 70]]\naccelerate = true\n\
         abs_floor = 1e-10\nrel_tol = 1e-300\nmax_iter = 100000\nseed = 4\n",
    )
    .unwrap();
    let out = dir.path().join("zone.txt");
    ok(&["design", "--config", s(&cfg), "--out", s(&out)]);
    let manifest_path = dir.path().join("zone.manifest.json");
    let manifest = RunManifest::read(&manifest_path).unwrap();
    assert!(manifest.final_objective <= 1e-10);
    assert_eq!(manifest.seed, 4);
    let last = std::fs::read_to_string(&manifest.outputs.convergence).unwrap();
    let last_obj: f64 = last
        .lines()
        .last()
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!(last_obj <= 1e-10);

    let text = std::fs::read_to_string(&manifest_path).unwrap();
    let reparsed: RunManifest = serde_json::from_str(&text).unwrap();
    assert_eq!(reparsed, manifest);
    assert_eq!(
        serde_json::to_string_pretty(&reparsed).unwrap() + "\n",
        text
    );

    // Same config, same seed: identical sequence.
    let again = dir.path().join("zone2.txt");
    ok(&["design", "--config", s(&cfg), "--out", s(&again)]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn design_adaptive_from_frank_beats_frank() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.txt");
    ok(&[
        "design",
        "--method",
        "mm-psl-adaptive",
        "--n",
        "25",
        "--init",
        "frank",
        "--accelerate",
        "--out",
        s(&out),
    ]);
    let manifest = RunManifest::read(&dir.path().join("a.manifest.json")).unwrap();
    let f = dir.path().join("f.txt");
    ok(&["gen", "frank", "--m", "5", "--out", s(&f)]);
    ok(&["eval", s(&f)]);
    let frank_metrics = read_metrics(&dir.path().join("f.metrics.json"));
    assert!(manifest.metrics.psl <= frank_metrics.psl + 1e-12);
}

#[test]
fn config_errors_exit_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "design",
            "--method",
            "mwisl",
            "--n",
            "10",
            "--max-iter",
            "0",
            "--out",
            s(&out),
        ],
        vec![
            "design",
            "--method",
            "mm-psl",
            "--n",
            "10",
            "--init",
            "frank",
            "--out",
            s(&out),
        ],
        vec![
            "design",
            "--method",
            "mm-psl",
            "--n",
            "10",
            "--p",
            "1",
            "--out",
            s(&out),
        ],
        vec!["gen", "frank", "--n", "10", "--out", s(&out)],
        vec!["eval", "/nonexistent/seqforge/file.txt"],
        vec!["bench", "--experiment", "fig9", "--out", s(&out)],
    ];
    for args in cases {
        assert_eq!(seqforge(&args).status.code(), Some(2), "{args:?}");
    }
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# seqforge phases v1 N=3\n0\n0\n").unwrap();
    assert_eq!(seqforge(&["eval", s(&bad)]).status.code(), Some(2));
}

#[test]
fn bench_wisl_zone_writes_weight_pattern_and_traces() {
    let dir = tempfile::tempdir().unwrap();
    ok(&[
        "bench",
        "--experiment",
        "wisl-zone",
        "--out",
        s(dir.path()),
        "--max-iter",
        "2000",
    ]);
    let w = read_weights(&dir.path().join("weights.txt")).unwrap();
    assert_eq!(w, WeightVector::zones(100, &[(1, 20), (51, 70)]).unwrap());
    for name in ["mwisl", "mwisl-squarem", "mwisl-diag", "mwisl-diag-squarem"] {
        let csv =
            std::fs::read_to_string(dir.path().join(format!("{name}.convergence.csv"))).unwrap();
        let obj: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert!(!obj.is_empty());
        assert!(obj.windows(2).all(|p| p[1] <= p[0] + 1e-12), "{name}");
        assert!(dir.path().join(format!("{name}.level.csv")).exists());
    }
    assert!(dir.path().join("summary.csv").exists());
}

#[test]
fn bench_psl_sweep_small_lengths_is_quick() {
    let dir = tempfile::tempdir().unwrap();
    let clock = Instant::now();
    ok(&[
        "bench",
        "--experiment",
        "psl-sweep",
        "--lengths",
        "25,49",
        "--out",
        s(dir.path()),
    ]);
    assert!(clock.elapsed().as_secs_f64() < 60.0);
    let csv = std::fs::read_to_string(dir.path().join("psl_sweep.csv")).unwrap();
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        // MM-PSL from each start does not lose to that start.
        assert!(
            row[3] <= row[1] + 1e-9 && row[4] <= row[2] + 1e-9,
            "{row:?}"
        );
    }
}

#[test]
fn bench_p_compare_traces_are_monotone() {
    let dir = tempfile::tempdir().unwrap();
    ok(&[
        "bench",
        "--experiment",
        "p-compare",
        "--n",
        "100",
        "--max-iter",
        "300",
        "--out",
        s(dir.path()),
    ]);
    for p in ["10", "100", "1000", "10000"] {
        let csv = std::fs::read_to_string(dir.path().join(format!("p{p}.csv"))).unwrap();
        let obj: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
            .collect();
        assert!(!obj.is_empty());
        assert!(obj.windows(2).all(|w| w[1] <= w[0] + 1e-12), "p={p}");
    }
}
