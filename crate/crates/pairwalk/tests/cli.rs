//! End-to-end tests of the `pairwalk` binary: flags, file outputs, and exit
//! codes (0 success, 1 usage, 2 validation, 3 empty spectrum).

use std::path::Path;
use std::process::{Command, Output};

fn pairwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairwalk"))
        .args(args)
        .output()
        .expect("spawn CLI")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn read(dir: &Path, file: &str) -> String {
    std::fs::read_to_string(dir.join(file)).unwrap()
}

#[test]
fn graph_exports_the_catalog_format() {
    let output = pairwalk(&["graph", "k8", "--export", "-"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("n 8"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 28);

    let output = pairwalk(&["graph", "q3-modified", "--export", "-"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output).lines().filter(|l| l.starts_with("e ")).count(),
        8
    );
}

#[test]
fn graph_rejects_unknown_names_with_exit_1() {
    let output = pairwalk(&["graph", "bogus"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("bogus"));
}

#[test]
fn usage_errors_exit_1() {
    let output = pairwalk(&["simulate", "--phi", "zpi"]);
    assert_eq!(output.status.code(), Some(1));

    let output = pairwalk(&["simulate", "--initial", "random", "--steps", "10"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("--seed"));

    let output = pairwalk(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(1));

    let output = pairwalk(&["--help"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn simulate_writes_the_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "simulate",
        "--graph",
        "k8",
        "--phi",
        "0.3pi",
        "--steps",
        "20",
        "--out",
        dir.path().to_str().unwrap(),
        "--plot",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));

    let entanglement = read(dir.path(), "entanglement.csv");
    let mut lines = entanglement.lines();
    assert_eq!(lines.next(), Some("t,E_bits"));
    assert_eq!(lines.count(), 21);

    let marginals = read(dir.path(), "marginals.csv");
    let header = marginals.lines().next().unwrap();
    assert!(header.starts_with("t,P1_v0,"));
    assert!(header.ends_with(",P2_v7"));
    assert_eq!(header.split(',').count(), 17);
    // Uniform marginals on the complete graph: every probability is 1/8 up
    // to roundoff (the CSV keeps the full round-trip value).
    for line in marginals.lines().skip(1) {
        for field in line.split(',').skip(1) {
            let value: f64 = field.parse().unwrap();
            assert!((value - 0.125).abs() <= 1e-12, "marginal {field}");
        }
    }
    assert!(dir.path().join("entanglement.svg").exists());
    assert!(dir.path().join("marginals.svg").exists());
}

#[test]
fn simulate_at_zero_phi_has_zero_entanglement_column() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "simulate",
        "--graph",
        "k8",
        "--steps",
        "15",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success());
    for line in read(dir.path(), "entanglement.csv").lines().skip(1) {
        let value: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!(value.abs() <= 1e-10, "nonzero entanglement {value}");
    }
}

#[test]
fn spectrum_of_zero_series_exits_3_with_header_only_csv() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "spectrum",
        "--graph",
        "k8",
        "--phi",
        "0",
        "--steps",
        "64",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("empty spectrum"));
    assert_eq!(read(dir.path(), "spectrum.csv"), "freq_cycles_per_step,power,tier\n");
}

#[test]
fn spectrum_input_bypass_finds_the_synthetic_peak() {
    let dir = tempfile::tempdir().unwrap();
    let series_path = dir.path().join("series.csv");
    let mut csv = String::from("t,value\n");
    let l = 200;
    for t in 0..l {
        let value = (2.0 * std::f64::consts::PI * 8.0 * t as f64 / l as f64).cos();
        csv.push_str(&format!("{t},{value}\n"));
    }
    std::fs::write(&series_path, csv).unwrap();

    let output = pairwalk(&[
        "spectrum",
        "--input",
        series_path.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let spectrum = read(dir.path(), "spectrum.csv");
    let peak_row = spectrum
        .lines()
        .skip(1)
        .max_by(|a, b| {
            let pa: f64 = a.split(',').nth(1).unwrap().parse().unwrap();
            let pb: f64 = b.split(',').nth(1).unwrap().parse().unwrap();
            pa.partial_cmp(&pb).unwrap()
        })
        .unwrap();
    let frequency: f64 = peak_row.split(',').next().unwrap().parse().unwrap();
    assert!(
        (frequency - 8.0 / 200.0).abs() <= 1.0 / 200.0 + 1e-12,
        "peak at {frequency}"
    );
    // The peak row must carry the top prominence tier.
    assert_eq!(peak_row.split(',').nth(2), Some("1"));
}

#[test]
fn spectrum_series_rows_present_for_interacting_run() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "spectrum",
        "--graph",
        "q3",
        "--phi",
        "0.3pi",
        "--steps",
        "100",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let spectrum = read(dir.path(), "spectrum.csv");
    // 101 samples -> bins 0..=50.
    assert_eq!(spectrum.lines().count(), 52);
    assert!(spectrum.lines().any(|l| l.ends_with(",1")));
}

#[test]
fn feigenbaum_zero_grid_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "feigenbaum",
        "--graph",
        "q3",
        "--steps",
        "64",
        "--phi-min",
        "0",
        "--phi-max",
        "0",
        "--phi-count",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    assert_eq!(
        read(dir.path(), "feigenbaum.csv"),
        "phi_radians,freq_cycles_per_step,tier\n"
    );
}

#[test]
fn feigenbaum_points_are_sorted_and_tiered() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "feigenbaum",
        "--graph",
        "q3-modified",
        "--steps",
        "64",
        "--phi-min",
        "0.2pi",
        "--phi-max",
        "0.8pi",
        "--phi-count",
        "4",
        "--out",
        dir.path().to_str().unwrap(),
        "--plot",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let csv = read(dir.path(), "feigenbaum.csv");
    let rows: Vec<(f64, f64, u8)> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let mut fields = l.split(',');
            (
                fields.next().unwrap().parse().unwrap(),
                fields.next().unwrap().parse().unwrap(),
                fields.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    assert!(!rows.is_empty());
    assert!(rows.windows(2).all(|w| w[0].0 < w[1].0
        || (w[0].0 == w[1].0 && w[0].1 <= w[1].1)));
    assert!(rows.iter().all(|r| r.2 == 1 || r.2 == 2));
    assert!(dir.path().join("feigenbaum.svg").exists());
}

#[test]
fn perturb_reports_the_sensitivity_summary() {
    let dir = tempfile::tempdir().unwrap();
    let output = pairwalk(&[
        "perturb",
        "--graph",
        "k8",
        "--phi",
        "0.75pi",
        "--phi2",
        "0.76pi",
        "--steps",
        "50",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let summary = stderr(&output);
    assert!(summary.contains("max_t |E_phi1 - E_phi2|"));
    let csv = read(dir.path(), "perturb.csv");
    assert_eq!(
        csv.lines().next(),
        Some("t,E_phi1,E_phi2,P1v0_phi1,P1v0_phi2")
    );
    assert_eq!(csv.lines().count(), 52);

    // Identical phases: both deltas vanish.
    let output = pairwalk(&[
        "perturb",
        "--graph",
        "q3",
        "--phi",
        "0.5pi",
        "--phi2",
        "0.5pi",
        "--steps",
        "30",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let csv = read(dir.path(), "perturb.csv");
    for line in csv.lines().skip(1) {
        let fields: Vec<f64> = line.split(',').skip(1).map(|f| f.parse().unwrap()).collect();
        assert!((fields[0] - fields[1]).abs() <= 1e-12);
        assert!((fields[2] - fields[3]).abs() <= 1e-12);
    }
}

#[test]
fn custom_graph_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path4.graph");
    std::fs::write(&path, "# four-vertex path\nn 4\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let output = pairwalk(&[
        "simulate",
        "--graph",
        path.to_str().unwrap(),
        "--phi",
        "0.4pi",
        "--steps",
        "12",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let marginals = read(dir.path(), "marginals.csv");
    assert_eq!(marginals.lines().next().unwrap().split(',').count(), 9);

    // A malformed file is a validation failure, exit 2.
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "n 2\ne 0 5\n").unwrap();
    let output = pairwalk(&[
        "simulate",
        "--graph",
        bad.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}
