use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chordprop_cli::run::compute_samples;
use chordprop_cli::Scenario;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chordprop"))
}

fn presets() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("presets")
}

fn run(config: &Path, out: &Path) -> Output {
    bin().arg("run").arg(config).arg("--out").arg(out).output().unwrap()
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, body).unwrap();
    path
}

const SHORT: &str = r#"{
    "model": {"variant": "FiniteTemp", "gamma": 0.1, "D": 1.0},
    "initial": [1.0, 0.0],
    "time_grid": {"t_start": 0.0, "t_end": 5.0, "n_points": 2}
}"#;

#[test]
fn degenerate_grid_gives_two_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&write_config(dir.path(), SHORT), &dir.path().join("out"));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let energy = std::fs::read_to_string(dir.path().join("out/energy.csv")).unwrap();
    let lines: Vec<&str> = energy.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "sigma,E_closed_form,E_from_state");
    assert!(!energy.contains('\r'));
    let traj = std::fs::read_to_string(dir.path().join("out/trajectory.csv")).unwrap();
    assert!(traj.starts_with("sigma,x0_sigma,p0_sigma\n"));
    assert!(!dir.path().join("out/discrepancies.csv").exists());
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = presets().join("fig3_b_finite_temp.json");
    for name in ["a", "b"] {
        assert_eq!(run(&cfg, &dir.path().join(name)).status.code(), Some(0));
    }
    for file in ["energy.csv", "trajectory.csv", "marginals.csv"] {
        let a = std::fs::read(dir.path().join("a").join(file)).unwrap();
        let b = std::fs::read(dir.path().join("b").join(file)).unwrap();
        assert_eq!(a, b, "{file}");
    }
}

#[test]
fn wigner_dump_is_normalized() {
    let dir = tempfile::tempdir().unwrap();
    let body = SHORT.replace(
        "\"n_points\": 2}",
        "\"n_points\": 2}, \"outputs\": [\"wigner_grid\"], \"wigner_times\": [0.0, 5.0], \
         \"wigner\": {\"q_min\": -7, \"q_max\": 7, \"p_min\": -7, \"p_max\": 7, \"n_q\": 141, \"n_p\": 141}",
    );
    let out = run(&write_config(dir.path(), &body), &dir.path().join("out"));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for name in ["wigner_0.csv", "wigner_5.csv"] {
        let text = std::fs::read_to_string(dir.path().join("out").join(name)).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("q,p,W"));
        let total: f64 = lines.map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap()).sum();
        assert!((total * 0.1 * 0.1 - 1.0).abs() < 1e-6, "{name}: {total}");
    }
}

#[test]
fn quoted_energy_discrepancies_are_listed() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&presets().join("fig3_a_cl.json"), dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("discrepancies.csv")).unwrap();
    assert!(text.starts_with("sigma,E_closed_form,E_from_state,abs_difference\n"));
    assert!(text.lines().count() > 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let typo = write_config(dir.path(), &SHORT.replace("\"initial\"", "\"inital\""));
    let out = run(&typo, &dir.path().join("o"));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);

    let regime = write_config(dir.path(), &SHORT.replace("FiniteTemp", "CLOver").replace("0.1", "0.5"));
    let out = run(&regime, &dir.path().join("o"));
    assert_eq!(out.status.code(), Some(2));

    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let out = run(&write_config(dir.path(), SHORT), &blocker);
    assert_eq!(out.status.code(), Some(3));

    let out = bin().args(["validate", "maps", "--tol", "1e-300", "--out"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn validate_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().args(["validate", "kernels", "--seed", "9", "--out"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["suite"], "kernels");
    assert_eq!(report["seed"], 9);
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["check"] == "kernel_quadrature"));
    for c in checks {
        for key in ["check", "max_error", "tolerance", "pass"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
    assert!(report["audit"].as_array().unwrap().iter().any(|a| a["check"] == "quoted_eta1"));
}

#[test]
fn help_and_version() {
    let out = bin().arg("--help").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("validate"));
    let out = bin().arg("--version").output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("chordprop "));
}

#[test]
fn every_preset_loads_and_runs() {
    let mut count = 0;
    for entry in std::fs::read_dir(presets()).unwrap() {
        let path = entry.unwrap().path();
        let s = Scenario::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(s.notes.is_some(), "{} should document its guessed parameters", path.display());
        let samples = compute_samples(&s).unwrap();
        assert_eq!(samples.len(), s.time_grid.n_points);
        count += 1;
    }
    assert_eq!(count, 21);
}
