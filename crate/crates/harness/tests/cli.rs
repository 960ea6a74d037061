use std::path::Path;
use std::process::Command;

use bdris_krf::{load_config, parse_csv, PilotLength, Sweep, CSV_HEADER};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bdris-krf"))
}

fn configs_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/configs"))
}

#[test]
fn shipped_configs_load_and_validate() {
    let mut seen = 0;
    for entry in std::fs::read_dir(configs_dir()).unwrap() {
        let path = entry.unwrap().path();
        let spec = load_config(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        spec.validate()
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        seen += 1;
    }
    assert!(seen >= 5);
}

#[test]
fn antenna_config_parses_pairs() {
    let spec = load_config(&configs_dir().join("antennas.conf")).unwrap();
    assert_eq!(spec.base.t, PilotLength::Fixed(64));
    assert_eq!(
        spec.sweep,
        Some(Sweep::Antennas(vec![
            (1, 1),
            (1, 4),
            (4, 1),
            (2, 2),
            (4, 4)
        ]))
    );
}

#[test]
fn run_writes_csv_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("exp.conf");
    std::fs::write(
        &conf,
        "mt = 1\nmr = 2\nn = 4\nnbar = 2\nsnr = 0,10\ntrials = 50\n",
    )
    .unwrap();
    let out = dir.path().join("rows.csv");
    let status = bin()
        .args(["run", "--config"])
        .arg(&conf)
        .args([
            "--trials",
            "3",
            "--nbar",
            "1,2",
            "--seed",
            "4",
            "--workers",
            "2",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 2 * 2 * 2);
    assert!(rows
        .iter()
        .all(|r| r.trials == 3 && r.seed == 4 && r.mr == 2));
    assert_eq!(rows[0].nbar, 1);
    assert_eq!(rows[7].nbar, 2);
}

#[test]
fn run_without_out_prints_csv() {
    let out = bin()
        .args([
            "run", "--n", "4", "--nbar", "2", "--mt", "1", "--mr", "1", "--t", "min", "--snr",
            "inf", "--trials", "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let rows = parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.nmse_mean < 1e-15));
}

#[test]
fn unknown_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "n = 8\nsnr_step = 5\n").unwrap();
    let out = bin().args(["run", "--config"]).arg(&conf).output().unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("snr_step") && err.contains(":2"), "{err}");
}

#[test]
fn large_surface_needs_flag() {
    let out = bin()
        .args(["run", "--n", "64", "--trials", "1"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("--full-scale"));
}

#[test]
fn invalid_pilot_length_fails_before_running() {
    let out = bin()
        .args(["run", "--n", "8", "--nbar", "2", "--t", "20"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn verify_passes() {
    let out = bin().arg("verify").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 2);
}
