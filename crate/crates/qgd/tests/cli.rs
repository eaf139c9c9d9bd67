use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_qgd");

fn qgd(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .env_remove("QGD_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn configs() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/configs"))
}

#[test]
fn solve_overflow_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(dir.path(), &["solve", "--out", "run"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("overflow"));
    let summary: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("run/summary.json")).unwrap())
            .unwrap();
    assert_eq!(summary["classification"], "overflow");
    assert_eq!(summary["completed"], false);
}

#[test]
fn solve_nonconservative_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("paper_fig2b.json");
    let o = qgd(
        dir.path(),
        &["solve", "-c", cfg.to_str().unwrap(), "--out", "b"],
    );
    // Above the transition: either visibly oscillating or blown up, never conservative.
    assert!(
        matches!(o.status.code(), Some(0 | 2)),
        "{}{}",
        stdout(&o),
        stderr(&o)
    );
    assert!(!stdout(&o).starts_with("conservative"), "{}", stdout(&o));
    assert!(dir.path().join("b/profile.svg").exists());
    assert!(dir.path().join("b/diagnostics.csv").exists());
}

#[test]
fn constant_state_is_returned_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(
        dir.path(),
        &[
            "solve",
            "--set",
            "experiment.right={\"rho\": 1.0, \"u\": 0.1}",
            "--set",
            "scheme.beta=0.3",
            "--set",
            "output.formats=[\"csv\"]",
            "--out",
            "flat",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let mut snaps: Vec<_> = std::fs::read_dir(dir.path().join("flat"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| {
            p.file_name()
                .unwrap()
                .to_str()
                .unwrap()
                .starts_with("snapshot_")
        })
        .collect();
    snaps.sort();
    assert!(snaps.len() > 2);
    assert!(!dir.path().join("flat/profile.svg").exists());
    let mut r = csv::Reader::from_path(snaps.last().unwrap()).unwrap();
    let mut rows = 0;
    for rec in r.records() {
        let rec = rec.unwrap();
        let rho: f64 = rec[1].parse().unwrap();
        let u: f64 = rec[2].parse().unwrap();
        assert!(
            (rho - 1.0).abs() < 1e-13 && (u - 0.1).abs() < 1e-13,
            "{rec:?}"
        );
        rows += 1;
    }
    assert_eq!(rows, 250);
}

#[test]
fn malformed_config_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    let text = std::fs::read_to_string(configs().join("paper_fig1b.json")).unwrap();
    std::fs::write(&p, text.replacen("\"h\": 0.008,", "\"h\": 0.008", 1)).unwrap();
    let o = qgd(dir.path(), &["solve", "-c", "bad.json"]);
    assert_eq!(o.status.code(), Some(1));
    let line = text.lines().position(|l| l.contains("\"n\": 250")).unwrap() + 1;
    assert!(
        stderr(&o).contains(&format!("bad.json:{line}:")),
        "{}",
        stderr(&o)
    );
}

#[test]
fn invalid_value_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(dir.path(), &["solve", "--set", "scheme.alpha=-0.4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("scheme.alpha"), "{}", stderr(&o));
    let o = qgd(dir.path(), &["solve", "--set", "scheme.colour=1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stability_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(
        dir.path(),
        &[
            "stability",
            "--alpha",
            "0.5",
            "--beta",
            "1.0",
            "--kappa",
            "1",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    let cols: Vec<_> = row.split_whitespace().collect();
    assert_eq!(
        &cols[3..8],
        ["stable", "1.00000", "stable", "1.00000", "n/a"]
    );
    assert!(out.contains("optimal alpha* = 0.500000, beta_max(alpha*) = 1.000000"));

    let o = qgd(
        dir.path(),
        &[
            "stability",
            "--alpha",
            "0.4",
            "--beta",
            "0.6",
            "--alpha-s",
            "1.3333333333333333",
            "--csv",
            "v.csv",
        ],
    );
    let out = stdout(&o);
    let cols: Vec<_> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(
        &cols[3..8],
        ["unstable", "0.53571", "unstable", "0.53571", "unstable"]
    );
    let csv = std::fs::read_to_string(dir.path().join("v.csv")).unwrap();
    assert!(csv.starts_with("alpha,beta,kappa,variant,necessary,criterion,sufficient"));
    assert!(csv.contains(",full_qgd,false,false,false,"));
}

#[test]
fn stability_without_viscosity() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(
        dir.path(),
        &[
            "stability",
            "--alpha",
            "0.4",
            "--beta",
            "0.01,0.5",
            "--alpha-s",
            "0",
            "--variant",
            "simplified-qhd",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("no stable beta"));
    for row in out.lines().skip(1).take(2) {
        let cols: Vec<_> = row.split_whitespace().collect();
        assert_eq!(cols[5], "unstable");
        assert!(cols[9].parse::<f64>().unwrap() > 1.0);
    }
}

#[test]
fn stability_rejects_bad_kappa() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(
        dir.path(),
        &[
            "stability",
            "--alpha",
            "0.4",
            "--beta",
            "0.5",
            "--kappa",
            "0.5",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("kappa"));
}

fn small_sweep(dir: &Path, out: &str, workers: &str) -> Output {
    qgd(
        dir,
        &[
            "sweep",
            "--set",
            "sweep.alphas=[0.3, 0.6, 0.9]",
            "--set",
            "sweep.betas={\"relative_to_criterion\": [0.3, 0.6, 0.9, 1.2]}",
            "--out",
            out,
            "--workers",
            workers,
        ],
    )
}

#[test]
fn sweep_output_independent_of_workers() {
    let dir = tempfile::tempdir().unwrap();
    let a = small_sweep(dir.path(), "one", "1");
    let b = small_sweep(dir.path(), "eight", "8");
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(b.status.code(), Some(0), "{}", stderr(&b));
    for f in ["region.csv", "curves.csv", "region.svg"] {
        let x = std::fs::read(dir.path().join("one").join(f)).unwrap();
        let y = std::fs::read(dir.path().join("eight").join(f)).unwrap();
        assert_eq!(x, y, "{f}");
    }
    let region = std::fs::read_to_string(dir.path().join("one/region.csv")).unwrap();
    assert_eq!(region.lines().count(), 1 + 12);
    assert!(stdout(&a).contains("12 cells on 1 workers"));
}

#[test]
fn verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = qgd(dir.path(), &["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        3
    );
}
