mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::fixture_dir;

fn scimob(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scimob"))
        .arg("--config")
        .arg(fixture_dir().join("scimob.toml"))
        .arg("--out-dir")
        .arg(out)
        .args(args)
        .output()
        .unwrap()
}

fn text(o: &Output) -> String {
    format!(
        "{}{}",
        String::from_utf8_lossy(&o.stdout),
        String::from_utf8_lossy(&o.stderr)
    )
}

#[test]
fn run_writes_every_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let o = scimob(dir.path(), &["run"]);
    assert!(o.status.success(), "{}", text(&o));
    for f in [
        "manifest.json",
        "metrics.json",
        "reports/reports.json",
        "reports/shares.csv",
    ] {
        assert!(dir.path().join(f).exists(), "{f} missing");
    }
    let again = scimob(dir.path(), &["run"]);
    assert!(again.status.success());
    assert!(text(&again).contains("cached"), "{}", text(&again));
}

#[test]
fn subcommands_run_in_order() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in [
        "ingest",
        "disambiguate",
        "classify",
        "demography",
        "network",
        "metrics",
        "report",
    ] {
        let o = scimob(dir.path(), &[cmd]);
        assert!(o.status.success(), "{cmd}: {}", text(&o));
    }
}

#[test]
fn disambiguate_reports_against_reference() {
    let dir = tempfile::tempdir().unwrap();
    assert!(scimob(dir.path(), &["ingest"]).status.success());
    let reference = fixture_dir().join("reference.jsonl");
    let o = scimob(
        dir.path(),
        &["disambiguate", "--reference", reference.to_str().unwrap()],
    );
    assert!(o.status.success(), "{}", text(&o));
    assert!(text(&o).contains("255"), "{}", text(&o));
}

#[test]
fn network_exports_edges() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["ingest", "disambiguate", "classify"] {
        assert!(scimob(dir.path(), &[cmd]).status.success());
    }
    let edges = dir.path().join("collab.tsv");
    let o = scimob(
        dir.path(),
        &[
            "network",
            "--network",
            "collab",
            "--export-edges",
            edges.to_str().unwrap(),
        ],
    );
    assert!(o.status.success(), "{}", text(&o));
    let body = std::fs::read_to_string(edges).unwrap();
    assert!(body.starts_with("country_a\tcountry_b\tweight"));
}

#[test]
fn metrics_without_network_fails_naming_it() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["ingest", "disambiguate", "classify"] {
        assert!(scimob(dir.path(), &[cmd]).status.success());
    }
    let o = scimob(dir.path(), &["metrics"]);
    assert!(!o.status.success());
    assert!(text(&o).contains("network"), "{}", text(&o));
}

#[test]
fn bad_window_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let o = scimob(dir.path(), &["--window", "2017:2008", "run"]);
    assert!(!o.status.success());
}
