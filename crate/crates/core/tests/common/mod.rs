#![allow(dead_code)]

pub mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use scimob::indicators::{ReportBundle, BUNDLE_FILE};
use scimob::pipeline::{PipelineConfig, REPORT_DIR};
use scimob::synth::{SyntheticCorpus, CORPUS_FILE};

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Fixture config with its output redirected to `out`.
pub fn fixture_config(out: &Path) -> PipelineConfig {
    let mut cfg = PipelineConfig::from_path(fixture_dir().join("scimob.toml")).unwrap();
    cfg.out_dir = out.to_path_buf();
    cfg
}

/// Writes `corpus` into `dir` and returns a config running over it with
/// the generator's window and history.
pub fn synth_config(corpus: &SyntheticCorpus, dir: &Path, top_k: usize) -> PipelineConfig {
    corpus.write_to(dir, top_k).unwrap();
    PipelineConfig {
        inputs: vec![dir.join(CORPUS_FILE)],
        window: corpus.config.window,
        history_from: Some(corpus.config.history_from),
        top_k,
        min_country_count: 1,
        alluvial_threshold: 0,
        out_dir: dir.join("out"),
        ..PipelineConfig::default()
    }
}

pub fn read_bundle(cfg: &PipelineConfig) -> ReportBundle {
    let p = cfg.out_dir.join(REPORT_DIR).join(BUNDLE_FILE);
    serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap()
}

/// Every file under `dir`, keyed by its relative path.
pub fn tree_bytes(dir: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.insert(
                    p.strip_prefix(dir).unwrap().to_path_buf(),
                    fs::read(&p).unwrap(),
                );
            }
        }
    }
    out
}

/// Prints one verdict line past the test harness's output capture, so it
/// shows up in plain `cargo test` logs.
pub fn verdict(criterion: u8, pass: bool, detail: &str) {
    let line = format!(
        "acceptance criterion {criterion}: {} {detail}\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}
