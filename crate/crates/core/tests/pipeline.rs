mod common;

use std::fs;
use std::path::Path;

use common::{fixture_config, fixture_dir, read_bundle, tree_bytes};
use scimob::demography::RemoteProviderConfig;
use scimob::pipeline::{
    run_pipeline, stage, PipelineConfig, RunManifest, Stage, StageStatus, MANIFEST_FILE,
};
use scimob::Error;
use serde::{Deserialize, Serialize};

fn empty_config(dir: &Path) -> PipelineConfig {
    let input = dir.join("empty.jsonl");
    fs::write(&input, "").unwrap();
    PipelineConfig {
        inputs: vec![input],
        out_dir: dir.join("out"),
        ..PipelineConfig::default()
    }
}

#[test]
fn empty_corpus_succeeds_with_empty_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = empty_config(dir.path());
    let m = run_pipeline(&cfg).unwrap();
    assert!(m.succeeded());
    assert_eq!(m.stages.len(), Stage::ALL.len());
    let b = read_bundle(&cfg);
    let shares = b.shares.unwrap();
    assert!(shares.empty);
    assert_eq!(shares.total, 0);
    assert!(b.profiles.unwrap().is_empty());
    assert_eq!(b.pyramid.unwrap().emigrants, 0);
    assert!(b.alluvial.unwrap().is_empty());
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct GoldenStage {
    stage: Stage,
    key: String,
    outputs: Vec<(String, String)>,
}

fn golden_view(m: &RunManifest) -> Vec<GoldenStage> {
    m.stages
        .iter()
        .map(|s| GoldenStage {
            stage: s.stage,
            key: s.key.clone(),
            outputs: s
                .outputs
                .iter()
                .map(|o| (o.path.clone(), o.sha256.clone()))
                .collect(),
        })
        .collect()
}

/// `UPDATE_GOLDEN=1 cargo test --test pipeline` rewrites the golden file
/// after a verified change.
#[test]
fn fixture_matches_golden_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let m = run_pipeline(&fixture_config(dir.path())).unwrap();
    let got = golden_view(&m);
    let path = fixture_dir().join("golden_manifest.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Vec<GoldenStage> = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want);
}

#[test]
fn rerun_hits_cache_and_keeps_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    let first = run_pipeline(&cfg).unwrap();
    assert!(first.stages.iter().all(|s| !s.cache_hit));
    let before = tree_bytes(&cfg.out_dir);
    let second = run_pipeline(&cfg).unwrap();
    assert!(second
        .stages
        .iter()
        .all(|s| s.cache_hit && s.status == StageStatus::Succeeded));
    let mut after = tree_bytes(&cfg.out_dir);
    let mut before = before;
    // only the manifest's cache flags and timings differ
    before.remove(Path::new(MANIFEST_FILE));
    after.remove(Path::new(MANIFEST_FILE));
    assert_eq!(before, after);
    assert_eq!(golden_view(&first), golden_view(&second));
}

#[test]
fn cache_hit_equals_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    let cached = {
        run_pipeline(&cfg).unwrap();
        run_pipeline(&cfg).unwrap()
    };
    fs::remove_file(cfg.out_dir.join(MANIFEST_FILE)).unwrap();
    let fresh = run_pipeline(&cfg).unwrap();
    assert!(fresh.stages.iter().all(|s| !s.cache_hit));
    assert_eq!(golden_view(&cached), golden_view(&fresh));
}

#[test]
fn tampered_artifact_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    run_pipeline(&cfg).unwrap();
    let p = cfg.out_dir.join("metrics.json");
    let original = fs::read(&p).unwrap();
    fs::write(&p, b"{}").unwrap();
    let m = run_pipeline(&cfg).unwrap();
    assert!(!m.stage(Stage::Metrics).unwrap().cache_hit);
    assert!(m.stage(Stage::Network).unwrap().cache_hit);
    assert_eq!(fs::read(&p).unwrap(), original);
}

#[test]
fn changed_input_invalidates_every_stage() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("corpus.jsonl");
    fs::copy(fixture_dir().join("corpus.jsonl"), &input).unwrap();
    let mut cfg = fixture_config(&dir.path().join("out"));
    cfg.inputs = vec![input.clone()];
    run_pipeline(&cfg).unwrap();
    let mut text = fs::read_to_string(&input).unwrap();
    text.push_str(r#"{"pub_id":"EXTRA","year":2015,"mentions":[{"last_name":"Zed","first_name":"Amal","countries":["OMN"]}]}"#);
    text.push('\n');
    fs::write(&input, text).unwrap();
    let m = run_pipeline(&cfg).unwrap();
    assert!(m.stages.iter().all(|s| !s.cache_hit));
}

#[test]
fn metrics_without_graphs_names_the_network_stage() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    for s in [Stage::Ingest, Stage::Disambiguate, Stage::Classify] {
        stage(s, &cfg).unwrap();
    }
    match stage(Stage::Metrics, &cfg) {
        Err(Error::MissingUpstream { stage, required }) => {
            assert_eq!(stage, "metrics");
            assert_eq!(required, "network");
        }
        other => panic!("expected a missing-upstream error, got {other:?}"),
    }
    let err = stage(Stage::Metrics, &cfg).unwrap_err().to_string();
    assert!(err.contains("\"network\""), "{err}");
}

#[test]
fn classify_alone_after_disambiguation_writes_classifications() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    stage(Stage::Ingest, &cfg).unwrap();
    stage(Stage::Disambiguate, &cfg).unwrap();
    let r = stage(Stage::Classify, &cfg).unwrap();
    assert_eq!(r.outputs[0].path, "classifications.jsonl");
    assert!(
        cfg.out_dir
            .join("classifications.jsonl")
            .metadata()
            .unwrap()
            .len()
            > 0
    );
    let m = RunManifest::read(&cfg.out_dir).unwrap();
    assert_eq!(m.stages.len(), 3);
}

#[test]
fn stage_by_stage_matches_full_run() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let cfg_a = fixture_config(a.path());
    let cfg_b = fixture_config(b.path());
    run_pipeline(&cfg_a).unwrap();
    for s in Stage::ALL {
        stage(s, &cfg_b).unwrap();
    }
    let mut ta = tree_bytes(a.path());
    let mut tb = tree_bytes(b.path());
    ta.remove(Path::new(MANIFEST_FILE));
    tb.remove(Path::new(MANIFEST_FILE));
    assert_eq!(ta.keys().collect::<Vec<_>>(), tb.keys().collect::<Vec<_>>());
    assert_eq!(ta, tb);
}

#[test]
fn failed_stage_is_marked_and_the_rest_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.jsonl");
    fs::write(&input, "{\"pub_id\":\"W1\",\"year\":2010,\"mentions\":[{\"last_name\":\"A\",\"first_name\":\"B\",\"countries\":[\"XXX\"]}]}\n").unwrap();
    let cfg = PipelineConfig {
        inputs: vec![input],
        strict: true,
        out_dir: dir.path().join("out"),
        ..PipelineConfig::default()
    };
    let err = run_pipeline(&cfg).unwrap_err();
    assert!(
        matches!(err, Error::Stage { ref stage, .. } if stage == "ingest"),
        "{err}"
    );
    let m = RunManifest::read(&cfg.out_dir).unwrap();
    assert_eq!(m.stages[0].status, StageStatus::Failed);
    assert!(m.stages[0].error.as_deref().unwrap().contains("XXX"));
    assert!(m.stages[1..]
        .iter()
        .all(|s| s.status == StageStatus::Skipped));
    assert!(!m.succeeded());
}

#[test]
fn lenient_ingest_counts_rejections() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mixed.jsonl");
    fs::write(
        &input,
        concat!(
            "{\"pub_id\":\"W1\",\"year\":2010,\"mentions\":[{\"last_name\":\"Saad\",\"first_name\":\"Ali\",\"countries\":[\"EGY\"]}]}\n",
            "garbage\n",
            "{\"pub_id\":\"W2\",\"year\":1990,\"mentions\":[{\"last_name\":\"Saad\",\"first_name\":\"Ali\",\"countries\":[\"EGY\"]}]}\n",
        ),
    )
    .unwrap();
    let cfg = PipelineConfig {
        inputs: vec![input],
        out_dir: dir.path().join("out"),
        ..PipelineConfig::default()
    };
    run_pipeline(&cfg).unwrap();
    let stats: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(cfg.out_dir.join("ingest_stats.json")).unwrap())
            .unwrap();
    assert_eq!(stats["stats"]["rejected_lines"], 1);
    assert_eq!(stats["kept_records"], 1);
    assert_eq!(stats["outside_years"], 1);
}

#[test]
fn locked_output_directory_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = empty_config(dir.path());
    fs::create_dir_all(&cfg.out_dir).unwrap();
    fs::write(cfg.out_dir.join(".scimob.lock"), "1\n").unwrap();
    assert!(matches!(run_pipeline(&cfg), Err(Error::Locked(_))));
    fs::remove_file(cfg.out_dir.join(".scimob.lock")).unwrap();
    run_pipeline(&cfg).unwrap();
    assert!(!cfg.out_dir.join(".scimob.lock").exists());
}

#[test]
fn reproducible_mode_refuses_remote_providers() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = empty_config(dir.path());
    cfg.gender.remote.push(RemoteProviderConfig {
        name: "svc".into(),
        base_url: "http://127.0.0.1:9/".into(),
        api_key_env: None,
        timeout_ms: 10,
        min_interval_ms: 0,
    });
    assert!(matches!(run_pipeline(&cfg), Err(Error::Config(_))));
}

#[test]
fn config_is_embedded_in_report_headers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(dir.path());
    run_pipeline(&cfg).unwrap();
    let csv = fs::read_to_string(cfg.out_dir.join("reports/shares.csv")).unwrap();
    let header = csv.lines().next().unwrap();
    assert!(header.starts_with("# window=2008:2017"), "{header}");
    assert!(header.contains("min_country_count=5"));
    assert_eq!(read_bundle(&cfg).header.top_k, 15);
}
