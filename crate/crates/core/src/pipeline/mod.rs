//! Staged end-to-end runs.
//!
//! Stages run in the order ingest, disambiguate, classify, demography,
//! network, metrics, report. Each one reads its upstream artifacts from the
//! output directory and writes plain files next to them:
//!
//! | stage        | writes                                             |
//! |--------------|----------------------------------------------------|
//! | ingest       | `corpus.jsonl`, `ingest_stats.json`                |
//! | disambiguate | `assignments.tsv`                                  |
//! | classify     | `classifications.jsonl`                            |
//! | demography   | `demographics.jsonl`                               |
//! | network      | `collaboration_edges.tsv`, `mobility_edges.tsv`    |
//! | metrics      | `metrics.json`                                     |
//! | report       | `reports/*.csv`, `reports/reports.json`            |
//!
//! `manifest.json` records input digests, a cache key per stage, timings and
//! output digests. A rerun reuses any stage whose key and outputs are
//! unchanged.

mod config;
mod run;

pub use config::{GenderConfig, PipelineConfig};
pub use run::{
    file_digest, gender_providers, report_header, run_pipeline, stage, windowed_timelines,
    FileDigest, GraphMetrics, NetworkMetrics, RunManifest, Stage, StageRecord, StageStatus,
    MANIFEST_FILE, REPORT_DIR,
};
