use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::config::PipelineConfig;
use crate::corpus::{
    filter_window, index_by_id, parse_corpus, read_corpus, write_corpus, CorpusStats, Diagnostic,
    ParseOptions, PublicationRecord,
};
use crate::demography::{
    attribute, read_demographics, representative_first_name, write_demographics, DemographyConfig,
    GenderProvider, LocalGenderTable,
};
use crate::disambig::{disambiguate, read_assignments, write_assignments, AuthorCluster};
use crate::error::{Error, Result};
use crate::indicators::{build_reports, write_reports, IndicatorInputs, ReportHeader};
use crate::mobility::{
    build_history, build_timeline, classify, read_classifications, write_classifications,
    AffiliationTimeline, MobilityClassification,
};
use crate::netmetrics::{
    build_coauthorship_network, centrality_table, mobility_network_from, read_edge_list,
    structural_measures, write_edge_list, CountryGraph, NodeCentrality, StructuralMeasures,
};

pub const MANIFEST_FILE: &str = "manifest.json";
const LOCK_FILE: &str = ".scimob.lock";
const CORPUS: &str = "corpus.jsonl";
const INGEST_STATS: &str = "ingest_stats.json";
const ASSIGNMENTS: &str = "assignments.tsv";
const CLASSIFICATIONS: &str = "classifications.jsonl";
const DEMOGRAPHICS: &str = "demographics.jsonl";
const COLLAB_EDGES: &str = "collaboration_edges.tsv";
const MOBILITY_EDGES: &str = "mobility_edges.tsv";
const METRICS: &str = "metrics.json";
/// Report files live in this subdirectory of the output directory.
pub const REPORT_DIR: &str = "reports";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Ingest,
    Disambiguate,
    Classify,
    Demography,
    Network,
    Metrics,
    Report,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Ingest,
        Stage::Disambiguate,
        Stage::Classify,
        Stage::Demography,
        Stage::Network,
        Stage::Metrics,
        Stage::Report,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Ingest => "ingest",
            Stage::Disambiguate => "disambiguate",
            Stage::Classify => "classify",
            Stage::Demography => "demography",
            Stage::Network => "network",
            Stage::Metrics => "metrics",
            Stage::Report => "report",
        }
    }

    /// Stages whose artifacts this one reads.
    pub fn upstream(self) -> &'static [Stage] {
        match self {
            Stage::Ingest => &[],
            Stage::Disambiguate => &[Stage::Ingest],
            Stage::Classify => &[Stage::Ingest, Stage::Disambiguate],
            Stage::Demography => &[Stage::Ingest, Stage::Disambiguate, Stage::Classify],
            Stage::Network => &[Stage::Ingest, Stage::Classify],
            Stage::Metrics => &[Stage::Network],
            Stage::Report => &[
                Stage::Ingest,
                Stage::Disambiguate,
                Stage::Classify,
                Stage::Demography,
                Stage::Network,
            ],
        }
    }

    /// Artifacts a downstream stage reads, relative to the output directory.
    pub fn artifacts(self) -> &'static [&'static str] {
        match self {
            Stage::Ingest => &[CORPUS, INGEST_STATS],
            Stage::Disambiguate => &[ASSIGNMENTS],
            Stage::Classify => &[CLASSIFICATIONS],
            Stage::Demography => &[DEMOGRAPHICS],
            Stage::Network => &[COLLAB_EDGES, MOBILITY_EDGES],
            Stage::Metrics => &[METRICS],
            Stage::Report => &["reports/reports.json"],
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown stage {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

pub fn file_digest(path: &Path) -> Result<(String, u64)> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok((hex::encode(Sha256::digest(&bytes)), bytes.len() as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageStatus {
    Succeeded,
    Failed,
    /// Not run because an earlier stage failed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: Stage,
    pub status: StageStatus,
    pub cache_hit: bool,
    /// Digest of the stage's config and upstream artifacts.
    pub key: String,
    pub duration_ms: u64,
    pub outputs: Vec<FileDigest>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub config_digest: String,
    pub inputs: Vec<FileDigest>,
    pub stages: Vec<StageRecord>,
}

impl RunManifest {
    pub fn stage(&self, stage: Stage) -> Option<&StageRecord> {
        self.stages.iter().find(|s| s.stage == stage)
    }

    pub fn succeeded(&self) -> bool {
        self.stages
            .iter()
            .all(|s| s.status == StageStatus::Succeeded)
    }

    pub fn read(out_dir: &Path) -> Option<Self> {
        let text = fs::read_to_string(out_dir.join(MANIFEST_FILE)).ok()?;
        serde_json::from_str(&text).ok()
    }

    fn write(&self, out_dir: &Path) -> Result<()> {
        let path = out_dir.join(MANIFEST_FILE);
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| Error::io(&path, e))
    }
}

/// One run per output directory; the lock file goes away on drop.
struct RunLock(PathBuf);

impl RunLock {
    fn acquire(out_dir: &Path) -> Result<Self> {
        fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
        let path = out_dir.join(LOCK_FILE);
        match OpenOptions::new().write(true).create_new(true).open(&path) {
            Ok(mut f) => {
                let _ = writeln!(f, "{}", std::process::id());
                Ok(Self(path))
            }
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => Err(Error::Locked(path)),
            Err(e) => Err(Error::io(&path, e)),
        }
    }
}

impl Drop for RunLock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

struct Context<'a> {
    config: &'a PipelineConfig,
    out: &'a Path,
}

impl Context<'_> {
    fn path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }

    fn create(&self, name: &str) -> Result<BufWriter<File>> {
        let p = self.path(name);
        File::create(&p)
            .map(BufWriter::new)
            .map_err(|e| Error::io(&p, e))
    }

    fn open(&self, name: &str) -> Result<BufReader<File>> {
        let p = self.path(name);
        File::open(&p)
            .map(BufReader::new)
            .map_err(|e| Error::io(&p, e))
    }

    fn records(&self) -> Result<Vec<PublicationRecord>> {
        read_corpus(self.open(CORPUS)?)
    }

    fn clusters(&self, records: &[PublicationRecord]) -> Result<Vec<AuthorCluster>> {
        read_assignments(self.open(ASSIGNMENTS)?, records)
    }

    fn classifications(&self) -> Result<Vec<MobilityClassification>> {
        read_classifications(self.open(CLASSIFICATIONS)?)
    }

    fn graph(&self, name: &str) -> Result<CountryGraph> {
        read_edge_list(self.open(name)?)
    }
}

fn finish(mut w: BufWriter<File>) -> Result<()> {
    w.flush().map_err(|e| Error::io("<artifact>", e))
}

/// Windowed timelines of every cluster with at least one in-window
/// publication.
pub fn windowed_timelines(
    clusters: &[AuthorCluster],
    records: &[PublicationRecord],
    window: crate::corpus::StudyWindow,
) -> Vec<AffiliationTimeline> {
    let index = index_by_id(records);
    clusters
        .iter()
        .map(|c| build_timeline(c, &index, window))
        .filter(|t| !t.entries.is_empty())
        .collect()
}

#[derive(Serialize)]
struct IngestReport<'a> {
    stats: &'a CorpusStats,
    kept_records: usize,
    outside_years: usize,
    duplicate_ids: usize,
    diagnostics: &'a [Diagnostic],
}

fn run_ingest(ctx: &Context<'_>) -> Result<()> {
    let cfg = ctx.config;
    let registry = cfg.load_registry()?;
    let mut stats = CorpusStats::default();
    let mut diagnostics = Vec::new();
    let mut records: Vec<PublicationRecord> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let (mut outside, mut duplicates) = (0, 0);
    let (lo, hi) = (cfg.history_start(), cfg.window.end());
    for input in &cfg.inputs {
        let f = File::open(input).map_err(|e| Error::io(input, e))?;
        let parsed = parse_corpus(
            BufReader::new(f),
            &registry,
            ParseOptions { strict: cfg.strict },
        )?;
        stats.merge(&parsed.stats);
        diagnostics.extend(parsed.diagnostics);
        for r in parsed.records {
            if !(lo..=hi).contains(&r.year) {
                outside += 1;
            } else if !seen.insert(r.pub_id.clone()) {
                duplicates += 1;
            } else {
                records.push(r);
            }
        }
    }
    let mut w = ctx.create(CORPUS)?;
    write_corpus(&records, &mut w)?;
    finish(w)?;
    let report = IngestReport {
        stats: &stats,
        kept_records: records.len(),
        outside_years: outside,
        duplicate_ids: duplicates,
        diagnostics: &diagnostics,
    };
    let mut w = ctx.create(INGEST_STATS)?;
    serde_json::to_writer_pretty(&mut w, &report)?;
    w.write_all(b"\n").map_err(|e| Error::io(INGEST_STATS, e))?;
    finish(w)
}

fn run_disambiguate(ctx: &Context<'_>) -> Result<()> {
    let records = ctx.records()?;
    let clusters = disambiguate(&records, &ctx.config.disambiguation);
    let mut w = ctx.create(ASSIGNMENTS)?;
    write_assignments(&clusters, &mut w)?;
    finish(w)
}

fn run_classify(ctx: &Context<'_>) -> Result<()> {
    let records = ctx.records()?;
    let clusters = ctx.clusters(&records)?;
    let out: Vec<MobilityClassification> =
        windowed_timelines(&clusters, &records, ctx.config.window)
            .iter()
            .map(classify)
            .collect();
    let mut w = ctx.create(CLASSIFICATIONS)?;
    write_classifications(&out, &mut w)?;
    finish(w)
}

/// Builds the configured provider chain.
pub fn gender_providers(config: &PipelineConfig) -> Result<Vec<Box<dyn GenderProvider>>> {
    let mut out: Vec<Box<dyn GenderProvider>> = Vec::new();
    for t in &config.gender.tables {
        out.push(Box::new(LocalGenderTable::from_path(t)?));
    }
    if config.gender.bundled_table {
        out.push(Box::new(LocalGenderTable::bundled()));
    }
    if !config.gender.remote.is_empty() {
        if config.reproducible {
            return Err(Error::Config(
                "remote gender providers are not allowed in reproducible mode".into(),
            ));
        }
        #[cfg(feature = "remote")]
        for r in &config.gender.remote {
            out.push(Box::new(crate::demography::RemoteGenderProvider::new(
                r.clone(),
            )?));
        }
        #[cfg(not(feature = "remote"))]
        return Err(Error::Config(
            "remote gender providers need the `remote` cargo feature".into(),
        ));
    }
    Ok(out)
}

fn run_demography(ctx: &Context<'_>) -> Result<()> {
    let cfg = ctx.config;
    let records = ctx.records()?;
    let clusters = ctx.clusters(&records)?;
    let classifications = ctx.classifications()?;
    let boxed = gender_providers(cfg)?;
    let providers: Vec<&dyn GenderProvider> = boxed.iter().map(|b| b.as_ref()).collect();
    let index = index_by_id(&records);
    let by_id: BTreeMap<&str, &AuthorCluster> = clusters
        .iter()
        .map(|c| (c.cluster_id.as_str(), c))
        .collect();
    let dcfg = DemographyConfig {
        age_reference: cfg.age_reference,
        window_end: cfg.window.end(),
        min_confidence: cfg.gender.min_confidence,
    };
    let mut out = Vec::with_capacity(classifications.len());
    for c in &classifications {
        let cluster = by_id
            .get(c.cluster_id.as_str())
            .ok_or_else(|| Error::Stage {
                stage: Stage::Demography.name().into(),
                message: format!("classified cluster {:?} has no assignments", c.cluster_id),
            })?;
        let history = build_history(cluster, &index);
        let name = representative_first_name(cluster, &index);
        out.push(attribute(&history, Some(c), &name, &providers, &dcfg)?);
    }
    let mut w = ctx.create(DEMOGRAPHICS)?;
    write_demographics(&out, &mut w)?;
    finish(w)
}

fn run_network(ctx: &Context<'_>) -> Result<()> {
    let records = filter_window(&ctx.records()?, ctx.config.window);
    let collab = build_coauthorship_network(&records);
    let mobility = mobility_network_from(&ctx.classifications()?);
    for (name, g) in [(COLLAB_EDGES, &collab), (MOBILITY_EDGES, &mobility)] {
        let mut w = ctx.create(name)?;
        write_edge_list(g, &mut w)?;
        finish(w)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub measures: StructuralMeasures,
    /// Degree and closeness of the MENA countries in the graph.
    pub mena_centrality: Vec<NodeCentrality>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkMetrics {
    pub collaboration: GraphMetrics,
    pub mobility: GraphMetrics,
}

fn run_metrics(ctx: &Context<'_>) -> Result<()> {
    let registry = ctx.config.load_registry()?;
    let mena = registry.mena_set();
    let metrics_of = |g: &CountryGraph| GraphMetrics {
        measures: structural_measures(g),
        mena_centrality: centrality_table(g, mena.iter().map(String::as_str)),
    };
    let m = NetworkMetrics {
        collaboration: metrics_of(&ctx.graph(COLLAB_EDGES)?),
        mobility: metrics_of(&ctx.graph(MOBILITY_EDGES)?),
    };
    let mut w = ctx.create(METRICS)?;
    serde_json::to_writer_pretty(&mut w, &m)?;
    w.write_all(b"\n").map_err(|e| Error::io(METRICS, e))?;
    finish(w)
}

pub fn report_header(config: &PipelineConfig) -> ReportHeader {
    ReportHeader {
        window: config.window.to_string(),
        age_reference: config.age_reference.to_string(),
        min_confidence: config.gender.min_confidence,
        disambiguation_threshold: config.disambiguation.threshold,
        min_country_count: config.min_country_count,
        alluvial_threshold: config.alluvial_threshold,
        top_k: config.top_k,
    }
}

fn run_report(ctx: &Context<'_>) -> Result<Vec<PathBuf>> {
    let cfg = ctx.config;
    let registry = cfg.load_registry()?;
    let all = ctx.records()?;
    let clusters = ctx.clusters(&all)?;
    let timelines = windowed_timelines(&clusters, &all, cfg.window);
    let records = filter_window(&all, cfg.window);
    let classifications = ctx.classifications()?;
    let demographics = read_demographics(ctx.open(DEMOGRAPHICS)?)?;
    let collaboration = ctx.graph(COLLAB_EDGES)?;
    let mobility = ctx.graph(MOBILITY_EDGES)?;
    let inputs = IndicatorInputs {
        records: &records,
        timelines: &timelines,
        classifications: &classifications,
        demographics: &demographics,
        collaboration: &collaboration,
        mobility: &mobility,
        registry: &registry,
    };
    let bundle = build_reports(&inputs, report_header(cfg), &cfg.reports)?;
    let dir = ctx.path(REPORT_DIR);
    if dir.exists() {
        fs::remove_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    }
    write_reports(&bundle, &dir)
}

/// Runs one stage and returns the files it wrote.
fn execute(stage: Stage, ctx: &Context<'_>) -> Result<Vec<PathBuf>> {
    let fixed = |names: &[&str]| names.iter().map(|n| ctx.path(n)).collect::<Vec<_>>();
    match stage {
        Stage::Ingest => run_ingest(ctx).map(|_| fixed(Stage::Ingest.artifacts())),
        Stage::Disambiguate => {
            run_disambiguate(ctx).map(|_| fixed(Stage::Disambiguate.artifacts()))
        }
        Stage::Classify => run_classify(ctx).map(|_| fixed(Stage::Classify.artifacts())),
        Stage::Demography => run_demography(ctx).map(|_| fixed(Stage::Demography.artifacts())),
        Stage::Network => run_network(ctx).map(|_| fixed(Stage::Network.artifacts())),
        Stage::Metrics => run_metrics(ctx).map(|_| fixed(Stage::Metrics.artifacts())),
        Stage::Report => run_report(ctx),
    }
}

fn relative(out: &Path, p: &Path) -> String {
    p.strip_prefix(out)
        .unwrap_or(p)
        .to_string_lossy()
        .replace('\\', "/")
}

fn digest_outputs(out: &Path, paths: &[PathBuf]) -> Result<Vec<FileDigest>> {
    paths
        .iter()
        .map(|p| {
            let (sha256, bytes) = file_digest(p)?;
            Ok(FileDigest {
                path: relative(out, p),
                sha256,
                bytes,
            })
        })
        .collect()
}

fn input_digests(config: &PipelineConfig) -> Result<Vec<FileDigest>> {
    let mut paths: Vec<&PathBuf> = config.inputs.iter().collect();
    paths.extend(config.registry.iter());
    paths.extend(config.gender.tables.iter());
    paths
        .into_iter()
        .map(|p| {
            let (sha256, bytes) = file_digest(p)?;
            Ok(FileDigest {
                path: p.display().to_string(),
                sha256,
                bytes,
            })
        })
        .collect()
}

/// Digest of the config with file paths replaced by content digests, so
/// moving inputs or the output directory does not invalidate the cache.
fn config_digest(config: &PipelineConfig, inputs: &[FileDigest]) -> String {
    let mut c = config.clone();
    c.out_dir = PathBuf::new();
    c.inputs.clear();
    c.registry = None;
    c.gender.tables.clear();
    let mut h = Sha256::new();
    h.update(serde_json::to_string(&c).expect("config serializes"));
    for d in inputs {
        h.update(&d.sha256);
    }
    hex::encode(h.finalize())
}

/// Cache key: stage name, config digest and the digests of the upstream
/// artifacts the stage reads.
fn stage_key(stage: Stage, config_digest: &str, out: &Path) -> Result<String> {
    let mut h = Sha256::new();
    h.update(stage.name());
    h.update(config_digest);
    for up in stage.upstream() {
        for a in up.artifacts() {
            h.update(file_digest(&out.join(a))?.0);
        }
    }
    Ok(hex::encode(h.finalize()))
}

fn cached(
    previous: Option<&RunManifest>,
    stage: Stage,
    key: &str,
    out: &Path,
) -> Option<Vec<FileDigest>> {
    let rec = previous?.stage(stage)?;
    if rec.status != StageStatus::Succeeded || rec.key != key {
        return None;
    }
    for o in &rec.outputs {
        match file_digest(&out.join(&o.path)) {
            Ok((d, _)) if d == o.sha256 => {}
            _ => return None,
        }
    }
    Some(rec.outputs.clone())
}

fn check_upstream(stage: Stage, out: &Path) -> Result<()> {
    for up in stage.upstream() {
        if up.artifacts().iter().any(|a| !out.join(a).is_file()) {
            return Err(Error::MissingUpstream {
                stage: stage.name().into(),
                required: up.name().into(),
            });
        }
    }
    Ok(())
}

fn run_one(
    stage: Stage,
    config: &PipelineConfig,
    digest: &str,
    previous: Option<&RunManifest>,
) -> (StageRecord, Option<Error>) {
    let out = config.out_dir.as_path();
    let started = Instant::now();
    let mut record = StageRecord {
        stage,
        status: StageStatus::Failed,
        cache_hit: false,
        key: String::new(),
        duration_ms: 0,
        outputs: Vec::new(),
        error: None,
    };
    let result = (|| -> Result<(bool, Vec<FileDigest>)> {
        check_upstream(stage, out)?;
        record.key = stage_key(stage, digest, out)?;
        if let Some(outputs) = cached(previous, stage, &record.key, out) {
            return Ok((true, outputs));
        }
        let ctx = Context { config, out };
        let written = execute(stage, &ctx)?;
        Ok((false, digest_outputs(out, &written)?))
    })();
    record.duration_ms = started.elapsed().as_millis() as u64;
    match result {
        Ok((hit, outputs)) => {
            record.status = StageStatus::Succeeded;
            record.cache_hit = hit;
            record.outputs = outputs;
            log::info!(
                "stage {stage}: {} in {} ms",
                if hit { "cached" } else { "done" },
                record.duration_ms
            );
            (record, None)
        }
        Err(e) => {
            record.error = Some(e.to_string());
            log::error!("stage {stage} failed: {e}");
            (record, Some(e))
        }
    }
}

/// Runs every stage in order, reusing stages whose key and outputs match
/// the previous manifest in the output directory. On failure the manifest
/// marks the failed stage, later stages are skipped, and the error is
/// returned.
pub fn run_pipeline(config: &PipelineConfig) -> Result<RunManifest> {
    config.validate()?;
    let out = config.out_dir.as_path();
    let _lock = RunLock::acquire(out)?;
    let previous = RunManifest::read(out);
    let inputs = input_digests(config)?;
    let digest = config_digest(config, &inputs);
    let mut manifest = RunManifest {
        config_digest: digest.clone(),
        inputs,
        stages: Vec::new(),
    };
    let mut failure = None;
    for stage in Stage::ALL {
        if failure.is_some() {
            manifest.stages.push(StageRecord {
                stage,
                status: StageStatus::Skipped,
                cache_hit: false,
                key: String::new(),
                duration_ms: 0,
                outputs: Vec::new(),
                error: None,
            });
            continue;
        }
        let (record, err) = run_one(stage, config, &digest, previous.as_ref());
        manifest.stages.push(record);
        failure = err.map(|e| (stage, e));
    }
    manifest.write(out)?;
    match failure {
        None => Ok(manifest),
        Some((stage, e)) => Err(Error::Stage {
            stage: stage.name().into(),
            message: e.to_string(),
        }),
    }
}

/// Runs a single stage against the artifacts already in the output
/// directory and records it in the manifest. Never served from cache.
pub fn stage(name: Stage, config: &PipelineConfig) -> Result<StageRecord> {
    config.validate()?;
    let out = config.out_dir.as_path();
    check_upstream(name, out)?;
    let _lock = RunLock::acquire(out)?;
    let inputs = input_digests(config)?;
    let digest = config_digest(config, &inputs);
    let (record, err) = run_one(name, config, &digest, None);
    if let Some(e) = err {
        return Err(e);
    }
    let mut manifest = RunManifest::read(out).unwrap_or(RunManifest {
        config_digest: digest.clone(),
        inputs,
        stages: Vec::new(),
    });
    manifest.stages.retain(|s| s.stage != name);
    manifest.stages.push(record.clone());
    manifest.stages.sort_by_key(|s| s.stage);
    manifest.write(out)?;
    Ok(record)
}
