use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use scimob::corpus::{read_corpus, StudyWindow};
use scimob::demography::AgeReference;
use scimob::disambig::{
    read_assignments, read_reference, validate_against_reference, DisambigConfig,
};
use scimob::indicators::ReportKind;
use scimob::pipeline::{run_pipeline, stage, PipelineConfig, RunManifest, Stage, StageRecord};

/// Researcher mobility and collaboration analytics over publication metadata.
#[derive(Parser)]
#[command(name = "scimob", version)]
struct Cli {
    /// TOML config; flags override its keys.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(flatten)]
    opts: Overrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate the input corpus.
    Ingest,
    /// Cluster author mentions into researchers.
    Disambiguate {
        /// Reference identities (JSON lines) to validate the clusters against.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Build timelines and assign mobility typologies.
    Classify,
    /// Attribute academic origin, age and gender.
    Demography,
    /// Build the co-authorship and mobility graphs.
    Network {
        #[arg(long, value_enum)]
        network: Option<NetworkKind>,
        /// Copy the selected graph's edge list here.
        #[arg(long, requires = "network")]
        export_edges: Option<PathBuf>,
    },
    /// Structural and centrality measures of both graphs.
    Metrics,
    /// Write the indicator reports.
    Report,
    /// Every stage in order, reusing cached stages.
    Run,
}

#[derive(Clone, Copy, ValueEnum)]
enum NetworkKind {
    Collab,
    Mobility,
}

#[derive(Args)]
struct Overrides {
    #[arg(long, global = true)]
    input: Vec<PathBuf>,
    #[arg(long, global = true)]
    registry: Option<PathBuf>,
    /// Study window as `start:end`.
    #[arg(long, global = true)]
    window: Option<StudyWindow>,
    #[arg(long, global = true)]
    history_from: Option<i32>,
    /// Abort on the first malformed record.
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true)]
    threshold: Option<f64>,
    /// TOML file with a disambiguation threshold and weights.
    #[arg(long, global = true)]
    weights: Option<PathBuf>,
    /// Extra local gender tables, asked before the bundled one.
    #[arg(long = "gender-providers", global = true)]
    gender_providers: Vec<PathBuf>,
    #[arg(long, global = true)]
    min_confidence: Option<f64>,
    #[arg(long, global = true)]
    age_reference: Option<AgeReference>,
    #[arg(long, global = true)]
    min_country_count: Option<u64>,
    #[arg(long, global = true)]
    alluvial_threshold: Option<u64>,
    #[arg(long, global = true)]
    top_k: Option<usize>,
    /// shares, profiles, pyramid, gender, mena-shares, alluvial or all.
    #[arg(long, global = true)]
    report: Vec<ReportKind>,
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Allow remote gender providers from the config file.
    #[arg(long, global = true)]
    allow_remote: bool,
}

fn load_config(cli: &Cli) -> Result<PipelineConfig> {
    let mut cfg = match &cli.config {
        Some(p) => PipelineConfig::from_path(p)?,
        None => PipelineConfig::default(),
    };
    let o = &cli.opts;
    if !o.input.is_empty() {
        cfg.inputs = o.input.clone();
    }
    if let Some(r) = &o.registry {
        cfg.registry = Some(r.clone());
    }
    if let Some(w) = o.window {
        cfg.window = w;
    }
    if o.history_from.is_some() {
        cfg.history_from = o.history_from;
    }
    cfg.strict |= o.strict;
    if let Some(p) = &o.weights {
        cfg.disambiguation = DisambigConfig::from_path(p)?;
    }
    if let Some(t) = o.threshold {
        cfg.disambiguation.threshold = t;
    }
    if !o.gender_providers.is_empty() {
        cfg.gender.tables = o.gender_providers.clone();
    }
    if let Some(c) = o.min_confidence {
        cfg.gender.min_confidence = c;
    }
    if let Some(a) = o.age_reference {
        cfg.age_reference = a;
    }
    if let Some(n) = o.min_country_count {
        cfg.min_country_count = n;
    }
    if let Some(n) = o.alluvial_threshold {
        cfg.alluvial_threshold = n;
    }
    if let Some(k) = o.top_k {
        cfg.top_k = k;
    }
    if !o.report.is_empty() {
        cfg.reports = o.report.clone();
    }
    if let Some(d) = &o.out_dir {
        cfg.out_dir = d.clone();
    }
    if o.allow_remote {
        cfg.reproducible = false;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(
        File::open(path).with_context(|| path.display().to_string())?,
    ))
}

fn print_record(r: &StageRecord) {
    let state = if r.cache_hit { "cached" } else { "ok" };
    println!(
        "{:<13} {:<7} {:>6} ms",
        r.stage.name(),
        state,
        r.duration_ms
    );
    for o in &r.outputs {
        println!("    {} ({} bytes)", o.path, o.bytes);
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Run => {
            let result = run_pipeline(&cfg);
            if let Some(m) = RunManifest::read(&cfg.out_dir) {
                for r in &m.stages {
                    match &r.error {
                        Some(e) => println!("{:<13} failed  {e}", r.stage.name()),
                        None => print_record(r),
                    }
                }
            }
            result?;
        }
        Command::Ingest => print_record(&stage(Stage::Ingest, &cfg)?),
        Command::Disambiguate { reference } => {
            print_record(&stage(Stage::Disambiguate, &cfg)?);
            if let Some(path) = reference {
                let records = read_corpus(open(&cfg.out_dir.join("corpus.jsonl"))?)?;
                let clusters =
                    read_assignments(open(&cfg.out_dir.join("assignments.tsv"))?, &records)?;
                let reference = read_reference(open(path)?)?;
                println!(
                    "{}",
                    validate_against_reference(&clusters, &records, &reference)
                );
            }
        }
        Command::Classify => print_record(&stage(Stage::Classify, &cfg)?),
        Command::Demography => print_record(&stage(Stage::Demography, &cfg)?),
        Command::Network {
            network,
            export_edges,
        } => {
            print_record(&stage(Stage::Network, &cfg)?);
            if let (Some(kind), Some(dest)) = (network, export_edges) {
                let src = cfg.out_dir.join(match kind {
                    NetworkKind::Collab => "collaboration_edges.tsv",
                    NetworkKind::Mobility => "mobility_edges.tsv",
                });
                std::fs::copy(&src, dest).with_context(|| dest.display().to_string())?;
            }
        }
        Command::Metrics => print_record(&stage(Stage::Metrics, &cfg)?),
        Command::Report => print_record(&stage(Stage::Report, &cfg)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
