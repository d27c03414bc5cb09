//! Generates a planted-population corpus.
//!
//! ```text
//! cargo run --example synthetic_corpus -- OUT_DIR [RESEARCHERS] [SEED] [--realistic]
//! ```
//!
//! Writes `corpus.jsonl`, `reference.jsonl` (one identity per researcher)
//! and `planted.json` (the indicator values a correct run must recover).

use std::path::PathBuf;

use scimob::indicators::DEFAULT_TOP_K;
use scimob::synth::{SynthConfig, SyntheticCorpus};

fn main() -> scimob::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    let realistic = args.iter().any(|a| a == "--realistic");
    args.retain(|a| a != "--realistic");
    let out = PathBuf::from(args.first().map(String::as_str).unwrap_or("synth-out"));
    let mut cfg = if realistic {
        SynthConfig::realistic()
    } else {
        SynthConfig::default()
    };
    if let Some(n) = args.get(1) {
        cfg.researchers = n.parse().expect("RESEARCHERS must be an integer");
    }
    if let Some(s) = args.get(2) {
        cfg.seed = s.parse().expect("SEED must be an integer");
    }

    let corpus = SyntheticCorpus::generate(&cfg);
    corpus.write_to(&out, DEFAULT_TOP_K)?;

    let manifest = corpus.manifest(DEFAULT_TOP_K);
    println!(
        "{} researchers, {} records, {} mentions -> {}",
        corpus.researchers.len(),
        corpus.records.len(),
        corpus.truth.len(),
        out.display()
    );
    println!("planted typologies:");
    println!(
        "{}",
        scimob::indicators::share_table(&manifest.typology_counts).render()
    );
    Ok(())
}
