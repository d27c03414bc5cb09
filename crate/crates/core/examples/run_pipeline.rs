//! Config-driven staged run over the bundled fixture corpus.
//!
//! The first run computes every stage; the second finds them all cached.
//! Then one stage is rerun in isolation and the manifest is printed.
//!
//! ```text
//! cargo run --example run_pipeline -- [OUT_DIR]
//! ```

use std::path::{Path, PathBuf};

use scimob::pipeline::{run_pipeline, stage, PipelineConfig, RunManifest, Stage, MANIFEST_FILE};

fn show(m: &RunManifest) {
    for r in &m.stages {
        println!(
            "  {:<13} {:?}{} {:>5} ms  key {}",
            r.stage,
            r.status,
            if r.cache_hit { " (cached)" } else { "" },
            r.duration_ms,
            &r.key[..12]
        );
    }
}

fn main() -> scimob::Result<()> {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/scimob.toml");
    let mut config = PipelineConfig::from_path(&fixture)?;
    config.out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("scimob-example-run"));
    println!("config:\n{}", config.to_toml());

    println!("first run");
    show(&run_pipeline(&config)?);
    println!("second run");
    let manifest = run_pipeline(&config)?;
    show(&manifest);

    println!("classify alone");
    let record = stage(Stage::Classify, &config)?;
    for o in &record.outputs {
        println!("  {} {} bytes sha256 {}", o.path, o.bytes, &o.sha256[..16]);
    }

    for input in &manifest.inputs {
        println!("input {} sha256 {}", input.path, &input.sha256[..16]);
    }
    println!(
        "manifest at {}",
        config.out_dir.join(MANIFEST_FILE).display()
    );
    Ok(())
}
