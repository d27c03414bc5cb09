//! Clusters author mentions on a corpus with colliding names, then scores
//! the clusters two ways: pairwise precision/recall against the planted
//! identities, and the correct/incorrect split against a reference registry.
//!
//! ```text
//! cargo run --release --example disambiguate_authors -- [THRESHOLD]
//! ```

use std::collections::BTreeMap;

use scimob::disambig::{
    assignment_map, build_blocks, disambiguate, pairwise_scores, validate_against_reference,
    DisambigConfig,
};
use scimob::synth::{SynthConfig, SyntheticCorpus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut config = DisambigConfig::default();
    if let Some(t) = std::env::args().nth(1) {
        config.threshold = t.parse()?;
        config.validate()?;
    }
    let corpus = SyntheticCorpus::generate(&SynthConfig::realistic());
    let records = &corpus.records;

    let blocks = build_blocks(records);
    let largest = blocks
        .iter()
        .max_by_key(|b| b.mentions.len())
        .expect("non-empty corpus");
    println!(
        "{} mentions in {} name blocks; largest block {} has {} mentions",
        corpus.truth.len(),
        blocks.len(),
        largest.key,
        largest.mentions.len()
    );

    let clusters = disambiguate(records, &config);
    println!(
        "{} clusters for {} planted researchers (threshold {})",
        clusters.len(),
        corpus.researchers.len(),
        config.threshold
    );

    let predicted: BTreeMap<_, _> = assignment_map(&clusters)
        .into_iter()
        .map(|(m, id)| (m.clone(), id.to_string()))
        .collect();
    let s = pairwise_scores(&predicted, &corpus.truth);
    println!(
        "pairwise: precision {:.4} recall {:.4} F1 {:.4} ({} predicted pairs, {} true pairs)",
        s.precision,
        s.recall,
        s.f1(),
        s.predicted_pairs,
        s.true_pairs
    );

    let report = validate_against_reference(&clusters, records, &corpus.reference_identities());
    println!("reference registry: {report}");
    Ok(())
}
