//! Indicator reports built in memory from a synthetic population: typology
//! shares, the migrant age pyramid, gender ratios, top partner countries and
//! an alluvial export.
//!
//! ```text
//! cargo run --example indicator_reports -- [REPORT_DIR]
//! ```
//!
//! With a directory, every CSV report plus `reports.json` is written there.

use std::collections::BTreeMap;

use scimob::corpus::{filter_window, index_by_id, CountryRegistry};
use scimob::demography::{
    attribute, representative_first_name, AgeReference, DemographyConfig, GenderProvider,
    LocalGenderTable, DEFAULT_MIN_CONFIDENCE,
};
use scimob::disambig::disambiguate;
use scimob::indicators::{
    build_reports, format::fixed, write_reports, IndicatorInputs, ReportHeader, ReportKind,
};
use scimob::mobility::{build_history, classify};
use scimob::netmetrics::{build_coauthorship_network, mobility_network_from};
use scimob::pipeline::windowed_timelines;
use scimob::synth::{SynthConfig, SyntheticCorpus};

fn main() -> scimob::Result<()> {
    let corpus = SyntheticCorpus::generate(&SynthConfig {
        researchers: 1500,
        ..SynthConfig::default()
    });
    let window = corpus.config.window;
    let all = &corpus.records;
    let clusters = disambiguate(all, &Default::default());
    let timelines = windowed_timelines(&clusters, all, window);
    let classifications: Vec<_> = timelines.iter().map(classify).collect();

    let index = index_by_id(all);
    let by_id: BTreeMap<&str, _> = clusters
        .iter()
        .map(|c| (c.cluster_id.as_str(), c))
        .collect();
    let bundled = LocalGenderTable::bundled();
    let providers: [&dyn GenderProvider; 1] = [&bundled];
    let dcfg = DemographyConfig {
        age_reference: AgeReference::Event,
        window_end: window.end(),
        min_confidence: DEFAULT_MIN_CONFIDENCE,
    };
    let demographics = classifications
        .iter()
        .map(|c| {
            let cluster = by_id[c.cluster_id.as_str()];
            let name = representative_first_name(cluster, &index);
            attribute(
                &build_history(cluster, &index),
                Some(c),
                &name,
                &providers,
                &dcfg,
            )
        })
        .collect::<scimob::Result<Vec<_>>>()?;

    let records = filter_window(all, window);
    let collaboration = build_coauthorship_network(&records);
    let mobility = mobility_network_from(&classifications);
    let registry = CountryRegistry::bundled();
    let inputs = IndicatorInputs {
        records: &records,
        timelines: &timelines,
        classifications: &classifications,
        demographics: &demographics,
        collaboration: &collaboration,
        mobility: &mobility,
        registry: &registry,
    };
    let header = ReportHeader {
        window: window.to_string(),
        age_reference: AgeReference::Event.to_string(),
        min_confidence: DEFAULT_MIN_CONFIDENCE,
        disambiguation_threshold: scimob::disambig::DEFAULT_THRESHOLD,
        min_country_count: 10,
        alluvial_threshold: 40,
        top_k: 5,
    };
    let bundle = build_reports(&inputs, header, &[ReportKind::All])?;

    if let Some(t) = &bundle.shares {
        println!("{}", t.render());
    }
    if let Some(p) = &bundle.pyramid {
        println!("migrant pyramid, MENA countries");
        for r in &p.rows {
            println!(
                "  {:>5}  out {:>3}  in {:>3}",
                r.bucket, r.emigrants, r.immigrants
            );
        }
        println!(
            "  mean age: emigrants {} immigrants {}",
            fixed(p.mean_age_emigrants, 1),
            fixed(p.mean_age_immigrants, 1)
        );
    }
    if let Some(g) = &bundle.gender_ratios {
        println!(
            "\nmean male/female ratio: all {} migrants {}",
            fixed(g.mean_ratio_all, 2),
            fixed(g.mean_ratio_migrants, 2)
        );
    }
    if let Some(tops) = &bundle.top_partners {
        for t in tops.iter().filter(|t| !t.destinations.is_empty()).take(2) {
            let list: Vec<String> = t
                .destinations
                .iter()
                .map(|p| format!("{} {}", p.country, p.count))
                .collect();
            println!("{} sends researchers to: {}", t.country, list.join(", "));
        }
    }
    if let Some(exports) = &bundle.alluvial {
        for e in exports.iter().filter(|e| e.included).take(2) {
            println!(
                "\nalluvial {}: {} mobile researchers, {} rows",
                e.country,
                e.mobile_researchers,
                e.rows.len()
            );
            for r in e.rows.iter().take(5) {
                println!(
                    "  {} {} {} {} {}",
                    r.direction.label(),
                    r.gender,
                    r.age_bucket,
                    r.partner_country,
                    r.count
                );
            }
        }
    }

    if let Some(dir) = std::env::args().nth(1) {
        for p in write_reports(&bundle, dir.as_ref())? {
            println!("wrote {}", p.display());
        }
    }
    Ok(())
}
