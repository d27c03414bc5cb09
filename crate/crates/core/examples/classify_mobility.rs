//! Affiliation timelines and the mobility typology.
//!
//! Classifies a handful of hand-written careers, then the whole synthetic
//! fixture population, and prints the share table and per-country roles.
//!
//! ```text
//! cargo run --example classify_mobility
//! ```

use std::collections::BTreeSet;

use scimob::indicators::{mobility_shares, MobilityCounts};
use scimob::mobility::{classify, country_mobility_table, AffiliationTimeline};
use scimob::pipeline::windowed_timelines;
use scimob::synth::{SynthConfig, SyntheticCorpus};

fn career(id: &str, entries: &[(i32, &[&str])]) -> AffiliationTimeline {
    AffiliationTimeline::from_entries(
        id,
        entries.iter().enumerate().map(|(i, (year, countries))| {
            (
                *year,
                format!("{id}-{i}"),
                countries.iter().copied().collect::<BTreeSet<_>>(),
            )
        }),
    )
}

fn main() -> scimob::Result<()> {
    let careers = [
        career(
            "stayer",
            &[(2008, &["EGY"]), (2013, &["EGY"]), (2016, &["EGY"])],
        ),
        career(
            "migrant",
            &[(2009, &["TUN"]), (2011, &["TUN"]), (2014, &["FRA"])],
        ),
        career(
            "via-qatar",
            &[(2008, &["JOR"]), (2011, &["QAT"]), (2015, &["USA"])],
        ),
        career(
            "visitor",
            &[(2010, &["IRN"]), (2012, &["IRN", "DEU"]), (2017, &["IRN"])],
        ),
        career("dual", &[(2009, &["LBN", "FRA"]), (2015, &["LBN", "FRA"])]),
        career("one-paper", &[(2012, &["MAR"])]),
    ];
    for t in &careers {
        let c = classify(t);
        let roles: Vec<String> = c
            .roles
            .iter()
            .map(|(k, r)| format!("{k}={}", r.label()))
            .collect();
        let events: Vec<String> = c
            .events
            .iter()
            .map(|e| format!("{}->{}@{}", e.from, e.to, e.year))
            .collect();
        println!(
            "{:<10} {:<26} roles [{}] events [{}]",
            t.cluster_id,
            c.typology,
            roles.join(" "),
            events.join(" ")
        );
    }

    // unique surnames with e-mails on every mention: clustering is exact here
    let corpus = SyntheticCorpus::generate(&SynthConfig {
        researchers: 500,
        ..SynthConfig::default()
    });
    let clusters = scimob::disambig::disambiguate(&corpus.records, &Default::default());
    let timelines = windowed_timelines(&clusters, &corpus.records, corpus.config.window);
    let classes: Vec<_> = timelines.iter().map(classify).collect();
    println!(
        "\n{} researchers with in-window publications",
        classes.len()
    );
    println!("{}", mobility_shares(&classes).render());

    let planted = corpus.manifest(15).typology_counts;
    println!(
        "planted vs recovered counts agree: {}",
        planted == MobilityCounts::from_classifications(&classes)
    );

    println!("\ncountry      emig  immig  out  in");
    for row in country_mobility_table(&classes, 5)
        .iter()
        .filter(|r| !r.excluded)
        .take(10)
    {
        println!(
            "{:<10} {:>6} {:>6} {:>4} {:>3}",
            row.country, row.emigrant, row.immigrant, row.outgoing, row.incoming
        );
    }
    Ok(())
}
