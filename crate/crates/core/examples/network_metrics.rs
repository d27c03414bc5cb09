//! Country co-authorship and mobility graphs with their structural measures.
//!
//! ```text
//! cargo run --example network_metrics -- [EDGES_OUT.tsv]
//! ```
//!
//! With a path, the co-authorship edge list is written there as TSV.

use std::fs::File;
use std::io::BufWriter;

use scimob::corpus::CountryRegistry;
use scimob::disambig::disambiguate;
use scimob::mobility::classify;
use scimob::netmetrics::{
    build_coauthorship_network, centrality_table, mobility_network_from, regional_flow_matrix,
    structural_measures, write_edge_list, CountryGraph,
};
use scimob::pipeline::windowed_timelines;
use scimob::synth::{SynthConfig, SyntheticCorpus};

fn describe(name: &str, g: &CountryGraph) {
    let m = structural_measures(g);
    let opt = |v: Option<f64>| v.map_or("NA".to_string(), |x| format!("{x:.3}"));
    println!("{name}");
    println!("  vertices {} edges {}", m.vertex_count, m.edge_count);
    println!(
        "  density {} average degree {:.2}",
        opt(m.density),
        m.average_degree
    );
    println!(
        "  diameter {}{}",
        m.diameter.map_or("NA".to_string(), |d| d.to_string()),
        if m.disconnected {
            " (disconnected)"
        } else {
            ""
        }
    );
    println!(
        "  clustering {:.3} assortativity {}",
        m.clustering_coefficient,
        opt(m.assortativity)
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = SyntheticCorpus::generate(&SynthConfig {
        researchers: 200,
        ..SynthConfig::default()
    });
    let window = corpus.config.window;
    let in_window = scimob::corpus::filter_window(&corpus.records, window);
    let collab = build_coauthorship_network(&in_window);

    let clusters = disambiguate(&corpus.records, &Default::default());
    let classes: Vec<_> = windowed_timelines(&clusters, &corpus.records, window)
        .iter()
        .map(classify)
        .collect();
    let mobility = mobility_network_from(&classes);

    describe("co-authorship", &collab);
    describe("mobility", &mobility);

    let registry = CountryRegistry::bundled();
    let mena = registry.mena_set();
    println!("\nMENA centrality in the co-authorship graph");
    println!("country degree closeness");
    let mut rows = centrality_table(&collab, mena.iter().map(String::as_str));
    rows.sort_by(|a, b| b.degree.cmp(&a.degree).then(a.country.cmp(&b.country)));
    for r in rows.iter().take(8) {
        println!("{:<7} {:>6} {:>9.3}", r.country, r.degree, r.closeness);
    }

    let directional = classes.iter().filter(|c| c.typology.is_directional());
    let matrix = regional_flow_matrix(directional.map(|c| c.events.as_slice()), &registry)?;
    println!("\nresearchers leaving MENA, by destination region");
    for s in matrix.partner_shares("MENA") {
        if let Some(share) = s.outflow_share {
            println!(
                "  {:<14} {:>4} {:>6.1}%",
                s.region,
                s.outflow,
                100.0 * share
            );
        }
    }

    if let Some(path) = std::env::args().nth(1) {
        write_edge_list(&collab, BufWriter::new(File::create(&path)?))?;
        println!("\nedge list written to {path}");
    }
    Ok(())
}
