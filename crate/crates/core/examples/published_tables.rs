//! Recomputes published summary figures from their raw counts.
//!
//! Network densities from vertex and edge counts, the typology share table
//! from researcher counts, and the disambiguation check from the matched
//! identity counts.
//!
//! ```text
//! cargo run --example published_tables
//! ```

use scimob::disambig::ValidationReport;
use scimob::indicators::{share_table, MobilityCounts};
use scimob::netmetrics::density_from_counts;

fn main() {
    println!("network density");
    for (label, n, m) in [("mobility", 176, 1_335), ("co-authorship", 215, 3_124)] {
        let d = density_from_counts(n, m).expect("at least two vertices");
        println!("  {label:<14} n={n:<4} m={m:<5} density {d:.2} ({d:.6})");
    }

    let counts = MobilityCounts {
        not_mobile: 1_244_858,
        migrant: 48_134,
        traveller_directional: 83_323,
        traveller_non_directional: 45_570,
        insufficient_information: 47_054,
    };
    println!("\nresearchers by typology");
    print!("{}", share_table(&counts).render());

    println!("\ndisambiguation check against a curated reference");
    let r = ValidationReport::from_counts(5_884, 575);
    println!("  {r}");
}
