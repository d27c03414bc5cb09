//! Academic origin, academic age and gender for a few careers.
//!
//! Shows the two age references, the modal-country rule for the gender
//! origin, the confidence cut-off, and a user table taking precedence over
//! the bundled one.
//!
//! ```text
//! cargo run --example demography
//! ```

use std::collections::BTreeSet;

use scimob::demography::{
    attribute, AgeReference, DemographyConfig, GenderProvider, LocalGenderTable,
    DEFAULT_MIN_CONFIDENCE,
};
use scimob::mobility::{classify, AffiliationTimeline};

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
    let people = [
        // first paper long before the window, moved in 2012
        (
            "Ahmed",
            career(
                "a",
                &[
                    (1994, &["EGY"]),
                    (2009, &["EGY"]),
                    (2012, &["SAU"]),
                    (2016, &["SAU"]),
                ],
            ),
        ),
        // name too ambiguous for the default cut-off
        (
            "Nour",
            career("b", &[(2008, &["LBN"]), (2011, &["LBN"]), (2015, &["LBN"])]),
        ),
        // country-specific row: male in Italy
        (
            "Andrea",
            career(
                "c",
                &[(2003, &["ITA"]), (2010, &["ITA"]), (2013, &["ITA", "TUN"])],
            ),
        ),
        // modal country is not a first-paper country: every country is asked
        (
            "Sami",
            career("d", &[(2009, &["TUN"]), (2012, &["FRA"]), (2014, &["FRA"])]),
        ),
        ("J.", career("e", &[(2010, &["JOR"]), (2013, &["JOR"])])),
    ];

    let bundled = LocalGenderTable::bundled();
    let custom = LocalGenderTable::parse("lab-table", "Nour\tLBN\tF\t0.93\n")?;
    for (label, providers) in [
        ("bundled only", vec![&bundled as &dyn GenderProvider]),
        (
            "lab table first",
            vec![&custom as &dyn GenderProvider, &bundled],
        ),
    ] {
        for reference in [AgeReference::Event, AgeReference::WindowEnd] {
            println!("== {label}, age reference {reference}");
            let config = DemographyConfig {
                age_reference: reference,
                window_end: 2017,
                min_confidence: DEFAULT_MIN_CONFIDENCE,
            };
            for (name, history) in &people {
                let class = classify(history);
                let d = attribute(history, Some(&class), name, &providers, &config)?;
                println!(
                    "{:<7} {:<25} origin {:?} gender-origin {:?} first {} age {:>2} ({}) {}",
                    name,
                    class.typology,
                    d.academic_origin,
                    d.gender_origin,
                    d.first_pub_year,
                    d.academic_age,
                    d.age_bucket,
                    d.gender
                );
            }
        }
    }
    Ok(())
}
