//! Affiliation timelines and the mobility typology.

mod classify;
mod table;
mod timeline;

pub use classify::{classify, MobilityClassification, MobilityEvent, Role, Typology};
pub use table::{country_mobility_table, CountryMobilityRow, DEFAULT_MIN_COUNTRY_COUNT};
pub use timeline::{build_history, build_timeline, AffiliationTimeline, TimelineEntry};

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Writes classifications as JSON lines.
pub fn write_classifications<W: Write>(items: &[MobilityClassification], mut out: W) -> Result<()> {
    for c in items {
        serde_json::to_writer(&mut out, c)?;
        out.write_all(b"\n")
            .map_err(|e| Error::io("<classifications>", e))?;
    }
    Ok(())
}

pub fn read_classifications<R: BufRead>(input: R) -> Result<Vec<MobilityClassification>> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<classifications>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::Malformed {
            line: idx + 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use super::*;
    use crate::corpus::{AuthorMention, MentionRef, PublicationRecord, StudyWindow};
    use crate::disambig::{AuthorCluster, NameKey};

    fn tl(entries: &[(i32, &[&str])]) -> AffiliationTimeline {
        AffiliationTimeline::from_entries(
            "r",
            entries.iter().enumerate().map(|(i, (y, cs))| {
                (
                    *y,
                    format!("p{i:02}"),
                    cs.iter().map(|c| c.to_string()).collect::<BTreeSet<_>>(),
                )
            }),
        )
    }

    fn role(c: &MobilityClassification, country: &str) -> Option<Role> {
        c.roles.get(country).copied()
    }

    #[test]
    fn migrant_example() {
        let c = classify(&tl(&[(2009, &["A"]), (2011, &["A"]), (2013, &["B"])]));
        assert_eq!(c.typology, Typology::Migrant);
        assert_eq!(role(&c, "A"), Some(Role::Emigrant));
        assert_eq!(role(&c, "B"), Some(Role::Immigrant));
        assert_eq!(
            c.events,
            vec![MobilityEvent {
                from: "A".into(),
                to: "B".into(),
                year: 2013
            }]
        );
    }

    #[test]
    fn directional_traveller_example() {
        let c = classify(&tl(&[
            (2009, &["A"]),
            (2012, &["A", "B"]),
            (2015, &["A", "B"]),
        ]));
        assert_eq!(c.typology, Typology::TravellerDirectional);
        assert_eq!(role(&c, "A"), Some(Role::OutgoingTraveller));
        assert_eq!(role(&c, "B"), Some(Role::IncomingTraveller));
        assert_eq!(c.events.len(), 1);
        assert_eq!(c.first_event_year(), Some(2012));
    }

    #[test]
    fn non_directional_example() {
        let c = classify(&tl(&[(2010, &["A", "B"]), (2014, &["A", "B"])]));
        assert_eq!(c.typology, Typology::TravellerNonDirectional);
        assert!(c.events.is_empty());
        assert!(c.roles.is_empty());
    }

    #[test]
    fn not_mobile_and_insufficient() {
        let c = classify(&tl(&[(2010, &["A"]), (2013, &["A"])]));
        assert_eq!(c.typology, Typology::NotMobile);
        assert_eq!(c.roles.len(), 1);
        assert_eq!(role(&c, "A"), Some(Role::Home));
        assert!(c.events.is_empty());
        let c = classify(&tl(&[(2010, &["A", "B"])]));
        assert_eq!(c.typology, Typology::InsufficientInformation);
        let c = classify(&tl(&[]));
        assert_eq!(c.typology, Typology::InsufficientInformation);
    }

    #[test]
    fn return_trajectory_is_directional() {
        let c = classify(&tl(&[(2009, &["A"]), (2011, &["B"]), (2014, &["A"])]));
        assert_eq!(c.typology, Typology::TravellerDirectional);
        assert_eq!(role(&c, "B"), Some(Role::IncomingTraveller));
        // A never shares an entry with B
        assert_eq!(role(&c, "A"), Some(Role::Home));
    }

    #[test]
    fn events_fan_out_from_every_prior_country() {
        let c = classify(&tl(&[(2009, &["A", "B"]), (2011, &["C"])]));
        assert_eq!(c.typology, Typology::Migrant);
        let pairs: Vec<(&str, &str)> = c
            .events
            .iter()
            .map(|e| (e.from.as_str(), e.to.as_str()))
            .collect();
        assert_eq!(pairs, vec![("A", "C"), ("B", "C")]);
        assert_eq!(role(&c, "A"), Some(Role::Emigrant));
        assert_eq!(role(&c, "B"), Some(Role::Emigrant));
        assert_eq!(role(&c, "C"), Some(Role::Immigrant));
    }

    #[test]
    fn intermediate_country_has_no_role() {
        let c = classify(&tl(&[(2009, &["A"]), (2011, &["B"]), (2013, &["C"])]));
        assert_eq!(c.typology, Typology::Migrant);
        assert_eq!(role(&c, "B"), None);
        assert_eq!(c.events.len(), 2);
    }

    #[test]
    fn timeline_orders_by_year_then_pub_id() {
        let recs = vec![
            PublicationRecord::new("p2", 2010, vec![AuthorMention::new("X", "Y", ["SAU"])]),
            PublicationRecord::new("p1", 2008, vec![AuthorMention::new("X", "Y", ["EGY"])]),
            PublicationRecord::new("p0", 2019, vec![AuthorMention::new("X", "Y", ["EGY"])]),
        ];
        let cluster = AuthorCluster {
            cluster_id: "c".into(),
            key: NameKey::new("X", "Y"),
            members: [
                MentionRef::new("p2", 0),
                MentionRef::new("p1", 0),
                MentionRef::new("p0", 0),
            ]
            .into(),
        };
        let index = crate::corpus::index_by_id(&recs);
        let t = build_timeline(&cluster, &index, StudyWindow::default());
        let got: Vec<(i32, Vec<&str>)> = t
            .entries
            .iter()
            .map(|e| (e.year, e.countries.iter().map(String::as_str).collect()))
            .collect();
        assert_eq!(got, vec![(2008, vec!["EGY"]), (2010, vec!["SAU"])]);
        assert_eq!(t.origin().unwrap().iter().next().unwrap(), "EGY");
    }

    #[test]
    fn country_table_counts() {
        let c = classify(&tl(&[(2009, &["A"]), (2013, &["B"])]));
        let table = country_mobility_table(&[c], DEFAULT_MIN_COUNTRY_COUNT);
        let by: BTreeMap<&str, &CountryMobilityRow> =
            table.iter().map(|r| (r.country.as_str(), r)).collect();
        assert_eq!(by["A"].emigrant, 1);
        assert_eq!(by["B"].immigrant, 1);
        assert!(by["A"].excluded);
        assert!(country_mobility_table(&[], 1).is_empty());
        let nm = classify(&tl(&[(2009, &["A"]), (2013, &["A"])]));
        assert!(country_mobility_table(&[nm], 1).is_empty());
    }

    #[test]
    fn classification_file_round_trip() {
        let c = classify(&tl(&[(2009, &["A"]), (2013, &["B"])]));
        let mut buf = Vec::new();
        write_classifications(std::slice::from_ref(&c), &mut buf).unwrap();
        assert!(String::from_utf8_lossy(&buf).contains("\"typology\":\"migrant\""));
        assert_eq!(read_classifications(&buf[..]).unwrap(), vec![c]);
    }
}
