use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::PublicationRecord;
use crate::mobility::{AffiliationTimeline, MobilityClassification, Role};

/// Countries each researcher is linked to, keyed by cluster id.
pub type ResearcherCountries = BTreeMap<String, BTreeSet<String>>;

/// Every country on each researcher's windowed timeline.
pub fn researcher_countries(timelines: &[AffiliationTimeline]) -> ResearcherCountries {
    timelines
        .iter()
        .map(|t| {
            let countries = t.all_countries().into_iter().map(str::to_string).collect();
            (t.cluster_id.clone(), countries)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountryProfile {
    pub country: String,
    pub researchers: u64,
    /// Full counting: a paper counts once for every country it is linked to.
    pub publications: u64,
    pub pubs_per_researcher: Option<f64>,
    pub emigrant: u64,
    pub immigrant: u64,
    pub outgoing_traveller: u64,
    pub incoming_traveller: u64,
    pub emigrant_share: Option<f64>,
    pub immigrant_share: Option<f64>,
    pub outgoing_share: Option<f64>,
    pub incoming_share: Option<f64>,
    /// Fewer directional-mobile researchers than the configured minimum.
    pub excluded: bool,
}

impl CountryProfile {
    pub fn directional_total(&self) -> u64 {
        self.emigrant + self.immigrant + self.outgoing_traveller + self.incoming_traveller
    }
}

/// One profile per country seen in the links or the records, sorted by code.
pub fn country_profiles(
    classifications: &[MobilityClassification],
    links: &ResearcherCountries,
    records: &[PublicationRecord],
    min_count: u64,
) -> Vec<CountryProfile> {
    #[derive(Default)]
    struct Acc {
        researchers: u64,
        publications: u64,
        roles: [u64; 4],
    }
    let mut acc: BTreeMap<&str, Acc> = BTreeMap::new();
    for countries in links.values() {
        for c in countries {
            acc.entry(c).or_default().researchers += 1;
        }
    }
    for r in records {
        for c in r.countries() {
            acc.entry(c).or_default().publications += 1;
        }
    }
    for cl in classifications {
        for (country, role) in &cl.roles {
            if let Some(i) = Role::DIRECTIONAL.iter().position(|r| r == role) {
                acc.entry(country).or_default().roles[i] += 1;
            }
        }
    }
    acc.into_iter()
        .map(|(country, a)| {
            let directional: u64 = a.roles.iter().sum();
            let share = |n: u64| (directional > 0).then(|| n as f64 / directional as f64);
            CountryProfile {
                country: country.to_string(),
                researchers: a.researchers,
                publications: a.publications,
                pubs_per_researcher: (a.researchers > 0)
                    .then(|| a.publications as f64 / a.researchers as f64),
                emigrant: a.roles[0],
                immigrant: a.roles[1],
                outgoing_traveller: a.roles[2],
                incoming_traveller: a.roles[3],
                emigrant_share: share(a.roles[0]),
                immigrant_share: share(a.roles[1]),
                outgoing_share: share(a.roles[2]),
                incoming_share: share(a.roles[3]),
                excluded: directional < min_count,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::AuthorMention;
    use crate::mobility::Typology;

    #[test]
    fn publication_rate() {
        let links: ResearcherCountries = (0..10)
            .map(|i| (format!("r{i}"), BTreeSet::from(["JOR".to_string()])))
            .collect();
        let records: Vec<PublicationRecord> = (0..30)
            .map(|i| {
                PublicationRecord::new(
                    &format!("p{i}"),
                    2010,
                    vec![AuthorMention::new("A", "B", ["JOR"])],
                )
            })
            .collect();
        let p = country_profiles(&[], &links, &records, 0);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].pubs_per_researcher, Some(3.0));
        assert_eq!(p[0].emigrant_share, None);
    }

    #[test]
    fn immigrant_only_country() {
        let cl = MobilityClassification {
            cluster_id: "r".into(),
            typology: Typology::Migrant,
            roles: [
                ("EGY".to_string(), Role::Emigrant),
                ("QAT".to_string(), Role::Immigrant),
            ]
            .into(),
            events: vec![],
        };
        let p = country_profiles(&[cl], &ResearcherCountries::new(), &[], 1);
        let qat = p.iter().find(|p| p.country == "QAT").unwrap();
        assert_eq!(qat.immigrant_share, Some(1.0));
        assert_eq!(qat.emigrant_share, Some(0.0));
        assert!(!qat.excluded);
    }
}
