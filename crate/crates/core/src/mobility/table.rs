use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::classify::{MobilityClassification, Role};

/// Countries with fewer directional-mobile researchers than this are
/// flagged as excluded.
pub const DEFAULT_MIN_COUNTRY_COUNT: u64 = 30;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountryMobilityRow {
    pub country: String,
    pub emigrant: u64,
    pub immigrant: u64,
    pub outgoing: u64,
    pub incoming: u64,
    pub excluded: bool,
}

impl CountryMobilityRow {
    pub fn total(&self) -> u64 {
        self.emigrant + self.immigrant + self.outgoing + self.incoming
    }

    fn bump(&mut self, role: Role) {
        match role {
            Role::Emigrant => self.emigrant += 1,
            Role::Immigrant => self.immigrant += 1,
            Role::OutgoingTraveller => self.outgoing += 1,
            Role::IncomingTraveller => self.incoming += 1,
            Role::Home => {}
        }
    }
}

/// Directional role counts per country, sorted by country code. Only
/// countries holding at least one directional role appear.
pub fn country_mobility_table(
    classifications: &[MobilityClassification],
    min_count: u64,
) -> Vec<CountryMobilityRow> {
    let mut rows: BTreeMap<&str, CountryMobilityRow> = BTreeMap::new();
    for c in classifications {
        for (country, role) in &c.roles {
            if *role == Role::Home {
                continue;
            }
            rows.entry(country.as_str())
                .or_insert_with(|| CountryMobilityRow {
                    country: country.clone(),
                    ..Default::default()
                })
                .bump(*role);
        }
    }
    rows.into_values()
        .map(|mut r| {
            r.excluded = r.total() < min_count;
            r
        })
        .collect()
}
