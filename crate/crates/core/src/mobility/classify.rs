use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::timeline::AffiliationTimeline;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Typology {
    NotMobile,
    Migrant,
    TravellerDirectional,
    TravellerNonDirectional,
    InsufficientInformation,
}

impl Typology {
    pub const ALL: [Typology; 5] = [
        Typology::NotMobile,
        Typology::Migrant,
        Typology::TravellerDirectional,
        Typology::TravellerNonDirectional,
        Typology::InsufficientInformation,
    ];

    pub fn is_mobile(self) -> bool {
        matches!(
            self,
            Typology::Migrant | Typology::TravellerDirectional | Typology::TravellerNonDirectional
        )
    }

    /// Migrants and directional travellers: the researchers whose moves have
    /// a direction and so feed flow indicators.
    pub fn is_directional(self) -> bool {
        matches!(self, Typology::Migrant | Typology::TravellerDirectional)
    }

    pub fn label(self) -> &'static str {
        match self {
            Typology::NotMobile => "not_mobile",
            Typology::Migrant => "migrant",
            Typology::TravellerDirectional => "traveller_directional",
            Typology::TravellerNonDirectional => "traveller_non_directional",
            Typology::InsufficientInformation => "insufficient_information",
        }
    }
}

impl fmt::Display for Typology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Emigrant,
    Immigrant,
    OutgoingTraveller,
    IncomingTraveller,
    Home,
}

impl Role {
    pub const DIRECTIONAL: [Role; 4] = [
        Role::Emigrant,
        Role::Immigrant,
        Role::OutgoingTraveller,
        Role::IncomingTraveller,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Role::Emigrant => "emigrant",
            Role::Immigrant => "immigrant",
            Role::OutgoingTraveller => "outgoing_traveller",
            Role::IncomingTraveller => "incoming_traveller",
            Role::Home => "home",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MobilityEvent {
    pub from: String,
    pub to: String,
    /// Year of the entry where `to` first appears.
    pub year: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobilityClassification {
    pub cluster_id: String,
    pub typology: Typology,
    pub roles: BTreeMap<String, Role>,
    pub events: Vec<MobilityEvent>,
}

impl MobilityClassification {
    pub fn countries_with_role(&self, role: Role) -> impl Iterator<Item = &str> {
        self.roles
            .iter()
            .filter(move |(_, r)| **r == role)
            .map(|(c, _)| c.as_str())
    }

    /// Year of the first mobility event, if any.
    pub fn first_event_year(&self) -> Option<i32> {
        self.events.iter().map(|e| e.year).min()
    }
}

/// Assigns the mobility typology.
///
/// Rules, first match wins:
///
/// 1. fewer than two entries: insufficient information;
/// 2. a single country overall: not mobile (that country is `Home`);
/// 3. every entry has the same multi-country set: non-directional traveller;
/// 4. some origin country is in the last entry: directional traveller. Origin
///    countries that share an entry with a non-origin country are outgoing,
///    other origin countries are home; every non-origin country is incoming;
/// 5. otherwise: migrant. Origin countries are emigrant, last-entry countries
///    immigrant; intermediate countries get no role.
///
/// Events: whenever a country first appears at entry `i`, one event from
/// each country of entry `i - 1` to it.
pub fn classify(timeline: &AffiliationTimeline) -> MobilityClassification {
    let entries = &timeline.entries;
    let mut out = MobilityClassification {
        cluster_id: timeline.cluster_id.clone(),
        typology: Typology::InsufficientInformation,
        roles: BTreeMap::new(),
        events: Vec::new(),
    };
    if entries.len() < 2 {
        return out;
    }

    let union: BTreeSet<&String> = entries.iter().flat_map(|e| e.countries.iter()).collect();
    if union.len() == 1 {
        out.typology = Typology::NotMobile;
        out.roles
            .insert(union.into_iter().next().unwrap().clone(), Role::Home);
        return out;
    }

    out.events = mobility_events(timeline);

    let first = &entries[0].countries;
    if entries.iter().all(|e| &e.countries == first) {
        out.typology = Typology::TravellerNonDirectional;
        return out;
    }

    let last = &entries[entries.len() - 1].countries;
    if !first.is_disjoint(last) {
        out.typology = Typology::TravellerDirectional;
        for c in union.iter().filter(|c| !first.contains(**c)) {
            out.roles.insert((*c).clone(), Role::IncomingTraveller);
        }
        for c in first {
            let co_occurs = entries
                .iter()
                .any(|e| e.countries.contains(c) && e.countries.iter().any(|x| !first.contains(x)));
            let role = if co_occurs {
                Role::OutgoingTraveller
            } else {
                Role::Home
            };
            out.roles.insert(c.clone(), role);
        }
    } else {
        out.typology = Typology::Migrant;
        for c in first {
            out.roles.insert(c.clone(), Role::Emigrant);
        }
        for c in last {
            out.roles.insert(c.clone(), Role::Immigrant);
        }
    }
    out
}

fn mobility_events(timeline: &AffiliationTimeline) -> Vec<MobilityEvent> {
    let mut seen: BTreeSet<&String> = BTreeSet::new();
    let mut events = Vec::new();
    for (i, entry) in timeline.entries.iter().enumerate() {
        if i > 0 {
            let prior = &timeline.entries[i - 1].countries;
            for new in entry.countries.iter().filter(|c| !seen.contains(c)) {
                for from in prior {
                    events.push(MobilityEvent {
                        from: from.clone(),
                        to: new.clone(),
                        year: entry.year,
                    });
                }
            }
        }
        seen.extend(entry.countries.iter());
    }
    events
}
