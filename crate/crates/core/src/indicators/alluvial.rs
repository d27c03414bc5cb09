use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::profiles::ResearcherCountries;
use super::relations::rank_top_k;
use crate::demography::{AgeBucket, Gender, ResearcherDemographics};
use crate::mobility::{MobilityClassification, Role, Typology};

/// Partner label for flows to or from countries outside the top-k.
pub const OTHER_PARTNER: &str = "OTHER";
pub const DEFAULT_ALLUVIAL_THRESHOLD: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowDirection {
    /// Immigrants into the focus country, by origin.
    ImmigratingFrom,
    /// Emigrants from the focus country, by destination.
    EmigratingTo,
}

impl FlowDirection {
    pub const ALL: [FlowDirection; 2] =
        [FlowDirection::ImmigratingFrom, FlowDirection::EmigratingTo];

    pub fn label(self) -> &'static str {
        match self {
            FlowDirection::ImmigratingFrom => "immigrating_from",
            FlowDirection::EmigratingTo => "emigrating_to",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlluvialRow {
    pub gender: Gender,
    pub age_bucket: AgeBucket,
    pub partner_country: String,
    pub direction: FlowDirection,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlluvialExport {
    pub country: String,
    pub mobile_researchers: u64,
    /// Mobile researcher count exceeded the threshold.
    pub included: bool,
    pub rows: Vec<AlluvialRow>,
}

impl AlluvialExport {
    pub fn total(&self, direction: FlowDirection) -> u64 {
        self.rows
            .iter()
            .filter(|r| r.direction == direction)
            .map(|r| r.count)
            .sum()
    }
}

/// Mobile researchers linked to `country`.
pub fn mobile_researchers(
    classifications: &[MobilityClassification],
    links: &ResearcherCountries,
    country: &str,
) -> u64 {
    classifications
        .iter()
        .filter(|c| c.typology.is_mobile())
        .filter(|c| {
            links
                .get(&c.cluster_id)
                .is_some_and(|s| s.contains(country))
        })
        .count() as u64
}

/// Gender → age bucket → partner flows of the migrants of `country`.
///
/// Every (migrant, partner) pair contributes 1. Partners outside the top `k`
/// of their direction are folded into an [`OTHER_PARTNER`] row with the same
/// gender and bucket, so row totals equal the pair totals.
pub fn alluvial_export(
    demographics: &[ResearcherDemographics],
    classifications: &[MobilityClassification],
    links: &ResearcherCountries,
    country: &str,
    k: usize,
    threshold: u64,
) -> AlluvialExport {
    let mobile = mobile_researchers(classifications, links, country);
    let mut export = AlluvialExport {
        country: country.to_string(),
        mobile_researchers: mobile,
        included: mobile > threshold,
        rows: Vec::new(),
    };
    if !export.included {
        return export;
    }
    let by_id: BTreeMap<&str, &ResearcherDemographics> = demographics
        .iter()
        .map(|d| (d.cluster_id.as_str(), d))
        .collect();
    // (direction, gender, bucket, partner) per migrant-partner pair
    let mut pairs: Vec<(FlowDirection, Gender, AgeBucket, &str)> = Vec::new();
    for c in classifications
        .iter()
        .filter(|c| c.typology == Typology::Migrant)
    {
        let Some(d) = by_id.get(c.cluster_id.as_str()) else {
            continue;
        };
        let (direction, partner_role) = match c.roles.get(country) {
            Some(Role::Emigrant) => (FlowDirection::EmigratingTo, Role::Immigrant),
            Some(Role::Immigrant) => (FlowDirection::ImmigratingFrom, Role::Emigrant),
            _ => continue,
        };
        for partner in c.countries_with_role(partner_role) {
            pairs.push((direction, d.gender, d.age_bucket, partner));
        }
    }
    for direction in FlowDirection::ALL {
        let mut per_partner: BTreeMap<&str, u64> = BTreeMap::new();
        for p in pairs.iter().filter(|p| p.0 == direction) {
            *per_partner.entry(p.3).or_insert(0) += 1;
        }
        let top: BTreeSet<String> = rank_top_k(per_partner, k)
            .into_iter()
            .map(|p| p.country)
            .collect();
        let mut agg: BTreeMap<(Gender, AgeBucket, bool, &str), u64> = BTreeMap::new();
        for &(_, g, b, partner) in pairs.iter().filter(|p| p.0 == direction) {
            let key = if top.contains(partner) {
                (g, b, false, partner)
            } else {
                (g, b, true, OTHER_PARTNER)
            };
            *agg.entry(key).or_insert(0) += 1;
        }
        export.rows.extend(
            agg.into_iter()
                .map(|((gender, age_bucket, _, partner), count)| AlluvialRow {
                    gender,
                    age_bucket,
                    partner_country: partner.to_string(),
                    direction,
                    count,
                }),
        );
    }
    export
}
