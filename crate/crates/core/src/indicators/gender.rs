use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::profiles::ResearcherCountries;
use crate::corpus::{CountryRegistry, MENA_REGION};
use crate::demography::{Gender, ResearcherDemographics};
use crate::mobility::{MobilityClassification, Typology};

/// Male count over female count; undefined without females.
pub fn gender_ratio(male: u64, female: u64) -> Option<f64> {
    (female > 0).then(|| male as f64 / female as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenderRatioRow {
    pub country: String,
    pub male: u64,
    pub female: u64,
    pub migrant_male: u64,
    pub migrant_female: u64,
    pub ratio_all: Option<f64>,
    pub ratio_migrants: Option<f64>,
    /// `ratio_migrants / ratio_all`.
    pub ratio_of_ratios: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenderRatioReport {
    pub rows: Vec<GenderRatioRow>,
    /// Means over countries with a defined ratio.
    pub mean_ratio_all: Option<f64>,
    pub mean_ratio_migrants: Option<f64>,
    /// Countries left out of the means for lack of females.
    pub undefined_all: usize,
    pub undefined_migrants: usize,
}

fn mean_defined(values: impl Iterator<Item = Option<f64>>) -> (Option<f64>, usize) {
    let (mut sum, mut n, mut undefined) = (0.0, 0usize, 0usize);
    for v in values {
        match v {
            Some(v) => {
                sum += v;
                n += 1;
            }
            None => undefined += 1,
        }
    }
    ((n > 0).then(|| sum / n as f64), undefined)
}

/// Per-country ratios over all linked researchers and over linked migrants.
pub fn gender_ratio_report(
    demographics: &[ResearcherDemographics],
    classifications: &[MobilityClassification],
    links: &ResearcherCountries,
) -> GenderRatioReport {
    let migrants: std::collections::BTreeSet<&str> = classifications
        .iter()
        .filter(|c| c.typology == Typology::Migrant)
        .map(|c| c.cluster_id.as_str())
        .collect();
    let mut acc: BTreeMap<&str, [u64; 4]> = BTreeMap::new();
    for d in demographics {
        let Some(countries) = links.get(&d.cluster_id) else {
            continue;
        };
        let is_migrant = migrants.contains(d.cluster_id.as_str());
        for c in countries {
            let a = acc.entry(c).or_default();
            match d.gender {
                Gender::Male => {
                    a[0] += 1;
                    a[2] += is_migrant as u64;
                }
                Gender::Female => {
                    a[1] += 1;
                    a[3] += is_migrant as u64;
                }
                Gender::Unknown => {}
            }
        }
    }
    let rows: Vec<GenderRatioRow> = acc
        .into_iter()
        .map(|(country, [m, f, mm, mf])| {
            let ratio_all = gender_ratio(m, f);
            let ratio_migrants = gender_ratio(mm, mf);
            let ratio_of_ratios = match (ratio_migrants, ratio_all) {
                (Some(a), Some(b)) if b > 0.0 => Some(a / b),
                _ => None,
            };
            GenderRatioRow {
                country: country.to_string(),
                male: m,
                female: f,
                migrant_male: mm,
                migrant_female: mf,
                ratio_all,
                ratio_migrants,
                ratio_of_ratios,
            }
        })
        .collect();
    let (mean_ratio_all, undefined_all) = mean_defined(rows.iter().map(|r| r.ratio_all));
    let (mean_ratio_migrants, undefined_migrants) =
        mean_defined(rows.iter().map(|r| r.ratio_migrants));
    GenderRatioReport {
        rows,
        mean_ratio_all,
        mean_ratio_migrants,
        undefined_all,
        undefined_migrants,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenderShareRow {
    pub country: String,
    pub male: u64,
    pub female: u64,
    pub unknown: u64,
    pub male_share: f64,
    pub female_share: f64,
    pub unknown_share: f64,
}

impl GenderShareRow {
    fn from_counts(country: &str, [male, female, unknown]: [u64; 3]) -> Self {
        let n = (male + female + unknown).max(1) as f64;
        Self {
            country: country.to_string(),
            male,
            female,
            unknown,
            male_share: male as f64 / n,
            female_share: female as f64 / n,
            unknown_share: unknown as f64 / n,
        }
    }

    pub fn total(&self) -> u64 {
        self.male + self.female + self.unknown
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenderShareTable {
    pub rows: Vec<GenderShareRow>,
    /// Distinct researchers linked to any MENA country.
    pub mena: GenderShareRow,
}

fn slot(g: Gender) -> usize {
    match g {
        Gender::Male => 0,
        Gender::Female => 1,
        Gender::Unknown => 2,
    }
}

pub fn gender_share_table(
    demographics: &[ResearcherDemographics],
    links: &ResearcherCountries,
    registry: &CountryRegistry,
) -> GenderShareTable {
    let mut acc: BTreeMap<&str, [u64; 3]> = BTreeMap::new();
    let mut mena = [0u64; 3];
    for d in demographics {
        let Some(countries) = links.get(&d.cluster_id) else {
            continue;
        };
        for c in countries {
            acc.entry(c).or_default()[slot(d.gender)] += 1;
        }
        if countries.iter().any(|c| registry.is_mena(c)) {
            mena[slot(d.gender)] += 1;
        }
    }
    GenderShareTable {
        rows: acc
            .into_iter()
            .map(|(c, counts)| GenderShareRow::from_counts(c, counts))
            .collect(),
        mena: GenderShareRow::from_counts(MENA_REGION, mena),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demography::AgeBucket;

    fn person(id: &str, gender: Gender) -> ResearcherDemographics {
        ResearcherDemographics {
            cluster_id: id.into(),
            first_name: String::new(),
            first_pub_year: 2010,
            academic_origin: Default::default(),
            gender_origin: Default::default(),
            academic_age: 3,
            age_bucket: AgeBucket::UpTo5,
            gender,
        }
    }

    fn linked(ids: &[&str], country: &str) -> ResearcherCountries {
        ids.iter()
            .map(|i| (i.to_string(), [country.to_string()].into()))
            .collect()
    }

    #[test]
    fn published_migrant_ratio() {
        assert_eq!(gender_ratio(66, 12), Some(5.5));
        assert_eq!(gender_ratio(7, 7), Some(1.0));
        assert_eq!(gender_ratio(3, 0), None);
    }

    #[test]
    fn undefined_ratios_are_excluded_from_means() {
        let d = vec![
            person("a", Gender::Male),
            person("b", Gender::Female),
            person("c", Gender::Male),
        ];
        let mut links = linked(&["a", "b"], "EGY");
        links.insert("c".into(), ["JOR".to_string()].into());
        let r = gender_ratio_report(&d, &[], &links);
        assert_eq!(r.rows.len(), 2);
        assert_eq!(r.mean_ratio_all, Some(1.0));
        assert_eq!(r.undefined_all, 1);
        assert_eq!(r.undefined_migrants, 2);
        assert_eq!(r.mean_ratio_migrants, None);
    }

    #[test]
    fn all_unknown_shares() {
        let d = vec![person("a", Gender::Unknown), person("b", Gender::Unknown)];
        let t = gender_share_table(&d, &linked(&["a", "b"], "EGY"), &CountryRegistry::bundled());
        let r = &t.rows[0];
        assert_eq!(
            (r.male_share, r.female_share, r.unknown_share),
            (0.0, 0.0, 1.0)
        );
        assert_eq!(t.mena.total(), 2);
    }
}
