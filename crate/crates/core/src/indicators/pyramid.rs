use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::demography::{AgeBucket, ResearcherDemographics};
use crate::mobility::{MobilityClassification, Role, Typology};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidRow {
    pub bucket: AgeBucket,
    pub emigrants: u64,
    pub immigrants: u64,
}

/// Migrant age structure seen from a group of focus countries. A migrant
/// leaving one focus country for another appears on both sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PopulationPyramid {
    pub rows: Vec<PyramidRow>,
    pub emigrants: u64,
    pub immigrants: u64,
    pub mean_age_emigrants: Option<f64>,
    pub mean_age_immigrants: Option<f64>,
    /// Over distinct migrants on either side.
    pub mean_age: Option<f64>,
}

impl PopulationPyramid {
    pub fn row(&self, bucket: AgeBucket) -> &PyramidRow {
        self.rows
            .iter()
            .find(|r| r.bucket == bucket)
            .expect("all buckets present")
    }
}

pub fn population_pyramid(
    demographics: &[ResearcherDemographics],
    classifications: &[MobilityClassification],
    focus: &BTreeSet<String>,
) -> PopulationPyramid {
    let by_id: BTreeMap<&str, &ResearcherDemographics> = demographics
        .iter()
        .map(|d| (d.cluster_id.as_str(), d))
        .collect();
    let mut counts: BTreeMap<AgeBucket, (u64, u64)> =
        AgeBucket::ALL.iter().map(|b| (*b, (0, 0))).collect();
    let (mut em_sum, mut im_sum, mut all_sum) = (0u64, 0u64, 0u64);
    let (mut em, mut im, mut all) = (0u64, 0u64, 0u64);
    for c in classifications
        .iter()
        .filter(|c| c.typology == Typology::Migrant)
    {
        let Some(d) = by_id.get(c.cluster_id.as_str()) else {
            continue;
        };
        let has = |role: Role| c.roles.iter().any(|(k, r)| *r == role && focus.contains(k));
        let (out, inn) = (has(Role::Emigrant), has(Role::Immigrant));
        let age = d.academic_age as u64;
        let slot = counts.get_mut(&d.age_bucket).expect("all buckets present");
        if out {
            slot.0 += 1;
            em += 1;
            em_sum += age;
        }
        if inn {
            slot.1 += 1;
            im += 1;
            im_sum += age;
        }
        if out || inn {
            all += 1;
            all_sum += age;
        }
    }
    let mean = |s: u64, n: u64| (n > 0).then(|| s as f64 / n as f64);
    PopulationPyramid {
        rows: counts
            .into_iter()
            .map(|(bucket, (emigrants, immigrants))| PyramidRow {
                bucket,
                emigrants,
                immigrants,
            })
            .collect(),
        emigrants: em,
        immigrants: im,
        mean_age_emigrants: mean(em_sum, em),
        mean_age_immigrants: mean(im_sum, im),
        mean_age: mean(all_sum, all),
    }
}
