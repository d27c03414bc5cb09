use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mobility::AffiliationTimeline;

/// Country set of the earliest publication (ties on year go to the smaller
/// pub_id, which is the timeline order).
pub fn academic_origin(history: &AffiliationTimeline) -> Result<BTreeSet<String>> {
    history
        .origin()
        .cloned()
        .ok_or_else(|| Error::EmptyCluster(history.cluster_id.clone()))
}

/// Countries used as the suspected origin for gender inference.
///
/// If a single country is linked to more publications than any other and it
/// is one of the first publication's countries, that country alone is
/// returned. Otherwise (no unique mode, or the mode is not a first
/// publication country) every country ever linked is returned.
pub fn gender_origin(history: &AffiliationTimeline) -> Result<BTreeSet<String>> {
    let first = academic_origin(history)?;
    let mut freq: BTreeMap<&str, usize> = BTreeMap::new();
    for e in &history.entries {
        for c in &e.countries {
            *freq.entry(c.as_str()).or_insert(0) += 1;
        }
    }
    let top = freq.values().copied().max().unwrap_or(0);
    let modal: Vec<&str> = freq
        .iter()
        .filter(|(_, n)| **n == top)
        .map(|(c, _)| *c)
        .collect();
    if let [only] = modal.as_slice() {
        if first.contains(*only) {
            return Ok([only.to_string()].into());
        }
    }
    Ok(freq.keys().map(|c| c.to_string()).collect())
}

/// Years from the first publication to `reference_year`.
pub fn academic_age(first_pub_year: i32, reference_year: i32) -> Result<u32> {
    if reference_year < first_pub_year {
        return Err(Error::ReferenceBeforeFirstPublication {
            reference: reference_year,
            first: first_pub_year,
        });
    }
    Ok((reference_year - first_pub_year) as u32)
}

/// Academic age groups with inclusive edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AgeBucket {
    #[serde(rename = "0-5")]
    UpTo5,
    #[serde(rename = "6-10")]
    From6To10,
    #[serde(rename = "11-15")]
    From11To15,
    #[serde(rename = "16-20")]
    From16To20,
    #[serde(rename = "21+")]
    From21,
}

impl AgeBucket {
    pub const ALL: [AgeBucket; 5] = [
        AgeBucket::UpTo5,
        AgeBucket::From6To10,
        AgeBucket::From11To15,
        AgeBucket::From16To20,
        AgeBucket::From21,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AgeBucket::UpTo5 => "0-5",
            AgeBucket::From6To10 => "6-10",
            AgeBucket::From11To15 => "11-15",
            AgeBucket::From16To20 => "16-20",
            AgeBucket::From21 => "21+",
        }
    }
}

impl fmt::Display for AgeBucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

pub fn age_bucket(age: i64) -> Result<AgeBucket> {
    Ok(match age {
        a if a < 0 => return Err(Error::NegativeAge(a)),
        0..=5 => AgeBucket::UpTo5,
        6..=10 => AgeBucket::From6To10,
        11..=15 => AgeBucket::From11To15,
        16..=20 => AgeBucket::From16To20,
        _ => AgeBucket::From21,
    })
}
