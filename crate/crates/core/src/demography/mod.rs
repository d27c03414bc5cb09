//! Academic origin, academic age, and gender attribution.

mod gender;
mod origin;
pub mod remote;

pub use gender::{
    infer_gender, Gender, GenderGuess, GenderInference, GenderProvider, LocalGenderTable,
    DEFAULT_MIN_CONFIDENCE,
};
pub use origin::{academic_age, academic_origin, age_bucket, gender_origin, AgeBucket};
#[cfg(feature = "remote")]
pub use remote::RemoteGenderProvider;
pub use remote::{parse_genderize_response, RemoteProviderConfig};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::PublicationRecord;
use crate::disambig::names::fold_name;
use crate::disambig::AuthorCluster;
use crate::error::{Error, Result};
use crate::mobility::{AffiliationTimeline, MobilityClassification, Typology};

/// Year against which academic age is measured.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AgeReference {
    /// Migrants: year of their first mobility event. Everyone else: window end.
    #[default]
    Event,
    /// Everyone: last year of the study window.
    WindowEnd,
}

impl fmt::Display for AgeReference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            AgeReference::Event => "event",
            AgeReference::WindowEnd => "window-end",
        })
    }
}

impl FromStr for AgeReference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "event" => Ok(AgeReference::Event),
            "window-end" => Ok(AgeReference::WindowEnd),
            other => Err(Error::Config(format!(
                "age reference must be `event` or `window-end`, got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemographyConfig {
    pub age_reference: AgeReference,
    pub window_end: i32,
    pub min_confidence: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResearcherDemographics {
    pub cluster_id: String,
    pub first_name: String,
    pub first_pub_year: i32,
    pub academic_origin: BTreeSet<String>,
    pub gender_origin: BTreeSet<String>,
    pub academic_age: u32,
    pub age_bucket: AgeBucket,
    pub gender: Gender,
}

/// The most informative first name among a cluster's mentions: the longest
/// folded form, ties going to the earliest mention.
pub fn representative_first_name(
    cluster: &AuthorCluster,
    records: &BTreeMap<&str, &PublicationRecord>,
) -> String {
    let mut best: Option<(usize, &str)> = None;
    for m in &cluster.members {
        let Some(mention) = records
            .get(m.pub_id.as_str())
            .and_then(|r| r.mentions.get(m.index))
        else {
            continue;
        };
        let len = fold_name(&mention.first_name).chars().count();
        if best.is_none_or(|(l, _)| len > l) {
            best = Some((len, &mention.first_name));
        }
    }
    best.map(|(_, n)| n.to_string()).unwrap_or_default()
}

/// Attributes demographics to one researcher.
///
/// `history` is the researcher's full publication timeline (it may start
/// before the study window). `classification` sets the age reference year
/// for migrants in [`AgeReference::Event`] mode.
pub fn attribute(
    history: &AffiliationTimeline,
    classification: Option<&MobilityClassification>,
    first_name: &str,
    providers: &[&dyn GenderProvider],
    config: &DemographyConfig,
) -> Result<ResearcherDemographics> {
    let academic_origin = academic_origin(history)?;
    let gender_origin = gender_origin(history)?;
    let first_pub_year = history.entries[0].year;
    let reference_year = match (config.age_reference, classification) {
        (AgeReference::Event, Some(c)) if c.typology == Typology::Migrant => {
            c.first_event_year().unwrap_or(config.window_end)
        }
        _ => config.window_end,
    };
    let academic_age = academic_age(first_pub_year, reference_year)?;
    let age_bucket = age_bucket(academic_age as i64)?;
    let gender = infer_gender(first_name, &gender_origin, providers, config.min_confidence).gender;
    Ok(ResearcherDemographics {
        cluster_id: history.cluster_id.clone(),
        first_name: first_name.to_string(),
        first_pub_year,
        academic_origin,
        gender_origin,
        academic_age,
        age_bucket,
        gender,
    })
}

pub fn write_demographics<W: Write>(items: &[ResearcherDemographics], mut out: W) -> Result<()> {
    for d in items {
        serde_json::to_writer(&mut out, d)?;
        out.write_all(b"\n")
            .map_err(|e| Error::io("<demographics>", e))?;
    }
    Ok(())
}

pub fn read_demographics<R: BufRead>(input: R) -> Result<Vec<ResearcherDemographics>> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<demographics>", e))?;
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
