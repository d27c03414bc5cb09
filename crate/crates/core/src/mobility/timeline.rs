use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::{PublicationRecord, StudyWindow};
use crate::disambig::AuthorCluster;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimelineEntry {
    pub year: i32,
    pub pub_id: String,
    pub countries: BTreeSet<String>,
}

/// Per-publication affiliation countries of one researcher, ordered by
/// `(year, pub_id)`. Same-year publications stay separate entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffiliationTimeline {
    pub cluster_id: String,
    pub entries: Vec<TimelineEntry>,
}

impl AffiliationTimeline {
    /// Builds a timeline straight from `(year, pub_id, countries)` triples.
    pub fn from_entries<I, S>(cluster_id: &str, entries: I) -> Self
    where
        I: IntoIterator<Item = (i32, String, BTreeSet<S>)>,
        S: Into<String>,
    {
        let mut entries: Vec<TimelineEntry> = entries
            .into_iter()
            .map(|(year, pub_id, countries)| TimelineEntry {
                year,
                pub_id,
                countries: countries.into_iter().map(Into::into).collect(),
            })
            .collect();
        entries.sort_by(|a, b| (a.year, &a.pub_id).cmp(&(b.year, &b.pub_id)));
        Self {
            cluster_id: cluster_id.to_string(),
            entries,
        }
    }

    /// Country set of the first entry.
    pub fn origin(&self) -> Option<&BTreeSet<String>> {
        self.entries.first().map(|e| &e.countries)
    }

    /// Every country appearing anywhere on the timeline.
    pub fn all_countries(&self) -> BTreeSet<&str> {
        self.entries
            .iter()
            .flat_map(|e| e.countries.iter().map(String::as_str))
            .collect()
    }
}

/// One entry per in-window publication of the cluster. The country set is
/// the one on the cluster's mention (the union if the cluster holds several
/// mentions of the same publication).
pub fn build_timeline(
    cluster: &AuthorCluster,
    records: &BTreeMap<&str, &PublicationRecord>,
    window: StudyWindow,
) -> AffiliationTimeline {
    collect(cluster, records, |year| window.contains(year))
}

/// Like [`build_timeline`] over every publication of the cluster, including
/// any before the study window.
pub fn build_history(
    cluster: &AuthorCluster,
    records: &BTreeMap<&str, &PublicationRecord>,
) -> AffiliationTimeline {
    collect(cluster, records, |_| true)
}

fn collect(
    cluster: &AuthorCluster,
    records: &BTreeMap<&str, &PublicationRecord>,
    keep_year: impl Fn(i32) -> bool,
) -> AffiliationTimeline {
    let mut per_pub: BTreeMap<&str, (i32, BTreeSet<String>)> = BTreeMap::new();
    for m in &cluster.members {
        let Some(record) = records.get(m.pub_id.as_str()) else {
            continue;
        };
        if !keep_year(record.year) {
            continue;
        }
        let Some(mention) = record.mentions.get(m.index) else {
            continue;
        };
        let slot = per_pub
            .entry(record.pub_id.as_str())
            .or_insert_with(|| (record.year, BTreeSet::new()));
        slot.1.extend(mention.countries.iter().cloned());
    }
    AffiliationTimeline::from_entries(
        &cluster.cluster_id,
        per_pub
            .into_iter()
            .map(|(id, (year, countries))| (year, id.to_string(), countries)),
    )
}
