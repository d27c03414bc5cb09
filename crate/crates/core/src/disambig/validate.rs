use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::block::NameKey;
use super::cluster::{assignment_map, AuthorCluster};
use crate::corpus::{MentionRef, PublicationRecord};
use crate::error::{Error, Result};

/// One identity from an external registry (an ORCID-style record).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceIdentity {
    pub identity_id: String,
    /// `"Last, First"`; without a comma the final word is the last name.
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub email: Option<String>,
    /// Persistent identifiers (DOI or external id values) of the identity's
    /// publications.
    pub publication_ids: Vec<String>,
}

impl ReferenceIdentity {
    pub fn name_key(&self) -> NameKey {
        let (last, first) = match self.name.split_once(',') {
            Some((l, f)) => (l.trim(), f.trim()),
            None => match self.name.trim().rsplit_once(char::is_whitespace) {
                Some((f, l)) => (l, f),
                None => (self.name.trim(), ""),
            },
        };
        NameKey::new(last, first)
    }
}

/// Reads line-delimited JSON reference identities.
pub fn read_reference<R: BufRead>(input: R) -> Result<Vec<ReferenceIdentity>> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<reference>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let ident: ReferenceIdentity =
            serde_json::from_str(&line).map_err(|e| Error::Malformed {
                line: idx + 1,
                message: e.to_string(),
            })?;
        out.push(ident);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Identities with at least one publication joined and one mention aligned.
    pub matched_identities: usize,
    /// Matched identities whose aligned mentions all fall in one cluster.
    pub correct: usize,
    /// Matched identities split across two or more clusters.
    pub incorrect: usize,
    /// `correct / matched_identities`; `None` when nothing matched.
    pub correct_rate: Option<f64>,
    /// Identities with a joined publication but no alignable mention.
    pub unaligned_identities: usize,
}

impl ValidationReport {
    pub fn from_counts(correct: usize, incorrect: usize) -> Self {
        let matched = correct + incorrect;
        Self {
            matched_identities: matched,
            correct,
            incorrect,
            correct_rate: (matched > 0).then(|| correct as f64 / matched as f64),
            unaligned_identities: 0,
        }
    }

    pub fn incorrect_rate(&self) -> Option<f64> {
        self.correct_rate.map(|r| 1.0 - r)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::indicators::format::{percent, thousands};
        match (self.correct_rate, self.incorrect_rate()) {
            (Some(c), Some(i)) => write!(
                f,
                "matched {}: correct {} ({}) incorrect {} ({})",
                thousands(self.matched_identities as u64),
                thousands(self.correct as u64),
                percent(c, 1),
                thousands(self.incorrect as u64),
                percent(i, 1)
            ),
            _ => write!(f, "matched 0: correct rate undefined"),
        }
    }
}

/// Checks clusters against a reference registry.
///
/// 1. Reference publication ids are joined to records by DOI
///    (case-insensitive) or by external id value (`value` or `scheme:value`).
/// 2. In each joined record the identity is aligned to the mention with the
///    same name key. Several candidates are narrowed by e-mail; with no
///    name candidate, a unique e-mail match is accepted. Anything still
///    ambiguous is left unaligned.
/// 3. An identity is correct when all its aligned mentions share a cluster.
pub fn validate_against_reference(
    clusters: &[AuthorCluster],
    records: &[PublicationRecord],
    reference: &[ReferenceIdentity],
) -> ValidationReport {
    let mut by_identifier: BTreeMap<String, &PublicationRecord> = BTreeMap::new();
    for r in records {
        if let Some(doi) = &r.doi {
            by_identifier.insert(normalize_doi(doi), r);
        }
        if let Some(ids) = &r.external_ids {
            for (scheme, value) in ids {
                by_identifier.insert(value.clone(), r);
                by_identifier.insert(format!("{scheme}:{value}"), r);
            }
        }
    }
    let cluster_of = assignment_map(clusters);

    let mut correct = 0;
    let mut incorrect = 0;
    let mut unaligned = 0;
    for ident in reference {
        let key = ident.name_key();
        let email = ident.email.as_deref().map(|e| e.trim().to_lowercase());
        let mut joined_any = false;
        let mut hit_clusters: BTreeSet<&str> = BTreeSet::new();
        let mut seen_pubs = BTreeSet::new();
        for pid in &ident.publication_ids {
            let record = by_identifier
                .get(pid.as_str())
                .or_else(|| by_identifier.get(&normalize_doi(pid)));
            let Some(record) = record else { continue };
            if !seen_pubs.insert(record.pub_id.as_str()) {
                continue;
            }
            joined_any = true;
            if let Some(idx) = align(record, &key, email.as_deref()) {
                let m = MentionRef::new(&record.pub_id, idx);
                if let Some(cid) = cluster_of.get(&m) {
                    hit_clusters.insert(cid);
                }
            }
        }
        match hit_clusters.len() {
            0 if joined_any => unaligned += 1,
            0 => {}
            1 => correct += 1,
            _ => incorrect += 1,
        }
    }
    let mut report = ValidationReport::from_counts(correct, incorrect);
    report.unaligned_identities = unaligned;
    report
}

fn normalize_doi(doi: &str) -> String {
    let d = doi.trim().to_lowercase();
    for prefix in ["https://doi.org/", "http://doi.org/", "doi:"] {
        if let Some(rest) = d.strip_prefix(prefix) {
            return rest.to_string();
        }
    }
    d
}

fn align(record: &PublicationRecord, key: &NameKey, email: Option<&str>) -> Option<usize> {
    let email_matches = |i: &usize| {
        email.is_some()
            && record.mentions[*i]
                .email
                .as_deref()
                .map(|e| e.trim().to_lowercase())
                .as_deref()
                == email
    };
    let by_name: Vec<usize> = (0..record.mentions.len())
        .filter(|&i| &NameKey::of(&record.mentions[i]) == key)
        .collect();
    let candidates: Vec<usize> = match by_name.len() {
        1 => return Some(by_name[0]),
        0 => (0..record.mentions.len()).filter(email_matches).collect(),
        _ => by_name.into_iter().filter(email_matches).collect(),
    };
    (candidates.len() == 1).then(|| candidates[0])
}
