//! Publication records, the country registry, and the study window.
//!
//! Input is UTF-8 JSON lines, one publication per line:
//!
//! ```text
//! {"pub_id":"W1","year":2012,"doi":"10.1/x","external_ids":{"wos":"000123"},
//!  "mentions":[{"last_name":"El-Ouahi","first_name":"Jamal","email":"j@x.ma",
//!               "countries":["MAR"],"orcid":"0000-0001-2345-6789"}]}
//! ```
//!
//! `doi`, `external_ids`, `email` and `orcid` are optional. Country codes must
//! be present in the [`CountryRegistry`].

mod parse;
mod registry;
mod window;

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

pub use parse::{parse_corpus, CorpusStats, Diagnostic, ParseOptions, ParsedCorpus};
pub use registry::{CountryEntry, CountryRegistry, MENA_REGION};
pub use window::{filter_window, StudyWindow};

use crate::error::{Error, Result};

/// Position of an author mention: publication id plus index into `mentions`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MentionRef {
    pub pub_id: String,
    pub index: usize,
}

impl MentionRef {
    pub fn new(pub_id: impl Into<String>, index: usize) -> Self {
        Self {
            pub_id: pub_id.into(),
            index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorMention {
    pub last_name: String,
    #[serde(default)]
    pub first_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub email: Option<String>,
    pub countries: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orcid: Option<String>,
}

impl AuthorMention {
    pub fn new<I, S>(last_name: &str, first_name: &str, countries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            last_name: last_name.to_string(),
            first_name: first_name.to_string(),
            email: None,
            countries: countries.into_iter().map(Into::into).collect(),
            orcid: None,
        }
    }

    pub fn with_email(mut self, email: &str) -> Self {
        self.email = Some(email.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicationRecord {
    pub pub_id: String,
    pub year: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub doi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub external_ids: Option<BTreeMap<String, String>>,
    pub mentions: Vec<AuthorMention>,
}

impl PublicationRecord {
    pub fn new(pub_id: &str, year: i32, mentions: Vec<AuthorMention>) -> Self {
        Self {
            pub_id: pub_id.to_string(),
            year,
            doi: None,
            external_ids: None,
            mentions,
        }
    }

    /// All countries linked to the publication through any mention.
    pub fn countries(&self) -> BTreeSet<&str> {
        self.mentions
            .iter()
            .flat_map(|m| m.countries.iter().map(String::as_str))
            .collect()
    }

    /// Canonical single-line JSON (fixed field order, sorted sets and maps).
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Writes records as canonical JSON lines.
pub fn write_corpus<W: Write>(records: &[PublicationRecord], mut out: W) -> Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json_line()).map_err(|e| Error::io("<corpus output>", e))?;
    }
    Ok(())
}

/// Reads records written by [`write_corpus`] without re-validating them.
/// Use [`parse_corpus`] for raw input.
pub fn read_corpus<R: BufRead>(input: R) -> Result<Vec<PublicationRecord>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<corpus>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::Malformed {
            line: i + 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

/// Lookup from publication id to record.
pub fn index_by_id(records: &[PublicationRecord]) -> BTreeMap<&str, &PublicationRecord> {
    records.iter().map(|r| (r.pub_id.as_str(), r)).collect()
}
