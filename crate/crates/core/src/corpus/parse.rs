use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::{CountryRegistry, PublicationRecord};
use crate::disambig::names::fold_name;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseOptions {
    /// Abort on the first malformed line or unknown country instead of
    /// skipping and counting it.
    pub strict: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub records: usize,
    pub mentions: usize,
    pub min_year: Option<i32>,
    pub max_year: Option<i32>,
    pub rejected_lines: usize,
    pub rejected_mentions: usize,
}

impl CorpusStats {
    fn observe(&mut self, record: &PublicationRecord) {
        self.records += 1;
        self.mentions += record.mentions.len();
        self.min_year = Some(self.min_year.map_or(record.year, |y| y.min(record.year)));
        self.max_year = Some(self.max_year.map_or(record.year, |y| y.max(record.year)));
    }

    /// Combines stats from two shards of the same input.
    pub fn merge(&mut self, other: &CorpusStats) {
        self.records += other.records;
        self.mentions += other.mentions;
        self.rejected_lines += other.rejected_lines;
        self.rejected_mentions += other.rejected_mentions;
        self.min_year = match (self.min_year, other.min_year) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max_year = match (self.max_year, other.max_year) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    /// Mention index within the line, for mention-level rejections.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mention: Option<usize>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedCorpus {
    pub records: Vec<PublicationRecord>,
    pub stats: CorpusStats,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses JSON-lines publication records, validating each against `registry`.
///
/// Blank lines are ignored. In lenient mode a bad line is skipped and counted
/// in `rejected_lines`; a mention with an unknown or missing country, or an
/// empty folded last name, is dropped and counted in `rejected_mentions`. A
/// record left with no mentions counts as a rejected line.
pub fn parse_corpus<R: BufRead>(
    input: R,
    registry: &CountryRegistry,
    options: ParseOptions,
) -> Result<ParsedCorpus> {
    let mut out = ParsedCorpus::default();
    let mut seen_ids: HashSet<String> = HashSet::new();

    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io("<corpus input>", e))?;
        if line.trim().is_empty() {
            continue;
        }

        let reject_line = |out: &mut ParsedCorpus, message: String| -> Result<()> {
            if options.strict {
                return Err(Error::Malformed {
                    line: lineno,
                    message,
                });
            }
            out.stats.rejected_lines += 1;
            out.diagnostics.push(Diagnostic {
                line: lineno,
                mention: None,
                message,
            });
            Ok(())
        };

        let mut record: PublicationRecord = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(e) => {
                reject_line(&mut out, format!("invalid record: {e}"))?;
                continue;
            }
        };

        if let Err(message) = check_record_shape(&record) {
            reject_line(&mut out, message)?;
            continue;
        }
        if seen_ids.contains(&record.pub_id) {
            reject_line(&mut out, format!("duplicate pub_id {:?}", record.pub_id))?;
            continue;
        }

        let mut kept = Vec::with_capacity(record.mentions.len());
        for (m_idx, mention) in std::mem::take(&mut record.mentions).into_iter().enumerate() {
            let problem = if fold_name(&mention.last_name).is_empty() {
                Some("last name is empty after normalization".to_string())
            } else if mention.countries.is_empty() {
                Some("mention has no affiliation country".to_string())
            } else {
                mention
                    .countries
                    .iter()
                    .find(|c| !registry.contains(c))
                    .map(|c| format!("unknown country code {c:?}"))
            };
            match problem {
                None => kept.push(mention),
                Some(message) => {
                    if options.strict {
                        let unknown = mention.countries.iter().find(|c| !registry.contains(c));
                        return Err(match unknown {
                            Some(c) => Error::UnknownCountry(c.clone()),
                            None => Error::Malformed {
                                line: lineno,
                                message,
                            },
                        });
                    }
                    out.stats.rejected_mentions += 1;
                    out.diagnostics.push(Diagnostic {
                        line: lineno,
                        mention: Some(m_idx),
                        message,
                    });
                }
            }
        }
        if kept.is_empty() {
            reject_line(&mut out, "no valid mentions left".to_string())?;
            continue;
        }
        record.mentions = kept;
        seen_ids.insert(record.pub_id.clone());
        out.stats.observe(&record);
        out.records.push(record);
    }
    Ok(out)
}

fn check_record_shape(record: &PublicationRecord) -> std::result::Result<(), String> {
    if record.pub_id.trim().is_empty() {
        return Err("empty pub_id".into());
    }
    if !(1000..=9999).contains(&record.year) {
        return Err(format!(
            "year {} is not a 4-digit positive year",
            record.year
        ));
    }
    if record.mentions.is_empty() {
        return Err("record has no author mentions".into());
    }
    Ok(())
}
