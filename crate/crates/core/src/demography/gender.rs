use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::disambig::names::{fold_name, full_first_name};
use crate::error::{Error, Result};

/// Default acceptance floor for provider confidence (inclusive).
pub const DEFAULT_MIN_CONFIDENCE: f64 = 0.90;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gender {
    Male,
    Female,
    Unknown,
}

impl Gender {
    pub const ALL: [Gender; 3] = [Gender::Male, Gender::Female, Gender::Unknown];

    pub fn label(self) -> &'static str {
        match self {
            Gender::Male => "male",
            Gender::Female => "female",
            Gender::Unknown => "unknown",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "male" => Some(Gender::Male),
            "f" | "female" => Some(Gender::Female),
            "u" | "unknown" | "n/a" | "" => Some(Gender::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenderGuess {
    pub gender: Gender,
    pub confidence: f64,
}

/// A name→gender service. Implementations must be deterministic per
/// `(first_name, country)` and safe to share across threads.
pub trait GenderProvider: Send + Sync {
    fn name(&self) -> &str;

    /// `Ok(None)` when the provider has no answer for the name.
    fn lookup(&self, first_name: &str, country: &str) -> Result<Option<GenderGuess>>;
}

/// Gender table loaded from a delimited file with the columns
/// `first_name, country-or-*, gender, confidence`. A country-specific row
/// wins over the `*` row for the same name.
#[derive(Debug, Clone, Default)]
pub struct LocalGenderTable {
    name: String,
    rows: HashMap<(String, Option<String>), GenderGuess>,
}

const BUNDLED_TABLE: &str = include_str!("../../data/gender_names.tsv");

impl LocalGenderTable {
    /// Small built-in table of common first names.
    pub fn bundled() -> Self {
        Self::parse("bundled", BUNDLED_TABLE).expect("bundled gender table is valid")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&path.display().to_string(), &text)
    }

    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut rows = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = if line.contains('\t') {
                line.split('\t').map(str::trim).collect()
            } else {
                line.split(',').map(str::trim).collect()
            };
            let bad = |msg: String| Error::Provider {
                provider: name.to_string(),
                message: format!("line {}: {msg}", idx + 1),
            };
            if f.len() != 4 {
                return Err(bad(format!("expected 4 fields, got {}", f.len())));
            }
            let first = fold_name(f[0]);
            if first.is_empty() {
                return Err(bad("empty first name".into()));
            }
            let country = (f[1] != "*").then(|| f[1].to_string());
            let gender =
                Gender::parse(f[2]).ok_or_else(|| bad(format!("bad gender {:?}", f[2])))?;
            let confidence: f64 = f[3]
                .parse()
                .ok()
                .filter(|c: &f64| (0.0..=1.0).contains(c))
                .ok_or_else(|| bad(format!("bad confidence {:?}", f[3])))?;
            rows.insert((first, country), GenderGuess { gender, confidence });
        }
        Ok(Self {
            name: name.to_string(),
            rows,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn get(&self, folded: &str, country: &str) -> Option<GenderGuess> {
        self.rows
            .get(&(folded.to_string(), Some(country.to_string())))
            .or_else(|| self.rows.get(&(folded.to_string(), None)))
            .copied()
    }
}

impl GenderProvider for LocalGenderTable {
    fn name(&self) -> &str {
        &self.name
    }

    /// Looks up the whole spelled-out first name, then its first word.
    /// Bare initials never match.
    fn lookup(&self, first_name: &str, country: &str) -> Result<Option<GenderGuess>> {
        let Some(full) = full_first_name(first_name) else {
            return Ok(None);
        };
        if let Some(g) = self.get(&full, country) {
            return Ok(Some(g));
        }
        let first_word = first_name
            .split(|c: char| c.is_whitespace() || c == '-')
            .map(fold_name)
            .find(|w| !w.is_empty());
        Ok(first_word
            .filter(|w| w.chars().count() > 1 && *w != full)
            .and_then(|w| self.get(&w, country)))
    }
}

/// Result of [`infer_gender`] with the failures met along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct GenderInference {
    pub gender: Gender,
    pub provider_failures: Vec<String>,
}

/// Infers a gender from a first name and the suspected origin countries.
///
/// For each origin country the providers are asked in order and the first
/// answer with `confidence >= min_confidence` is accepted. Accepted answers
/// that disagree across countries, or no accepted answer at all, give
/// `Unknown`. Failing providers are skipped and reported.
pub fn infer_gender(
    first_name: &str,
    origin: &BTreeSet<String>,
    providers: &[&dyn GenderProvider],
    min_confidence: f64,
) -> GenderInference {
    let mut accepted: BTreeSet<Gender> = BTreeSet::new();
    let mut failures = Vec::new();
    let mut calls = 0usize;
    for country in origin {
        for p in providers {
            calls += 1;
            match p.lookup(first_name, country) {
                Ok(Some(g)) if g.gender != Gender::Unknown && g.confidence >= min_confidence => {
                    accepted.insert(g.gender);
                    break;
                }
                Ok(_) => {}
                Err(e) => {
                    log::warn!("gender provider {} failed: {e}", p.name());
                    failures.push(format!("{}: {e}", p.name()));
                }
            }
        }
    }
    if calls > 0 && failures.len() == calls {
        log::warn!("every gender provider failed for {first_name:?}; gender unknown");
    }
    let gender = match accepted.len() {
        1 => *accepted.iter().next().unwrap(),
        _ => Gender::Unknown,
    };
    GenderInference {
        gender,
        provider_failures: failures,
    }
}
