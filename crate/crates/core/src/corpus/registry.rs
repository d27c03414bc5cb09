use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::error::{Error, Result};

/// Region label assigned to every MENA member, whatever its continent.
pub const MENA_REGION: &str = "MENA";

const BUNDLED: &str = include_str!("../../data/countries.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountryEntry {
    pub code: String,
    pub name: String,
    /// Continent-level region from the registry file.
    pub region: String,
    pub is_mena: bool,
}

/// Country codes (ISO-3166 alpha-3), their regions, and the MENA set.
///
/// The registry is loaded from a delimited text file with the columns
/// `code, name, region, is_mena` (tab- or comma-separated, `#` comments).
/// The bundled default lists every ISO country plus Kosovo (`XKX`), with the
/// 19 World Bank MENA members plus Afghanistan, Pakistan and Turkey flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountryRegistry {
    entries: BTreeMap<String, CountryEntry>,
}

impl CountryRegistry {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled registry is valid")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = if line.contains('\t') {
                line.split('\t').map(str::trim).collect()
            } else {
                line.split(',').map(str::trim).collect()
            };
            if fields.len() != 4 {
                return Err(Error::Registry(format!(
                    "line {}: expected 4 fields (code, name, region, is_mena), got {}",
                    idx + 1,
                    fields.len()
                )));
            }
            let code = fields[0];
            if code.len() != 3 || !code.bytes().all(|b| b.is_ascii_uppercase()) {
                return Err(Error::Registry(format!(
                    "line {}: {code:?} is not an alpha-3 code",
                    idx + 1
                )));
            }
            if fields[2].is_empty() {
                return Err(Error::Registry(format!("line {}: empty region", idx + 1)));
            }
            let is_mena = match fields[3].to_ascii_lowercase().as_str() {
                "1" | "true" | "yes" | "y" => true,
                "0" | "false" | "no" | "n" => false,
                other => {
                    return Err(Error::Registry(format!(
                        "line {}: bad is_mena flag {other:?}",
                        idx + 1
                    )))
                }
            };
            let entry = CountryEntry {
                code: code.to_string(),
                name: fields[1].to_string(),
                region: fields[2].to_string(),
                is_mena,
            };
            if entries.insert(code.to_string(), entry).is_some() {
                return Err(Error::Registry(format!(
                    "line {}: duplicate code {code}",
                    idx + 1
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, code: &str) -> bool {
        self.entries.contains_key(code)
    }

    pub fn get(&self, code: &str) -> Option<&CountryEntry> {
        self.entries.get(code)
    }

    pub fn codes(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn is_mena(&self, code: &str) -> bool {
        self.entries.get(code).is_some_and(|e| e.is_mena)
    }

    pub fn mena_set(&self) -> BTreeSet<String> {
        self.entries
            .values()
            .filter(|e| e.is_mena)
            .map(|e| e.code.clone())
            .collect()
    }

    /// Region used for grouping flows. MENA members report [`MENA_REGION`].
    pub fn region_of(&self, code: &str) -> Result<&str> {
        let entry = self
            .entries
            .get(code)
            .ok_or_else(|| Error::UnknownCountry(code.to_string()))?;
        Ok(if entry.is_mena {
            MENA_REGION
        } else {
            entry.region.as_str()
        })
    }

    /// Number of countries per region (MENA members counted under MENA).
    pub fn region_sizes(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for code in self.entries.keys() {
            let region = self.region_of(code).expect("own code");
            *out.entry(region.to_string()).or_insert(0) += 1;
        }
        out
    }
}

impl Default for CountryRegistry {
    fn default() -> Self {
        Self::bundled()
    }
}
