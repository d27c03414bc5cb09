use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::corpus::{CountryRegistry, StudyWindow};
use crate::demography::{AgeReference, RemoteProviderConfig, DEFAULT_MIN_CONFIDENCE};
use crate::disambig::DisambigConfig;
use crate::error::{Error, Result};
use crate::indicators::{ReportKind, DEFAULT_ALLUVIAL_THRESHOLD, DEFAULT_TOP_K};
use crate::mobility::DEFAULT_MIN_COUNTRY_COUNT;

/// Gender provider chain. Providers are asked in order: the extra local
/// tables, then the bundled table, then the remote services.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GenderConfig {
    pub min_confidence: f64,
    pub tables: Vec<PathBuf>,
    pub bundled_table: bool,
    pub remote: Vec<RemoteProviderConfig>,
}

impl Default for GenderConfig {
    fn default() -> Self {
        Self {
            min_confidence: DEFAULT_MIN_CONFIDENCE,
            tables: Vec::new(),
            bundled_table: true,
            remote: Vec::new(),
        }
    }
}

/// Everything a run depends on. Serialized as TOML:
///
/// ```toml
/// inputs = ["corpus.jsonl"]
/// window = "2008:2017"
/// out_dir = "out"
/// reports = ["all"]
///
/// [disambiguation]
/// threshold = 0.75
///
/// [gender]
/// min_confidence = 0.9
/// ```
///
/// Relative paths in a config file resolve against the file's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub inputs: Vec<PathBuf>,
    /// Country registry; the bundled one when unset.
    pub registry: Option<PathBuf>,
    pub window: StudyWindow,
    /// Earliest publication year kept for academic age and origin. Defaults
    /// to the window start.
    pub history_from: Option<i32>,
    pub strict: bool,
    pub disambiguation: DisambigConfig,
    pub gender: GenderConfig,
    pub age_reference: AgeReference,
    pub min_country_count: u64,
    pub alluvial_threshold: u64,
    pub top_k: usize,
    pub reports: Vec<ReportKind>,
    pub out_dir: PathBuf,
    /// Forbids remote gender providers.
    pub reproducible: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            registry: None,
            window: StudyWindow::default(),
            history_from: None,
            strict: false,
            disambiguation: DisambigConfig::default(),
            gender: GenderConfig::default(),
            age_reference: AgeReference::default(),
            min_country_count: DEFAULT_MIN_COUNTRY_COUNT,
            alluvial_threshold: DEFAULT_ALLUVIAL_THRESHOLD,
            top_k: DEFAULT_TOP_K,
            reports: vec![ReportKind::All],
            out_dir: PathBuf::from("out"),
            reproducible: true,
        }
    }
}

fn rebase(base: &Path, p: &mut PathBuf) {
    if p.is_relative() {
        *p = base.join(&*p);
    }
}

impl PipelineConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::from_toml(&text)?;
        let base = path.parent().unwrap_or(Path::new("."));
        cfg.inputs.iter_mut().for_each(|p| rebase(base, p));
        cfg.gender.tables.iter_mut().for_each(|p| rebase(base, p));
        if let Some(r) = cfg.registry.as_mut() {
            rebase(base, r);
        }
        rebase(base, &mut cfg.out_dir);
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        self.disambiguation.validate()?;
        if !(0.0..=1.0).contains(&self.gender.min_confidence) {
            return Err(Error::Config(format!(
                "gender.min_confidence must lie in [0, 1], got {}",
                self.gender.min_confidence
            )));
        }
        if let Some(h) = self.history_from {
            if h > self.window.start() {
                return Err(Error::Config(format!(
                    "history_from {h} is after the window start {}",
                    self.window.start()
                )));
            }
        }
        if self.top_k == 0 {
            return Err(Error::Config("top_k must be at least 1".into()));
        }
        if self.reproducible && !self.gender.remote.is_empty() {
            return Err(Error::Config(
                "remote gender providers are not allowed in reproducible mode".into(),
            ));
        }
        Ok(())
    }

    pub fn history_start(&self) -> i32 {
        self.history_from.unwrap_or(self.window.start())
    }

    pub fn load_registry(&self) -> Result<CountryRegistry> {
        match &self.registry {
            Some(p) => CountryRegistry::from_path(p),
            None => Ok(CountryRegistry::bundled()),
        }
    }
}
