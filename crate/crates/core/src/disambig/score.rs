use std::path::Path;

use serde::{Deserialize, Serialize};

use super::block::MentionContext;
use crate::error::{Error, Result};

/// Binary evidence indicators for a pair of mentions in the same block.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PairFeatures {
    pub email: f64,
    pub coauthor: f64,
    pub country_year: f64,
    pub full_first_name: f64,
    pub cocitation: f64,
}

impl PairFeatures {
    pub fn between(a: &MentionContext, b: &MentionContext) -> Self {
        let ind = |x: bool| if x { 1.0 } else { 0.0 };
        let email = matches!((&a.email, &b.email), (Some(x), Some(y)) if x == y);
        let coauthor = !a.coauthor_keys.is_disjoint(&b.coauthor_keys);
        let country_year = a.year == b.year && !a.countries.is_disjoint(&b.countries);
        let first = matches!(
            (&a.full_first_name, &b.full_first_name),
            (Some(x), Some(y)) if x == y
        );
        let cocitation = !a.cited_refs.is_disjoint(&b.cited_refs);
        Self {
            email: ind(email),
            coauthor: ind(coauthor),
            country_year: ind(country_year),
            full_first_name: ind(first),
            cocitation: ind(cocitation),
        }
    }
}

/// Non-negative evidence weights. The default e-mail weight alone clears the
/// default link threshold; a shared co-author needs one weak signal beside it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScoreWeights {
    pub email: f64,
    pub coauthor: f64,
    pub country_year: f64,
    pub full_first_name: f64,
    pub cocitation: f64,
}

impl Default for ScoreWeights {
    fn default() -> Self {
        Self {
            email: 1.0,
            coauthor: 0.6,
            country_year: 0.2,
            full_first_name: 0.3,
            cocitation: 0.3,
        }
    }
}

impl ScoreWeights {
    pub fn dot(&self, f: &PairFeatures) -> f64 {
        self.email * f.email
            + self.coauthor * f.coauthor
            + self.country_year * f.country_year
            + self.full_first_name * f.full_first_name
            + self.cocitation * f.cocitation
    }

    fn validate(&self) -> Result<()> {
        let all = [
            self.email,
            self.coauthor,
            self.country_year,
            self.full_first_name,
            self.cocitation,
        ];
        if all.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::Config(format!(
                "disambiguation weights must be finite and non-negative: {self:?}"
            )));
        }
        Ok(())
    }
}

pub const DEFAULT_THRESHOLD: f64 = 0.75;

/// Weights plus link threshold. Loadable from a TOML file:
///
/// ```toml
/// threshold = 0.75
/// [weights]
/// email = 1.0
/// coauthor = 0.6
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DisambigConfig {
    pub threshold: f64,
    pub weights: ScoreWeights,
}

impl Default for DisambigConfig {
    fn default() -> Self {
        Self {
            threshold: DEFAULT_THRESHOLD,
            weights: ScoreWeights::default(),
        }
    }
}

impl DisambigConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.threshold.is_finite() || self.threshold <= 0.0 {
            return Err(Error::Config(format!(
                "threshold must be positive, got {}",
                self.threshold
            )));
        }
        self.weights.validate()
    }
}

/// Evidence score for two mentions of the same block.
pub fn score_pair(a: &MentionContext, b: &MentionContext, weights: &ScoreWeights) -> f64 {
    weights.dot(&PairFeatures::between(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{AuthorMention, PublicationRecord};

    fn ctx(
        id: &str,
        year: i32,
        first: &str,
        email: Option<&str>,
        country: &str,
        co: &[&str],
    ) -> MentionContext {
        let mut m = AuthorMention::new("Haddad", first, [country]);
        m.email = email.map(str::to_string);
        let mut mentions = vec![m];
        for c in co {
            mentions.push(AuthorMention::new(c, "X", ["USA"]));
        }
        MentionContext::from_record(&PublicationRecord::new(id, year, mentions), 0)
    }

    #[test]
    fn email_alone_clears_threshold() {
        let a = ctx("p1", 2010, "K.", Some("k@u.edu"), "JOR", &[]);
        let b = ctx("p2", 2015, "K.", Some(" K@U.EDU "), "USA", &[]);
        assert!(score_pair(&a, &b, &ScoreWeights::default()) >= DEFAULT_THRESHOLD);
    }

    #[test]
    fn no_shared_evidence_scores_zero() {
        let a = ctx("p1", 2010, "K.", None, "JOR", &["Lee"]);
        let b = ctx("p2", 2011, "K.", None, "USA", &["Kim"]);
        assert_eq!(score_pair(&a, &b, &ScoreWeights::default()), 0.0);
    }

    #[test]
    fn coauthor_needs_a_weak_signal() {
        let w = ScoreWeights::default();
        let a = ctx("p1", 2010, "K.", None, "JOR", &["Lee"]);
        let b = ctx("p2", 2011, "K.", None, "USA", &["Lee"]);
        assert!(score_pair(&a, &b, &w) < DEFAULT_THRESHOLD);
        let c = ctx("p3", 2010, "K.", None, "JOR", &["Lee"]);
        assert!(score_pair(&a, &c, &w) >= DEFAULT_THRESHOLD);
        let d = ctx("p4", 2012, "Khaled", None, "USA", &["Lee"]);
        let e = ctx("p5", 2013, "Khaled", None, "USA", &["Lee"]);
        assert!(score_pair(&d, &e, &w) >= DEFAULT_THRESHOLD);
    }

    #[test]
    fn config_from_toml() {
        let cfg = DisambigConfig::from_toml("threshold = 0.5\n[weights]\nemail = 2.0\n").unwrap();
        assert_eq!(cfg.threshold, 0.5);
        assert_eq!(cfg.weights.email, 2.0);
        assert_eq!(cfg.weights.coauthor, 0.6);
        assert!(DisambigConfig::from_toml("[weights]\nemail = -1.0\n").is_err());
        assert!(DisambigConfig::from_toml("threshold = 0.0\n").is_err());
        assert!(DisambigConfig::from_toml("bogus = 1\n").is_err());
    }
}
