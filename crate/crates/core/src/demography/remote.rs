//! HTTP gender service client (genderize-style JSON responses).
//!
//! The request is `GET {base_url}?name=<first>&country_id=<code>[&apikey=<key>]`
//! and the response `{"gender": "male"|"female"|null, "probability": 0.97}`.
//! Country codes are sent as they appear in the corpus (alpha-3); point
//! `base_url` at an endpoint that accepts them. Answers are cached per
//! `(name, country)` and calls are spaced by `min_interval_ms`. Networking
//! needs the `remote` cargo feature.

use serde::{Deserialize, Serialize};

use super::gender::{Gender, GenderGuess};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RemoteProviderConfig {
    pub name: String,
    pub base_url: String,
    /// Environment variable holding the API key, if the service needs one.
    #[serde(default)]
    pub api_key_env: Option<String>,
    #[serde(default = "default_timeout_ms")]
    pub timeout_ms: u64,
    #[serde(default = "default_min_interval_ms")]
    pub min_interval_ms: u64,
}

fn default_timeout_ms() -> u64 {
    5_000
}

fn default_min_interval_ms() -> u64 {
    200
}

#[derive(Deserialize)]
struct GenderizeBody {
    gender: Option<String>,
    #[serde(default)]
    probability: f64,
}

/// Parses a genderize-style body; a null gender means no answer.
pub fn parse_genderize_response(body: &str) -> Result<Option<GenderGuess>> {
    let parsed: GenderizeBody = serde_json::from_str(body)?;
    let gender = match parsed.gender.as_deref() {
        None => return Ok(None),
        Some("male") => Gender::Male,
        Some("female") => Gender::Female,
        Some(other) => {
            return Err(Error::Provider {
                provider: "remote".into(),
                message: format!("unexpected gender {other:?}"),
            })
        }
    };
    Ok(Some(GenderGuess {
        gender,
        confidence: parsed.probability.clamp(0.0, 1.0),
    }))
}

#[cfg(feature = "remote")]
mod client {
    use std::collections::HashMap;
    use std::sync::Mutex;
    use std::time::{Duration, Instant};

    use super::*;
    use crate::demography::gender::GenderProvider;

    pub struct RemoteGenderProvider {
        config: RemoteProviderConfig,
        api_key: Option<String>,
        agent: ureq::Agent,
        cache: Mutex<HashMap<(String, String), Option<GenderGuess>>>,
        last_call: Mutex<Option<Instant>>,
    }

    impl RemoteGenderProvider {
        pub fn new(config: RemoteProviderConfig) -> Result<Self> {
            let api_key = match &config.api_key_env {
                Some(var) => Some(std::env::var(var).map_err(|_| {
                    Error::Config(format!("environment variable {var} is not set"))
                })?),
                None => None,
            };
            let agent = ureq::AgentBuilder::new()
                .timeout(Duration::from_millis(config.timeout_ms))
                .build();
            Ok(Self {
                config,
                api_key,
                agent,
                cache: Mutex::new(HashMap::new()),
                last_call: Mutex::new(None),
            })
        }

        fn throttle(&self) {
            let mut last = self.last_call.lock().expect("rate limiter lock");
            let gap = Duration::from_millis(self.config.min_interval_ms);
            if let Some(prev) = *last {
                let elapsed = prev.elapsed();
                if elapsed < gap {
                    std::thread::sleep(gap - elapsed);
                }
            }
            *last = Some(Instant::now());
        }
    }

    impl GenderProvider for RemoteGenderProvider {
        fn name(&self) -> &str {
            &self.config.name
        }

        fn lookup(&self, first_name: &str, country: &str) -> Result<Option<GenderGuess>> {
            let key = (first_name.to_string(), country.to_string());
            if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
                return Ok(*hit);
            }
            self.throttle();
            let mut req = self
                .agent
                .get(&self.config.base_url)
                .query("name", first_name)
                .query("country_id", country);
            if let Some(k) = &self.api_key {
                req = req.query("apikey", k);
            }
            let body = req
                .call()
                .map_err(|e| Error::Provider {
                    provider: self.config.name.clone(),
                    message: e.to_string(),
                })?
                .into_string()
                .map_err(|e| Error::io(self.config.base_url.clone(), e))?;
            let guess = parse_genderize_response(&body)?;
            self.cache.lock().expect("cache lock").insert(key, guess);
            Ok(guess)
        }
    }
}

#[cfg(feature = "remote")]
pub use client::RemoteGenderProvider;
