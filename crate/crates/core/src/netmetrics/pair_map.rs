//! Serializes maps keyed by country pairs as `[a, b, weight]` triples, since
//! JSON objects only take string keys.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

type PairMap = BTreeMap<(String, String), u64>;

pub fn serialize<S: Serializer>(map: &PairMap, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<(&str, &str, u64)> = map
        .iter()
        .map(|((a, b), w)| (a.as_str(), b.as_str(), *w))
        .collect();
    rows.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PairMap, D::Error> {
    let rows: Vec<(String, String, u64)> = Vec::deserialize(d)?;
    Ok(rows.into_iter().map(|(a, b, w)| ((a, b), w)).collect())
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(map: &Option<PairMap>, s: S) -> Result<S::Ok, S::Error> {
        match map {
            Some(m) => s.serialize_some(&Wrap(m)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<PairMap>, D::Error> {
        let rows: Option<Vec<(String, String, u64)>> = Option::deserialize(d)?;
        Ok(rows.map(|r| r.into_iter().map(|(a, b, w)| ((a, b), w)).collect()))
    }

    struct Wrap<'a>(&'a PairMap);

    impl Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            super::serialize(self.0, s)
        }
    }
}
