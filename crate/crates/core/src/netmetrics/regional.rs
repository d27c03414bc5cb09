use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::CountryRegistry;
use crate::error::Result;
use crate::mobility::MobilityEvent;

/// Researcher counts per ordered `(origin region, destination region)` pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionalFlowMatrix {
    #[serde(with = "super::pair_map")]
    pub cells: BTreeMap<(String, String), u64>,
}

impl RegionalFlowMatrix {
    pub fn get(&self, from: &str, to: &str) -> u64 {
        self.cells
            .get(&(from.to_string(), to.to_string()))
            .copied()
            .unwrap_or(0)
    }

    pub fn regions(&self) -> BTreeSet<&str> {
        self.cells
            .keys()
            .flat_map(|(a, b)| [a.as_str(), b.as_str()])
            .collect()
    }

    pub fn row_totals(&self) -> BTreeMap<&str, u64> {
        let mut out = BTreeMap::new();
        for ((from, _), n) in &self.cells {
            *out.entry(from.as_str()).or_insert(0) += n;
        }
        out
    }

    pub fn column_totals(&self) -> BTreeMap<&str, u64> {
        let mut out = BTreeMap::new();
        for ((_, to), n) in &self.cells {
            *out.entry(to.as_str()).or_insert(0) += n;
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// Partner-region shares seen from `focus`: share of the focus region's
    /// outflows going to each region, share of its inflows coming from each
    /// region, and the share of both combined.
    pub fn partner_shares(&self, focus: &str) -> Vec<RegionShare> {
        let out_total: u64 = self
            .cells
            .iter()
            .filter(|((f, _), _)| f == focus)
            .map(|(_, n)| n)
            .sum();
        let in_total: u64 = self
            .cells
            .iter()
            .filter(|((_, t), _)| t == focus)
            .map(|(_, n)| n)
            .sum();
        let ratio = |a: u64, b: u64| (b > 0).then(|| a as f64 / b as f64);
        self.regions()
            .into_iter()
            .map(|r| {
                let out = self.get(focus, r);
                let inn = self.get(r, focus);
                // intra-region flows count once in the combined total
                let (both, both_total) = if r == focus {
                    (out, out_total + in_total - out)
                } else {
                    (out + inn, out_total + in_total - self.get(focus, focus))
                };
                RegionShare {
                    region: r.to_string(),
                    outflow: out,
                    inflow: inn,
                    outflow_share: ratio(out, out_total),
                    inflow_share: ratio(inn, in_total),
                    combined_share: ratio(both, both_total),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionShare {
    pub region: String,
    pub outflow: u64,
    pub inflow: u64,
    pub outflow_share: Option<f64>,
    pub inflow_share: Option<f64>,
    pub combined_share: Option<f64>,
}

/// Maps each researcher's events to regions (MENA kept as its own region)
/// and counts each researcher once per ordered region pair.
pub fn regional_flow_matrix<'a, I>(
    researchers: I,
    registry: &CountryRegistry,
) -> Result<RegionalFlowMatrix>
where
    I: IntoIterator<Item = &'a [MobilityEvent]>,
{
    let mut m = RegionalFlowMatrix::default();
    for events in researchers {
        let mut pairs = BTreeSet::new();
        for e in events {
            pairs.insert((registry.region_of(&e.from)?, registry.region_of(&e.to)?));
        }
        for (a, b) in pairs {
            *m.cells.entry((a.to_string(), b.to_string())).or_insert(0) += 1;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(from: &str, to: &str) -> Vec<MobilityEvent> {
        vec![MobilityEvent {
            from: from.into(),
            to: to.into(),
            year: 2012,
        }]
    }

    #[test]
    fn hand_built_events() {
        let reg = CountryRegistry::bundled();
        let r = [ev("EGY", "FRA"), ev("SAU", "DEU"), ev("CHN", "QAT")];
        let m = regional_flow_matrix(r.iter().map(Vec::as_slice), &reg).unwrap();
        assert_eq!(m.get("MENA", "Europe"), 2);
        assert_eq!(m.get("Asia", "MENA"), 1);
        assert_eq!(m.cells.len(), 2);
        assert_eq!(m.row_totals()["MENA"], 2);
        assert_eq!(m.column_totals()["MENA"], 1);
        let shares = m.partner_shares("MENA");
        let eu = shares.iter().find(|s| s.region == "Europe").unwrap();
        assert_eq!(eu.outflow_share, Some(1.0));
        assert_eq!(eu.inflow_share, Some(0.0));
        assert!((eu.combined_share.unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn empty_is_zero() {
        let m = regional_flow_matrix(std::iter::empty(), &CountryRegistry::bundled()).unwrap();
        assert_eq!(m.total(), 0);
        assert_eq!(m.get("MENA", "Europe"), 0);
    }

    #[test]
    fn unknown_country_is_an_error() {
        let r = [ev("EGY", "ZZZ")];
        assert!(
            regional_flow_matrix(r.iter().map(Vec::as_slice), &CountryRegistry::bundled()).is_err()
        );
    }
}
