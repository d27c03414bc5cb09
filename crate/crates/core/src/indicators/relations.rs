use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::corpus::CountryRegistry;
use crate::netmetrics::CountryGraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MenaRelationShare {
    pub country: String,
    pub collaboration_weight: u64,
    pub collaboration_mena_weight: u64,
    /// Undefined when the country has no collaboration edges.
    pub collaboration_share: Option<f64>,
    pub mobility_weight: u64,
    pub mobility_mena_weight: u64,
    pub mobility_share: Option<f64>,
}

/// `(total incident weight, weight incident to MENA partners)` per node.
fn incident(g: &CountryGraph, registry: &CountryRegistry) -> BTreeMap<String, (u64, u64)> {
    let mut out: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    for ((a, b), w) in g.edges() {
        for (me, other) in [(a, b), (b, a)] {
            let e = out.entry(me.clone()).or_default();
            e.0 += w;
            if registry.is_mena(other) {
                e.1 += w;
            }
        }
    }
    out
}

/// For every MENA country in either graph, the share of its edge weight that
/// goes to other MENA countries.
pub fn mena_relation_shares(
    collaboration: &CountryGraph,
    mobility: &CountryGraph,
    registry: &CountryRegistry,
) -> Vec<MenaRelationShare> {
    let collab = incident(collaboration, registry);
    let mob = incident(mobility, registry);
    let countries: std::collections::BTreeSet<&String> = collaboration
        .nodes()
        .iter()
        .chain(mobility.nodes())
        .filter(|c| registry.is_mena(c))
        .collect();
    let share = |(t, m): (u64, u64)| (t > 0).then(|| m as f64 / t as f64);
    countries
        .into_iter()
        .map(|c| {
            let cw = collab.get(c).copied().unwrap_or_default();
            let mw = mob.get(c).copied().unwrap_or_default();
            MenaRelationShare {
                country: c.clone(),
                collaboration_weight: cw.0,
                collaboration_mena_weight: cw.1,
                collaboration_share: share(cw),
                mobility_weight: mw.0,
                mobility_mena_weight: mw.1,
                mobility_share: share(mw),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartnerCount {
    pub country: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopPartners {
    pub country: String,
    /// Countries researchers came from.
    pub origins: Vec<PartnerCount>,
    /// Countries researchers left for.
    pub destinations: Vec<PartnerCount>,
}

pub const DEFAULT_TOP_K: usize = 15;

/// The `k` largest counts, ties broken by ascending country code.
pub fn rank_top_k<'a, I>(counts: I, k: usize) -> Vec<PartnerCount>
where
    I: IntoIterator<Item = (&'a str, u64)>,
{
    let mut v: Vec<(&str, u64)> = counts.into_iter().filter(|(_, n)| *n > 0).collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    v.truncate(k);
    v.into_iter()
        .map(|(c, n)| PartnerCount {
            country: c.to_string(),
            count: n,
        })
        .collect()
}

/// Ranked partners of `country` in a directed mobility graph.
pub fn top_partners(flows: &CountryGraph, country: &str, k: usize) -> TopPartners {
    let (mut origins, mut destinations) = (Vec::new(), Vec::new());
    if let Some(d) = flows.directed_flows() {
        for ((from, to), n) in d {
            if to == country {
                origins.push((from.as_str(), *n));
            }
            if from == country {
                destinations.push((to.as_str(), *n));
            }
        }
    }
    TopPartners {
        country: country.to_string(),
        origins: rank_top_k(origins, k),
        destinations: rank_top_k(destinations, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_mena_and_partial() {
        let reg = CountryRegistry::bundled();
        let mut collab = CountryGraph::new();
        collab.add_edge("EGY", "SAU", 5);
        collab.add_edge("JOR", "SAU", 20);
        collab.add_edge("JOR", "USA", 80);
        let shares = mena_relation_shares(&collab, &CountryGraph::new_directed(), &reg);
        let get = |c: &str| shares.iter().find(|s| s.country == c).unwrap();
        assert_eq!(get("EGY").collaboration_share, Some(1.0));
        assert_eq!(get("JOR").collaboration_share, Some(0.2));
        assert_eq!(get("JOR").mobility_share, None);
        assert!(shares.iter().all(|s| s.country != "USA"));
    }

    #[test]
    fn ranking_and_ties() {
        let mut g = CountryGraph::new_directed();
        g.add_flow("FRA", "EGY", 3);
        g.add_flow("DEU", "EGY", 3);
        g.add_flow("USA", "EGY", 5);
        g.add_flow("EGY", "QAT", 2);
        let t = top_partners(&g, "EGY", 15);
        let names: Vec<&str> = t.origins.iter().map(|p| p.country.as_str()).collect();
        assert_eq!(names, vec!["USA", "DEU", "FRA"]);
        assert_eq!(t.destinations.len(), 1);
        let t = top_partners(&g, "EGY", 2);
        assert_eq!(t.origins[1].country, "DEU");
    }
}
