use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::corpus::PublicationRecord;
use crate::error::{Error, Result};
use crate::mobility::{MobilityClassification, MobilityEvent};

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Weighted country graph. The undirected view is always present; mobility
/// graphs also carry directed flows whose two directions sum to the
/// undirected weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountryGraph {
    nodes: BTreeSet<String>,
    #[serde(with = "super::pair_map")]
    edges: BTreeMap<(String, String), u64>,
    #[serde(with = "super::pair_map::option", default)]
    directed: Option<BTreeMap<(String, String), u64>>,
}

impl CountryGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn new_directed() -> Self {
        Self {
            directed: Some(BTreeMap::new()),
            ..Self::default()
        }
    }

    pub fn add_node(&mut self, country: &str) {
        self.nodes.insert(country.to_string());
    }

    /// Adds `weight` to the undirected edge. Self-loops and zero weights are
    /// ignored.
    pub fn add_edge(&mut self, a: &str, b: &str, weight: u64) {
        if a == b || weight == 0 {
            return;
        }
        self.add_node(a);
        self.add_node(b);
        *self.edges.entry(ordered(a, b)).or_insert(0) += weight;
    }

    /// Adds a directed flow and the matching undirected weight.
    pub fn add_flow(&mut self, from: &str, to: &str, weight: u64) {
        if from == to || weight == 0 {
            return;
        }
        *self
            .directed
            .get_or_insert_with(BTreeMap::new)
            .entry((from.to_string(), to.to_string()))
            .or_insert(0) += weight;
        self.add_edge(from, to, weight);
    }

    pub fn nodes(&self) -> &BTreeSet<String> {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Undirected edges keyed by `(a, b)` with `a < b`.
    pub fn edges(&self) -> &BTreeMap<(String, String), u64> {
        &self.edges
    }

    pub fn directed_flows(&self) -> Option<&BTreeMap<(String, String), u64>> {
        self.directed.as_ref()
    }

    pub fn weight(&self, a: &str, b: &str) -> u64 {
        self.edges.get(&ordered(a, b)).copied().unwrap_or(0)
    }

    pub fn flow(&self, from: &str, to: &str) -> u64 {
        self.directed
            .as_ref()
            .and_then(|d| d.get(&(from.to_string(), to.to_string())))
            .copied()
            .unwrap_or(0)
    }

    pub(crate) fn adjacency(&self) -> Adjacency<'_> {
        let names: Vec<&str> = self.nodes.iter().map(String::as_str).collect();
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let mut neighbors = vec![Vec::new(); names.len()];
        for (a, b) in self.edges.keys() {
            let (i, j) = (index[a.as_str()], index[b.as_str()]);
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        Adjacency {
            names,
            index,
            neighbors,
        }
    }
}

/// Index-based unweighted adjacency lists of a [`CountryGraph`].
pub(crate) struct Adjacency<'a> {
    pub names: Vec<&'a str>,
    pub index: HashMap<&'a str, usize>,
    pub neighbors: Vec<Vec<usize>>,
}

/// Co-authorship graph: every publication adds 1 to each unordered pair of
/// distinct countries among its mentions (full counting). Countries only
/// enter the graph through an edge.
pub fn build_coauthorship_network(records: &[PublicationRecord]) -> CountryGraph {
    let mut g = CountryGraph::new();
    for r in records {
        let countries: Vec<&str> = r.countries().into_iter().collect();
        for i in 0..countries.len() {
            for j in (i + 1)..countries.len() {
                g.add_edge(countries[i], countries[j], 1);
            }
        }
    }
    g
}

/// Mobility graph from per-researcher event lists. Each researcher adds at
/// most 1 to a given ordered country pair.
pub fn build_mobility_network<'a, I>(researchers: I) -> CountryGraph
where
    I: IntoIterator<Item = &'a [MobilityEvent]>,
{
    let mut g = CountryGraph::new_directed();
    for events in researchers {
        let pairs: BTreeSet<(&str, &str)> = events
            .iter()
            .map(|e| (e.from.as_str(), e.to.as_str()))
            .collect();
        for (from, to) in pairs {
            g.add_flow(from, to, 1);
        }
    }
    g
}

/// Mobility graph over migrants and directional travellers only.
pub fn mobility_network_from(classifications: &[MobilityClassification]) -> CountryGraph {
    build_mobility_network(
        classifications
            .iter()
            .filter(|c| c.typology.is_directional())
            .map(|c| c.events.as_slice()),
    )
}

/// Writes the edge list. Undirected graphs: `country_a, country_b, weight`.
/// Graphs with flows: one row per directed pair with a `direction` column
/// reading `a>b`.
pub fn write_edge_list<W: Write>(g: &CountryGraph, mut out: W) -> Result<()> {
    let io = |e| Error::io("<edge list>", e);
    match g.directed_flows() {
        None => {
            writeln!(out, "country_a\tcountry_b\tweight").map_err(io)?;
            for ((a, b), w) in g.edges() {
                writeln!(out, "{a}\t{b}\t{w}").map_err(io)?;
            }
        }
        Some(flows) => {
            writeln!(out, "country_a\tcountry_b\tweight\tdirection").map_err(io)?;
            for ((a, b), w) in flows {
                writeln!(out, "{a}\t{b}\t{w}\ta>b").map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Reads a graph written by [`write_edge_list`].
pub fn read_edge_list<R: BufRead>(input: R) -> Result<CountryGraph> {
    let mut lines = input.lines().enumerate();
    let header = match lines.next() {
        Some((_, l)) => l.map_err(|e| Error::io("<edge list>", e))?,
        None => return Ok(CountryGraph::new()),
    };
    let directed = header.split('\t').count() == 4;
    let mut g = if directed {
        CountryGraph::new_directed()
    } else {
        CountryGraph::new()
    };
    for (idx, line) in lines {
        let line = line.map_err(|e| Error::io("<edge list>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        let bad = || Error::Malformed {
            line: idx + 1,
            message: format!("bad edge row {line:?}"),
        };
        if f.len() != if directed { 4 } else { 3 } {
            return Err(bad());
        }
        let w: u64 = f[2].parse().map_err(|_| bad())?;
        if directed {
            g.add_flow(f[0], f[1], w);
        } else {
            g.add_edge(f[0], f[1], w);
        }
    }
    Ok(g)
}
