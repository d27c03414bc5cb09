use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::graph::{Adjacency, CountryGraph};
use crate::error::{Error, Result};

/// Hop distances from `src`; `None` for unreachable nodes.
fn bfs(adj: &Adjacency<'_>, src: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.names.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued nodes have a distance");
        for &v in &adj.neighbors[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// `m / (n(n-1)/2)`; `None` below two vertices.
pub fn density_from_counts(vertex_count: usize, edge_count: usize) -> Option<f64> {
    if vertex_count < 2 {
        return None;
    }
    let n = vertex_count as f64;
    Some(edge_count as f64 / (n * (n - 1.0) / 2.0))
}

/// Density of the unweighted presence graph.
pub fn density(g: &CountryGraph) -> Option<f64> {
    density_from_counts(g.node_count(), g.edge_count())
}

/// `2m / n`; zero for an empty graph.
pub fn average_degree(g: &CountryGraph) -> f64 {
    if g.node_count() == 0 {
        0.0
    } else {
        2.0 * g.edge_count() as f64 / g.node_count() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diameter {
    /// Longest finite shortest path in hops; `None` without edges.
    pub value: Option<u32>,
    /// Some pair of nodes has no path between them.
    pub disconnected: bool,
}

pub fn diameter(g: &CountryGraph) -> Diameter {
    let adj = g.adjacency();
    let mut best: Option<u32> = None;
    let mut disconnected = false;
    for src in 0..adj.names.len() {
        for d in bfs(&adj, src) {
            match d {
                Some(d) if d > 0 => best = Some(best.map_or(d, |b| b.max(d))),
                Some(_) => {}
                None => disconnected = true,
            }
        }
    }
    Diameter {
        value: best,
        disconnected,
    }
}

/// Mean local clustering coefficient; nodes of degree below 2 count as 0.
pub fn clustering_coefficient(g: &CountryGraph) -> f64 {
    let adj = g.adjacency();
    let n = adj.names.len();
    if n == 0 {
        return 0.0;
    }
    let mut marks = vec![false; n];
    let mut total = 0.0;
    for u in 0..n {
        let nb = &adj.neighbors[u];
        let k = nb.len();
        if k < 2 {
            continue;
        }
        for &v in nb {
            marks[v] = true;
        }
        let mut links = 0usize;
        for &v in nb {
            links += adj.neighbors[v].iter().filter(|&&w| marks[w]).count();
        }
        for &v in nb {
            marks[v] = false;
        }
        // each neighbour-neighbour edge was seen from both ends
        let links = links as f64 / 2.0;
        total += links / (k as f64 * (k as f64 - 1.0) / 2.0);
    }
    total / n as f64
}

/// Degree assortativity: Pearson correlation of endpoint degrees with each
/// edge taken in both orientations. `None` without edges or when every
/// endpoint has the same degree.
pub fn assortativity(g: &CountryGraph) -> Option<f64> {
    let adj = g.adjacency();
    let deg: Vec<f64> = adj.neighbors.iter().map(|n| n.len() as f64).collect();
    let m2 = 2.0 * g.edge_count() as f64;
    if m2 == 0.0 {
        return None;
    }
    let (mut sum, mut sum_sq, mut sum_prod) = (0.0, 0.0, 0.0);
    for (u, nb) in adj.neighbors.iter().enumerate() {
        for &v in nb {
            sum += deg[u];
            sum_sq += deg[u] * deg[u];
            sum_prod += deg[u] * deg[v];
        }
    }
    let mean = sum / m2;
    let var = sum_sq / m2 - mean * mean;
    if var <= 1e-12 * mean.max(1.0).powi(2) {
        return None;
    }
    Some((sum_prod / m2 - mean * mean) / var)
}

/// Number of neighbours of `country`.
pub fn degree_centrality(g: &CountryGraph, country: &str) -> Result<usize> {
    let adj = g.adjacency();
    let &i = adj
        .index
        .get(country)
        .ok_or_else(|| Error::UnknownNode(country.to_string()))?;
    Ok(adj.neighbors[i].len())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Closeness {
    pub value: f64,
    /// No neighbours: the value is 0 by convention.
    pub isolated: bool,
}

/// `(n' - 1) / Σ d(country, v)` over the `n'` nodes of the country's
/// connected component.
pub fn closeness_centrality(g: &CountryGraph, country: &str) -> Result<Closeness> {
    let adj = g.adjacency();
    let &i = adj
        .index
        .get(country)
        .ok_or_else(|| Error::UnknownNode(country.to_string()))?;
    let reach: Vec<u32> = bfs(&adj, i).into_iter().flatten().collect();
    let total: u64 = reach.iter().map(|&d| d as u64).sum();
    if reach.len() < 2 {
        return Ok(Closeness {
            value: 0.0,
            isolated: true,
        });
    }
    Ok(Closeness {
        value: (reach.len() - 1) as f64 / total as f64,
        isolated: false,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructuralMeasures {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub density: Option<f64>,
    pub average_degree: f64,
    pub diameter: Option<u32>,
    pub disconnected: bool,
    pub clustering_coefficient: f64,
    pub assortativity: Option<f64>,
}

pub fn structural_measures(g: &CountryGraph) -> StructuralMeasures {
    let d = diameter(g);
    StructuralMeasures {
        vertex_count: g.node_count(),
        edge_count: g.edge_count(),
        density: density(g),
        average_degree: average_degree(g),
        diameter: d.value,
        disconnected: d.disconnected,
        clustering_coefficient: clustering_coefficient(g),
        assortativity: assortativity(g),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeCentrality {
    pub country: String,
    pub degree: usize,
    pub closeness: f64,
    pub isolated: bool,
}

/// Degree and closeness for each listed country present in the graph.
pub fn centrality_table<'a, I>(g: &CountryGraph, countries: I) -> Vec<NodeCentrality>
where
    I: IntoIterator<Item = &'a str>,
{
    countries
        .into_iter()
        .filter(|c| g.nodes().contains(*c))
        .map(|c| {
            let closeness = closeness_centrality(g, c).expect("node present");
            NodeCentrality {
                country: c.to_string(),
                degree: degree_centrality(g, c).expect("node present"),
                closeness: closeness.value,
                isolated: closeness.isolated,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(&str, &str)]) -> CountryGraph {
        let mut g = CountryGraph::new();
        for (a, b) in edges {
            g.add_edge(a, b, 1);
        }
        g
    }

    fn star5() -> CountryGraph {
        graph(&[("C", "L1"), ("C", "L2"), ("C", "L3"), ("C", "L4")])
    }

    fn cycle(n: usize) -> CountryGraph {
        let names: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
        let e: Vec<(&str, &str)> = (0..n)
            .map(|i| (names[i].as_str(), names[(i + 1) % n].as_str()))
            .collect();
        graph(&e)
    }

    fn complete(n: usize) -> CountryGraph {
        let mut g = CountryGraph::new();
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(&format!("N{i}"), &format!("N{j}"), 1);
            }
        }
        g
    }

    #[test]
    fn density_examples() {
        assert_eq!(
            format!("{:.2}", density_from_counts(176, 1335).unwrap()),
            "0.09"
        );
        assert_eq!(
            format!("{:.2}", density_from_counts(215, 3124).unwrap()),
            "0.14"
        );
        assert!((density_from_counts(176, 1335).unwrap() - 0.086_688_311_688).abs() < 1e-9);
        assert!((density_from_counts(215, 3124).unwrap() - 0.135_796_566_0).abs() < 1e-9);
        assert_eq!(density(&complete(5)), Some(1.0));
        assert_eq!(density_from_counts(1, 0), None);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(average_degree(&cycle(6)), 2.0);
        assert_eq!(average_degree(&star5()), 1.6);
        assert_eq!(average_degree(&CountryGraph::new()), 0.0);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&graph(&[("A", "B"), ("B", "C")])).value, Some(2));
        assert_eq!(diameter(&complete(5)).value, Some(1));
        let d = diameter(&graph(&[("A", "B"), ("C", "D"), ("D", "E")]));
        assert_eq!(
            d,
            Diameter {
                value: Some(2),
                disconnected: true
            }
        );
        let mut lone = CountryGraph::new();
        lone.add_node("A");
        assert_eq!(diameter(&lone).value, None);
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(
            clustering_coefficient(&graph(&[("A", "B"), ("B", "C"), ("C", "A")])),
            1.0
        );
        assert_eq!(
            clustering_coefficient(&graph(&[("A", "B"), ("B", "C")])),
            0.0
        );
    }

    #[test]
    fn assortativity_examples() {
        assert_eq!(assortativity(&cycle(5)), None);
        assert_eq!(assortativity(&complete(4)), None);
        assert!(assortativity(&star5()).unwrap() < 0.0);
        assert_eq!(assortativity(&CountryGraph::new()), None);
    }

    #[test]
    fn centrality_examples() {
        let g = star5();
        assert_eq!(degree_centrality(&g, "C").unwrap(), 4);
        assert_eq!(closeness_centrality(&g, "C").unwrap().value, 1.0);
        let leaf = closeness_centrality(&g, "L1").unwrap().value;
        assert!((leaf - 4.0 / 7.0).abs() < 1e-12);
        assert!(matches!(
            degree_centrality(&g, "ZZ"),
            Err(Error::UnknownNode(_))
        ));
        let mut g = g;
        g.add_node("ISO");
        assert_eq!(
            closeness_centrality(&g, "ISO").unwrap(),
            Closeness {
                value: 0.0,
                isolated: true
            }
        );
    }

    #[test]
    fn closeness_is_component_local() {
        let g = graph(&[("A", "B"), ("C", "D"), ("D", "E")]);
        assert_eq!(closeness_centrality(&g, "A").unwrap().value, 1.0);
        assert!((closeness_centrality(&g, "C").unwrap().value - 2.0 / 3.0).abs() < 1e-12);
    }
}
