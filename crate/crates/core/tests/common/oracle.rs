//! Brute-force reference implementations, written from the rule text and
//! textbook definitions rather than from the library code.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use scimob::mobility::{Role, Typology};

/// Countries are bits of a `u8` mask; `names[i]` is bit `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaxonomyVerdict {
    pub typology: Typology,
    pub roles: BTreeMap<String, Role>,
    /// (from, to, year), sorted.
    pub events: Vec<(String, String, i32)>,
}

fn bits(mask: u8) -> impl Iterator<Item = usize> {
    (0..8).filter(move |b| mask & (1 << b) != 0)
}

pub fn taxonomy(entries: &[(i32, u8)], names: &[&str]) -> TaxonomyVerdict {
    let name = |b: usize| names[b].to_string();
    let masks: Vec<u8> = entries.iter().map(|e| e.1).collect();
    let union = masks.iter().fold(0u8, |a, m| a | m);
    let mut roles = BTreeMap::new();

    let typology = if masks.len() < 2 {
        Typology::InsufficientInformation
    } else if union.count_ones() == 1 {
        roles.insert(name(bits(union).next().unwrap()), Role::Home);
        Typology::NotMobile
    } else if masks.iter().all(|m| *m == masks[0]) {
        Typology::TravellerNonDirectional
    } else {
        let origin = masks[0];
        let last = *masks.last().unwrap();
        if origin & last != 0 {
            for c in bits(origin) {
                let travels = masks.iter().any(|m| m & (1 << c) != 0 && m & !origin != 0);
                roles.insert(
                    name(c),
                    if travels {
                        Role::OutgoingTraveller
                    } else {
                        Role::Home
                    },
                );
            }
            for c in bits(union & !origin) {
                roles.insert(name(c), Role::IncomingTraveller);
            }
            Typology::TravellerDirectional
        } else {
            for c in bits(origin) {
                roles.insert(name(c), Role::Emigrant);
            }
            for c in bits(last) {
                roles.insert(name(c), Role::Immigrant);
            }
            Typology::Migrant
        }
    };

    let mut events = Vec::new();
    let mut seen = masks.first().copied().unwrap_or(0);
    for i in 1..masks.len() {
        for c in bits(masks[i] & !seen) {
            for p in bits(masks[i - 1]) {
                events.push((name(p), name(c), entries[i].0));
            }
        }
        seen |= masks[i];
    }
    events.sort();
    TaxonomyVerdict {
        typology,
        roles,
        events,
    }
}

/// Reference measures of a simple undirected graph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphVerdict {
    pub average_degree: f64,
    pub density: Option<f64>,
    pub diameter: Option<u32>,
    pub disconnected: bool,
    pub clustering: f64,
    pub assortativity: Option<f64>,
    /// Per node: (closeness, isolated).
    pub closeness: Vec<(f64, bool)>,
    pub degree: Vec<usize>,
}

const INF: u32 = u32::MAX;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> GraphVerdict {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let degree: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|x| **x).count())
        .collect();
    let m: usize = degree.iter().sum::<usize>() / 2;

    // Floyd-Warshall
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let mut diameter = None;
    let mut disconnected = false;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if d[i][j] == INF {
                disconnected = true;
            } else {
                diameter = Some(diameter.map_or(d[i][j], |x: u32| x.max(d[i][j])));
            }
        }
    }

    let mut clustering = 0.0;
    for i in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&j| adj[i][j]).collect();
        if nb.len() < 2 {
            continue;
        }
        let mut closed = 0;
        let mut possible = 0;
        for x in 0..nb.len() {
            for y in (x + 1)..nb.len() {
                possible += 1;
                if adj[nb[x]][nb[y]] {
                    closed += 1;
                }
            }
        }
        clustering += closed as f64 / possible as f64;
    }
    if n > 0 {
        clustering /= n as f64;
    }

    // Pearson over the list of (deg u, deg v) for both orientations
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if adj[i][j] {
                xs.push(degree[i] as i64);
                ys.push(degree[j] as i64);
            }
        }
    }
    let k = xs.len() as i64;
    let sx: i64 = xs.iter().sum();
    let sy: i64 = ys.iter().sum();
    let sxx: i64 = xs.iter().map(|x| x * x).sum();
    let syy: i64 = ys.iter().map(|y| y * y).sum();
    let sxy: i64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    let var_x = k * sxx - sx * sx;
    let var_y = k * syy - sy * sy;
    let assortativity = (k > 0 && var_x > 0 && var_y > 0)
        .then(|| (k * sxy - sx * sy) as f64 / ((var_x as f64).sqrt() * (var_y as f64).sqrt()));

    let closeness = (0..n)
        .map(|i| {
            let reach: Vec<u32> = (0..n)
                .filter(|&j| j != i && d[i][j] != INF)
                .map(|j| d[i][j])
                .collect();
            if reach.is_empty() {
                (0.0, true)
            } else {
                (
                    reach.len() as f64 / reach.iter().map(|&x| x as f64).sum::<f64>(),
                    false,
                )
            }
        })
        .collect();

    GraphVerdict {
        average_degree: if n == 0 {
            0.0
        } else {
            2.0 * m as f64 / n as f64
        },
        density: (n >= 2).then(|| m as f64 / (n * (n - 1) / 2) as f64),
        diameter,
        disconnected,
        clustering,
        assortativity,
        closeness,
        degree,
    }
}
