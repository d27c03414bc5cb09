use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::block::{build_blocks, Block, NameKey};
use super::score::{score_pair, DisambigConfig};
use crate::corpus::{MentionRef, PublicationRecord};
use crate::error::{Error, Result};

/// One disambiguated researcher.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorCluster {
    /// Derived from the key and the smallest member, so it does not depend
    /// on input order.
    pub cluster_id: String,
    pub key: NameKey,
    pub members: BTreeSet<MentionRef>,
}

impl AuthorCluster {
    fn from_members(key: NameKey, members: BTreeSet<MentionRef>) -> Self {
        let first = members.iter().next().expect("non-empty cluster");
        let cluster_id = format!("{key}@{}#{}", first.pub_id, first.index);
        Self {
            cluster_id,
            key,
            members,
        }
    }

    /// Distinct publication ids of the cluster.
    pub fn pub_ids(&self) -> BTreeSet<&str> {
        self.members.iter().map(|m| m.pub_id.as_str()).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so the result is independent of pair order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Single-linkage clustering of one block: connected components of the graph
/// whose edges are pairs scoring at least `config.threshold`. Mentions with
/// no qualifying edge stay singletons. Clusters are returned sorted by their
/// smallest member.
pub fn cluster_block(block: &Block, config: &DisambigConfig) -> Vec<AuthorCluster> {
    let n = block.mentions.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if score_pair(&block.mentions[i], &block.mentions[j], &config.weights)
                >= config.threshold
            {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<MentionRef>> = BTreeMap::new();
    for i in 0..n {
        let root = uf.find(i);
        groups
            .entry(root)
            .or_default()
            .insert(block.mentions[i].mention.clone());
    }
    let mut clusters: Vec<AuthorCluster> = groups
        .into_values()
        .map(|members| AuthorCluster::from_members(block.key.clone(), members))
        .collect();
    clusters.sort_by(|a, b| a.members.iter().next().cmp(&b.members.iter().next()));
    clusters
}

/// Blocks every mention and clusters each block. Blocks are processed on
/// scoped threads and the results concatenated in key order.
pub fn disambiguate(records: &[PublicationRecord], config: &DisambigConfig) -> Vec<AuthorCluster> {
    let blocks = build_blocks(records);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(blocks.len().max(1));
    if workers <= 1 || blocks.len() < 64 {
        return blocks
            .iter()
            .flat_map(|b| cluster_block(b, config))
            .collect();
    }
    let chunk = blocks.len().div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = blocks
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .flat_map(|b| cluster_block(b, config))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("clustering thread panicked"))
            .collect()
    })
}

/// Mention → cluster id lookup.
pub fn assignment_map(clusters: &[AuthorCluster]) -> BTreeMap<&MentionRef, &str> {
    clusters
        .iter()
        .flat_map(|c| c.members.iter().map(move |m| (m, c.cluster_id.as_str())))
        .collect()
}

/// Writes the cluster assignment file: tab-separated
/// `pub_id, mention_index, cluster_id`, sorted by mention.
pub fn write_assignments<W: Write>(clusters: &[AuthorCluster], mut out: W) -> Result<()> {
    let io = |e| Error::io("<assignments>", e);
    writeln!(out, "pub_id\tmention_index\tcluster_id").map_err(io)?;
    for (m, id) in assignment_map(clusters) {
        writeln!(out, "{}\t{}\t{}", m.pub_id, m.index, id).map_err(io)?;
    }
    Ok(())
}

/// Reads an assignment file back into clusters; name keys are recomputed
/// from `records`.
pub fn read_assignments<R: BufRead>(
    input: R,
    records: &[PublicationRecord],
) -> Result<Vec<AuthorCluster>> {
    let by_id = crate::corpus::index_by_id(records);
    let mut groups: BTreeMap<String, (NameKey, BTreeSet<MentionRef>)> = BTreeMap::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<assignments>", e))?;
        if idx == 0 || line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| Error::Malformed {
            line: idx + 1,
            message,
        };
        let mut parts = line.split('\t');
        let (Some(pub_id), Some(index), Some(cluster_id), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad("expected 3 tab-separated fields".into()));
        };
        let index: usize = index
            .parse()
            .map_err(|_| bad(format!("bad mention index {index:?}")))?;
        let record = by_id
            .get(pub_id)
            .ok_or_else(|| bad(format!("unknown pub_id {pub_id:?}")))?;
        let mention = record
            .mentions
            .get(index)
            .ok_or_else(|| bad(format!("mention {index} out of range for {pub_id}")))?;
        let key = NameKey::of(mention);
        let entry = groups
            .entry(cluster_id.to_string())
            .or_insert_with(|| (key.clone(), BTreeSet::new()));
        if entry.0 != key {
            return Err(bad(format!("cluster {cluster_id} mixes name keys")));
        }
        entry.1.insert(MentionRef::new(pub_id, index));
    }
    let mut clusters: Vec<AuthorCluster> = groups
        .into_iter()
        .map(|(cluster_id, (key, members))| AuthorCluster {
            cluster_id,
            key,
            members,
        })
        .collect();
    clusters
        .sort_by(|a, b| (&a.key, a.members.iter().next()).cmp(&(&b.key, b.members.iter().next())));
    Ok(clusters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::AuthorMention;

    fn rec(id: &str, year: i32, email: Option<&str>) -> PublicationRecord {
        let mut m = AuthorMention::new("Haddad", "K.", ["JOR"]);
        m.email = email.map(str::to_string);
        PublicationRecord::new(id, year, vec![m])
    }

    #[test]
    fn singleton_block() {
        let records = vec![rec("p1", 2010, None)];
        let clusters = disambiguate(&records, &DisambigConfig::default());
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].cluster_id, "haddad_k@p1#0");
    }

    #[test]
    fn email_chain_links_transitively() {
        let records = vec![
            rec("a", 2010, Some("x@u")),
            rec("b", 2011, Some("x@u")),
            rec("c", 2015, Some("x@u")),
            rec("d", 2012, None),
        ];
        let clusters = disambiguate(&records, &DisambigConfig::default());
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].members.len(), 3);
        assert_eq!(clusters[1].members.len(), 1);
    }

    #[test]
    fn chain_links_pairs_without_direct_evidence() {
        // a-b share an e-mail; b-c share a co-author and country in 2011;
        // a and c share nothing but end up in one cluster
        let co = AuthorMention::new("Lee", "S.", ["USA"]);
        let mut a = rec("a", 2010, Some("x@u"));
        a.mentions[0].countries = ["FRA".to_string()].into();
        let mut b = rec("b", 2011, Some("x@u"));
        b.mentions.push(co.clone());
        let mut c = rec("c", 2011, Some("y@v"));
        c.mentions.push(co);
        let recs = vec![a, b, c];
        let cfg = DisambigConfig::default();
        let blocks = build_blocks(&recs);
        let ctx = &blocks[0].mentions;
        assert_eq!(score_pair(&ctx[0], &ctx[2], &cfg.weights), 0.0);
        let clusters = cluster_block(&blocks[0], &cfg);
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].members.len(), 3);
    }

    #[test]
    fn assignments_round_trip() {
        let records = vec![
            rec("a", 2010, Some("x@u")),
            rec("b", 2011, Some("x@u")),
            rec("c", 2012, None),
        ];
        let clusters = disambiguate(&records, &DisambigConfig::default());
        let mut buf = Vec::new();
        write_assignments(&clusters, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("pub_id\tmention_index\tcluster_id\n"));
        let back = read_assignments(&buf[..], &records).unwrap();
        assert_eq!(back, clusters);
    }
}
