use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::names::{first_initial, fold_name, full_first_name};
use crate::corpus::{AuthorMention, MentionRef, PublicationRecord};

/// Blocking key: folded last name plus folded first initial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NameKey {
    pub normalized_last: String,
    pub first_initial: char,
}

impl NameKey {
    pub fn new(last_name: &str, first_name: &str) -> Self {
        Self {
            normalized_last: fold_name(last_name),
            first_initial: first_initial(first_name),
        }
    }

    pub fn of(mention: &AuthorMention) -> Self {
        Self::new(&mention.last_name, &mention.first_name)
    }
}

impl fmt::Display for NameKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.normalized_last, self.first_initial)
    }
}

/// Evidence available for one author mention when scoring pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct MentionContext {
    pub mention: MentionRef,
    pub key: NameKey,
    pub year: i32,
    /// Folded first name when spelled out.
    pub full_first_name: Option<String>,
    /// Trimmed, lowercased e-mail.
    pub email: Option<String>,
    pub countries: BTreeSet<String>,
    /// Keys of the other authors on the same publication.
    pub coauthor_keys: BTreeSet<NameKey>,
    /// Identifiers of works cited by the publication. The JSON-lines format
    /// does not carry citations, so this is empty unless a caller fills it.
    pub cited_refs: BTreeSet<String>,
}

impl MentionContext {
    pub fn from_record(record: &PublicationRecord, index: usize) -> Self {
        let m = &record.mentions[index];
        let key = NameKey::of(m);
        let coauthor_keys = record
            .mentions
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, other)| NameKey::of(other))
            .collect();
        Self {
            mention: MentionRef::new(&record.pub_id, index),
            key,
            year: record.year,
            full_first_name: full_first_name(&m.first_name),
            email: m
                .email
                .as_deref()
                .map(|e| e.trim().to_lowercase())
                .filter(|e| !e.is_empty()),
            countries: m.countries.clone(),
            coauthor_keys,
            cited_refs: BTreeSet::new(),
        }
    }
}

/// All mentions sharing one [`NameKey`].
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub key: NameKey,
    pub mentions: Vec<MentionContext>,
}

/// Partitions every mention by name key. Mentions within a block are listed
/// in corpus order.
pub fn block_mentions(records: &[PublicationRecord]) -> BTreeMap<NameKey, Vec<MentionRef>> {
    let mut blocks: BTreeMap<NameKey, Vec<MentionRef>> = BTreeMap::new();
    for r in records {
        for (i, m) in r.mentions.iter().enumerate() {
            blocks
                .entry(NameKey::of(m))
                .or_default()
                .push(MentionRef::new(&r.pub_id, i));
        }
    }
    blocks
}

/// Like [`block_mentions`] but with full scoring context per mention.
pub fn build_blocks(records: &[PublicationRecord]) -> Vec<Block> {
    let mut blocks: BTreeMap<NameKey, Vec<MentionContext>> = BTreeMap::new();
    for r in records {
        for i in 0..r.mentions.len() {
            let ctx = MentionContext::from_record(r, i);
            blocks.entry(ctx.key.clone()).or_default().push(ctx);
        }
    }
    blocks
        .into_iter()
        .map(|(key, mentions)| Block { key, mentions })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(id: &str, names: &[(&str, &str)]) -> PublicationRecord {
        PublicationRecord::new(
            id,
            2010,
            names
                .iter()
                .map(|(l, f)| AuthorMention::new(l, f, ["MAR"]))
                .collect(),
        )
    }

    #[test]
    fn transliteration_variants_share_a_block() {
        let records = vec![
            rec("p1", &[("El-Ouahi", "J.")]),
            rec("p2", &[("el ouahi", "Jamal")]),
        ];
        let blocks = block_mentions(&records);
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks.values().next().unwrap().len(), 2);
    }

    #[test]
    fn different_initials_split() {
        let records = vec![rec("p1", &[("Smith", "A.")]), rec("p2", &[("Smith", "B.")])];
        assert_eq!(block_mentions(&records).len(), 2);
    }

    #[test]
    fn context_collects_coauthors() {
        let r = rec(
            "p1",
            &[("Smith", "Anna"), ("Haddad", "K."), ("Smith", "A.")],
        );
        let ctx = MentionContext::from_record(&r, 0);
        assert_eq!(ctx.coauthor_keys.len(), 2);
        assert!(ctx.coauthor_keys.contains(&NameKey::new("Haddad", "K")));
        assert_eq!(ctx.full_first_name.as_deref(), Some("anna"));
        assert_eq!(ctx.key.to_string(), "smith_a");
    }
}
