use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

/// Pairwise clustering quality: a pair of mentions is a positive when both
/// carry the same label.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairwiseScores {
    pub predicted_pairs: u64,
    pub true_pairs: u64,
    pub correct_pairs: u64,
    pub precision: f64,
    pub recall: f64,
}

impl PairwiseScores {
    pub fn f1(&self) -> f64 {
        if self.precision + self.recall == 0.0 {
            0.0
        } else {
            2.0 * self.precision * self.recall / (self.precision + self.recall)
        }
    }
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Scores `predicted` against `truth` over the items present in both maps,
/// by counting pairs in the contingency table. With no predicted (or true)
/// pairs the corresponding rate is 1.
pub fn pairwise_scores<K, P, T>(
    predicted: &BTreeMap<K, P>,
    truth: &BTreeMap<K, T>,
) -> PairwiseScores
where
    K: Ord,
    P: Hash + Eq + Clone,
    T: Hash + Eq + Clone,
{
    let mut cells: HashMap<(P, T), u64> = HashMap::new();
    let mut pred_sizes: HashMap<P, u64> = HashMap::new();
    let mut true_sizes: HashMap<T, u64> = HashMap::new();
    for (k, p) in predicted {
        let Some(t) = truth.get(k) else { continue };
        *cells.entry((p.clone(), t.clone())).or_insert(0) += 1;
        *pred_sizes.entry(p.clone()).or_insert(0) += 1;
        *true_sizes.entry(t.clone()).or_insert(0) += 1;
    }
    let correct_pairs: u64 = cells.values().map(|&n| pairs(n)).sum();
    let predicted_pairs: u64 = pred_sizes.values().map(|&n| pairs(n)).sum();
    let true_pairs: u64 = true_sizes.values().map(|&n| pairs(n)).sum();
    let rate = |num: u64, den: u64| {
        if den == 0 {
            1.0
        } else {
            num as f64 / den as f64
        }
    };
    PairwiseScores {
        predicted_pairs,
        true_pairs,
        correct_pairs,
        precision: rate(correct_pairs, predicted_pairs),
        recall: rate(correct_pairs, true_pairs),
    }
}
