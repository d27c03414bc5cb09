//! Author name disambiguation.
//!
//! Mentions are blocked by [`NameKey`] (folded last name + first initial),
//! scored pairwise inside each block with a weighted sum of binary evidence
//! features, and grouped by single linkage over pairs at or above the link
//! threshold. Blocks never merge. Mentions without enough evidence stay in
//! their own clusters, which favours precision over recall.

mod block;
mod cluster;
mod eval;
pub mod names;
mod score;
mod validate;

pub use block::{block_mentions, build_blocks, Block, MentionContext, NameKey};
pub use cluster::{
    assignment_map, cluster_block, disambiguate, read_assignments, write_assignments, AuthorCluster,
};
pub use eval::{pairwise_scores, PairwiseScores};
pub use score::{score_pair, DisambigConfig, PairFeatures, ScoreWeights, DEFAULT_THRESHOLD};
pub use validate::{
    read_reference, validate_against_reference, ReferenceIdentity, ValidationReport,
};
