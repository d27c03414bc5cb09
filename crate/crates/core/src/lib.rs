//! Researcher mobility and country-level collaboration analytics.
//!
//! `scimob` turns line-delimited publication metadata into a picture of how
//! researchers move between countries and who they publish with:
//!
//! - [`corpus`]: record parsing, validation, the country/region registry and
//!   study-window filtering.
//! - [`disambig`]: name-key blocking, rule-based pair scoring, single-linkage
//!   clustering, and validation against an external identity registry.
//! - [`demography`]: academic origin, academic age, and gender attribution.
//! - [`mobility`]: affiliation timelines and the mobility typology
//!   (not mobile, migrant, directional and non-directional traveller).
//! - [`netmetrics`]: country-level co-authorship and mobility graphs with
//!   structural and centrality measures.
//! - [`indicators`]: share tables, country profiles, population pyramids,
//!   gender ratios and alluvial flow exports.
//! - [`pipeline`]: staged, cached end-to-end runs driven by a TOML config.
//! - [`synth`]: a planted-population corpus generator used by the tests and
//!   the examples.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example` lists them.

pub mod corpus;
pub mod demography;
pub mod disambig;
pub mod error;
pub mod indicators;
pub mod mobility;
pub mod netmetrics;
pub mod pipeline;
pub mod synth;

pub use error::{Error, Result};
