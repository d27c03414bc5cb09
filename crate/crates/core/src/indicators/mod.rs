//! Aggregate reports over classified, attributed researchers and the
//! country networks.
//!
//! Every report is available as a typed value, as one CSV file, and as part
//! of a JSON bundle. Shares print at one decimal, ratios at two; the JSON
//! bundle keeps full precision.

mod alluvial;
pub mod format;
mod gender;
mod profiles;
mod pyramid;
mod relations;
mod report;
mod shares;

pub use alluvial::{
    alluvial_export, mobile_researchers, AlluvialExport, AlluvialRow, FlowDirection,
    DEFAULT_ALLUVIAL_THRESHOLD, OTHER_PARTNER,
};
pub use gender::{
    gender_ratio, gender_ratio_report, gender_share_table, GenderRatioReport, GenderRatioRow,
    GenderShareRow, GenderShareTable,
};
pub use profiles::{country_profiles, researcher_countries, CountryProfile, ResearcherCountries};
pub use pyramid::{population_pyramid, PopulationPyramid, PyramidRow};
pub use relations::{
    mena_relation_shares, rank_top_k, top_partners, MenaRelationShare, PartnerCount, TopPartners,
    DEFAULT_TOP_K,
};
pub use report::{
    build_reports, write_reports, IndicatorInputs, RegionalReport, ReportBundle, ReportHeader,
    ReportKind, BUNDLE_FILE,
};
pub use shares::{
    mobility_shares, share_table, MobilityCounts, ShareRow, ShareTable, MOBILE_LABEL,
};
