use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::alluvial::{alluvial_export, AlluvialExport};
use super::format::{fixed, percent_cell, thousands, RATIO_DECIMALS, SHARE_DECIMALS};
use super::gender::{gender_ratio_report, gender_share_table, GenderRatioReport, GenderShareTable};
use super::profiles::{country_profiles, researcher_countries, CountryProfile};
use super::pyramid::{population_pyramid, PopulationPyramid};
use super::relations::{mena_relation_shares, top_partners, MenaRelationShare, TopPartners};
use super::shares::{mobility_shares, ShareTable};
use crate::corpus::{CountryRegistry, PublicationRecord, MENA_REGION};
use crate::demography::ResearcherDemographics;
use crate::error::{Error, Result};
use crate::mobility::{AffiliationTimeline, MobilityClassification};
use crate::netmetrics::{regional_flow_matrix, CountryGraph, RegionShare, RegionalFlowMatrix};

pub const BUNDLE_FILE: &str = "reports.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Shares,
    Profiles,
    Pyramid,
    Gender,
    MenaShares,
    Alluvial,
    All,
}

impl ReportKind {
    pub const EACH: [ReportKind; 6] = [
        ReportKind::Shares,
        ReportKind::Profiles,
        ReportKind::Pyramid,
        ReportKind::Gender,
        ReportKind::MenaShares,
        ReportKind::Alluvial,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ReportKind::Shares => "shares",
            ReportKind::Profiles => "profiles",
            ReportKind::Pyramid => "pyramid",
            ReportKind::Gender => "gender",
            ReportKind::MenaShares => "mena-shares",
            ReportKind::Alluvial => "alluvial",
            ReportKind::All => "all",
        }
    }

    /// Expands `All` into every concrete report.
    pub fn expand(selection: &[ReportKind]) -> BTreeSet<ReportKind> {
        if selection.is_empty() || selection.contains(&ReportKind::All) {
            Self::EACH.into_iter().collect()
        } else {
            selection.iter().copied().collect()
        }
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::EACH
            .into_iter()
            .chain([ReportKind::All])
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::Config(format!("unknown report {s:?}")))
    }
}

/// Configuration echoed at the top of every report file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub window: String,
    pub age_reference: String,
    pub min_confidence: f64,
    pub disambiguation_threshold: f64,
    pub min_country_count: u64,
    pub alluvial_threshold: u64,
    pub top_k: usize,
}

impl fmt::Display for ReportHeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "# window={} age_reference={} min_confidence={} disambiguation_threshold={} \
             min_country_count={} alluvial_threshold={} top_k={}",
            self.window,
            self.age_reference,
            self.min_confidence,
            self.disambiguation_threshold,
            self.min_country_count,
            self.alluvial_threshold,
            self.top_k
        )
    }
}

/// Everything the reports read. Timelines are the windowed ones; they link
/// researchers to countries.
pub struct IndicatorInputs<'a> {
    pub records: &'a [PublicationRecord],
    pub timelines: &'a [AffiliationTimeline],
    pub classifications: &'a [MobilityClassification],
    pub demographics: &'a [ResearcherDemographics],
    pub collaboration: &'a CountryGraph,
    pub mobility: &'a CountryGraph,
    pub registry: &'a CountryRegistry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionalReport {
    pub matrix: RegionalFlowMatrix,
    /// Partner-region shares seen from the MENA region.
    pub mena_partner_shares: Vec<RegionShare>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub header: ReportHeader,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shares: Option<ShareTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profiles: Option<Vec<CountryProfile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pyramid: Option<PopulationPyramid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gender_ratios: Option<GenderRatioReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gender_shares: Option<GenderShareTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mena_shares: Option<Vec<MenaRelationShare>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regional: Option<RegionalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top_partners: Option<Vec<TopPartners>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alluvial: Option<Vec<AlluvialExport>>,
}

pub fn build_reports(
    inputs: &IndicatorInputs<'_>,
    header: ReportHeader,
    selection: &[ReportKind],
) -> Result<ReportBundle> {
    let kinds = ReportKind::expand(selection);
    let want = |k| kinds.contains(&k);
    let links = researcher_countries(inputs.timelines);
    let mena = inputs.registry.mena_set();
    // MENA countries that appear anywhere in the linked population
    let mena_present: Vec<&str> = {
        let seen: BTreeSet<&str> = links.values().flatten().map(String::as_str).collect();
        mena.iter()
            .map(String::as_str)
            .filter(|c| seen.contains(c))
            .collect()
    };
    let mut b = ReportBundle {
        shares: want(ReportKind::Shares).then(|| mobility_shares(inputs.classifications)),
        profiles: want(ReportKind::Profiles).then(|| {
            country_profiles(
                inputs.classifications,
                &links,
                inputs.records,
                header.min_country_count,
            )
        }),
        pyramid: want(ReportKind::Pyramid)
            .then(|| population_pyramid(inputs.demographics, inputs.classifications, &mena)),
        gender_ratios: want(ReportKind::Gender)
            .then(|| gender_ratio_report(inputs.demographics, inputs.classifications, &links)),
        gender_shares: want(ReportKind::Gender)
            .then(|| gender_share_table(inputs.demographics, &links, inputs.registry)),
        mena_shares: want(ReportKind::MenaShares)
            .then(|| mena_relation_shares(inputs.collaboration, inputs.mobility, inputs.registry)),
        regional: None,
        top_partners: want(ReportKind::Alluvial).then(|| {
            mena_present
                .iter()
                .map(|c| top_partners(inputs.mobility, c, header.top_k))
                .collect()
        }),
        alluvial: want(ReportKind::Alluvial).then(|| {
            mena_present
                .iter()
                .map(|c| {
                    alluvial_export(
                        inputs.demographics,
                        inputs.classifications,
                        &links,
                        c,
                        header.top_k,
                        header.alluvial_threshold,
                    )
                })
                .collect()
        }),
        header,
    };
    if want(ReportKind::MenaShares) {
        let matrix = regional_flow_matrix(
            inputs
                .classifications
                .iter()
                .filter(|c| c.typology.is_directional())
                .map(|c| c.events.as_slice()),
            inputs.registry,
        )?;
        let mena_partner_shares = matrix.partner_shares(MENA_REGION);
        b.regional = Some(RegionalReport {
            matrix,
            mena_partner_shares,
        });
    }
    Ok(b)
}

fn share(v: Option<f64>) -> String {
    percent_cell(v, SHARE_DECIMALS)
}

fn ratio(v: Option<f64>) -> String {
    fixed(v, RATIO_DECIMALS)
}

struct Table {
    name: &'static str,
    columns: &'static [&'static str],
    rows: Vec<Vec<String>>,
    footer: Vec<String>,
}

fn tables(b: &ReportBundle) -> Vec<Table> {
    let mut out = Vec::new();
    if let Some(t) = &b.shares {
        out.push(Table {
            name: "shares",
            columns: &[
                "type",
                "level",
                "researchers",
                "share_pct",
                "mobility_share_pct",
            ],
            rows: t
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.clone(),
                        r.level.to_string(),
                        r.count.to_string(),
                        share(r.total_share),
                        r.subgroup_share
                            .map_or_else(String::new, |s| percent_cell(Some(s), 0)),
                    ]
                })
                .collect(),
            footer: vec![format!("# total researchers {}", thousands(t.total))],
        });
    }
    if let Some(p) = &b.profiles {
        out.push(Table {
            name: "profiles",
            columns: &[
                "country",
                "researchers",
                "publications",
                "pubs_per_researcher",
                "emigrant",
                "immigrant",
                "outgoing_traveller",
                "incoming_traveller",
                "emigrant_pct",
                "immigrant_pct",
                "outgoing_pct",
                "incoming_pct",
                "excluded",
            ],
            rows: p
                .iter()
                .map(|r| {
                    vec![
                        r.country.clone(),
                        r.researchers.to_string(),
                        r.publications.to_string(),
                        ratio(r.pubs_per_researcher),
                        r.emigrant.to_string(),
                        r.immigrant.to_string(),
                        r.outgoing_traveller.to_string(),
                        r.incoming_traveller.to_string(),
                        share(r.emigrant_share),
                        share(r.immigrant_share),
                        share(r.outgoing_share),
                        share(r.incoming_share),
                        r.excluded.to_string(),
                    ]
                })
                .collect(),
            footer: vec![],
        });
    }
    if let Some(p) = &b.pyramid {
        out.push(Table {
            name: "pyramid",
            columns: &["age_bucket", "emigrants", "immigrants"],
            rows: p
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.bucket.label().to_string(),
                        r.emigrants.to_string(),
                        r.immigrants.to_string(),
                    ]
                })
                .collect(),
            footer: vec![format!(
                "# mean academic age: all {} emigrants {} immigrants {}",
                ratio(p.mean_age),
                ratio(p.mean_age_emigrants),
                ratio(p.mean_age_immigrants)
            )],
        });
    }
    if let Some(g) = &b.gender_ratios {
        out.push(Table {
            name: "gender_ratios",
            columns: &[
                "country",
                "male",
                "female",
                "migrant_male",
                "migrant_female",
                "ratio_all",
                "ratio_migrants",
                "ratio_of_ratios",
            ],
            rows: g
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.country.clone(),
                        r.male.to_string(),
                        r.female.to_string(),
                        r.migrant_male.to_string(),
                        r.migrant_female.to_string(),
                        ratio(r.ratio_all),
                        ratio(r.ratio_migrants),
                        ratio(r.ratio_of_ratios),
                    ]
                })
                .collect(),
            footer: vec![format!(
                "# mean ratio all {} ({} countries undefined, excluded); migrants {} ({} undefined, excluded)",
                ratio(g.mean_ratio_all),
                g.undefined_all,
                ratio(g.mean_ratio_migrants),
                g.undefined_migrants
            )],
        });
    }
    if let Some(g) = &b.gender_shares {
        let row = |r: &super::gender::GenderShareRow| {
            vec![
                r.country.clone(),
                r.male.to_string(),
                r.female.to_string(),
                r.unknown.to_string(),
                share(Some(r.male_share)),
                share(Some(r.female_share)),
                share(Some(r.unknown_share)),
            ]
        };
        let mut rows: Vec<Vec<String>> = g.rows.iter().map(row).collect();
        rows.push(row(&g.mena));
        out.push(Table {
            name: "gender_shares",
            columns: &[
                "country",
                "male",
                "female",
                "unknown",
                "male_pct",
                "female_pct",
                "unknown_pct",
            ],
            rows,
            footer: vec![],
        });
    }
    if let Some(m) = &b.mena_shares {
        out.push(Table {
            name: "mena_shares",
            columns: &[
                "country",
                "collaboration_weight",
                "collaboration_mena_weight",
                "collaboration_mena_pct",
                "mobility_weight",
                "mobility_mena_weight",
                "mobility_mena_pct",
            ],
            rows: m
                .iter()
                .map(|r| {
                    vec![
                        r.country.clone(),
                        r.collaboration_weight.to_string(),
                        r.collaboration_mena_weight.to_string(),
                        share(r.collaboration_share),
                        r.mobility_weight.to_string(),
                        r.mobility_mena_weight.to_string(),
                        share(r.mobility_share),
                    ]
                })
                .collect(),
            footer: vec![],
        });
    }
    if let Some(r) = &b.regional {
        out.push(Table {
            name: "regional_flows",
            columns: &["origin_region", "destination_region", "researchers"],
            rows: r
                .matrix
                .cells
                .iter()
                .map(|((a, b), n)| vec![a.clone(), b.clone(), n.to_string()])
                .collect(),
            footer: vec![],
        });
        out.push(Table {
            name: "mena_partner_regions",
            columns: &[
                "region",
                "outflow",
                "inflow",
                "outflow_pct",
                "inflow_pct",
                "combined_pct",
            ],
            rows: r
                .mena_partner_shares
                .iter()
                .map(|s| {
                    vec![
                        s.region.clone(),
                        s.outflow.to_string(),
                        s.inflow.to_string(),
                        share(s.outflow_share),
                        share(s.inflow_share),
                        share(s.combined_share),
                    ]
                })
                .collect(),
            footer: vec![],
        });
    }
    if let Some(t) = &b.top_partners {
        let mut rows = Vec::new();
        for tp in t {
            for (dir, list) in [("origin", &tp.origins), ("destination", &tp.destinations)] {
                for (rank, p) in list.iter().enumerate() {
                    rows.push(vec![
                        tp.country.clone(),
                        dir.to_string(),
                        (rank + 1).to_string(),
                        p.country.clone(),
                        p.count.to_string(),
                    ]);
                }
            }
        }
        out.push(Table {
            name: "top_partners",
            columns: &["country", "direction", "rank", "partner", "researchers"],
            rows,
            footer: vec![],
        });
    }
    if let Some(a) = &b.alluvial {
        let mut rows = Vec::new();
        for e in a.iter().filter(|e| e.included) {
            for r in &e.rows {
                rows.push(vec![
                    e.country.clone(),
                    r.direction.label().to_string(),
                    r.gender.label().to_string(),
                    r.age_bucket.label().to_string(),
                    r.partner_country.clone(),
                    r.count.to_string(),
                ]);
            }
        }
        let skipped = a.iter().filter(|e| !e.included).count();
        out.push(Table {
            name: "alluvial",
            columns: &[
                "country",
                "direction",
                "gender",
                "age_bucket",
                "partner",
                "count",
            ],
            rows,
            footer: vec![format!(
                "# {skipped} countries at or below {} mobile researchers omitted",
                b.header.alluvial_threshold
            )],
        });
    }
    out
}

/// Writes one CSV per report plus the JSON bundle into `dir` and returns the
/// written paths in order.
pub fn write_reports(bundle: &ReportBundle, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for t in tables(bundle) {
        let mut buf = format!("{}\n", bundle.header).into_bytes();
        {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(t.columns)?;
            for r in &t.rows {
                w.write_record(r)?;
            }
            w.flush().map_err(|e| Error::io(t.name, e))?;
        }
        for line in &t.footer {
            buf.extend_from_slice(line.as_bytes());
            buf.push(b'\n');
        }
        let path = dir.join(format!("{}.csv", t.name));
        fs::write(&path, buf).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    let path = dir.join(BUNDLE_FILE);
    let mut json = serde_json::to_string_pretty(bundle)?;
    json.push('\n');
    fs::write(&path, json).map_err(|e| Error::io(&path, e))?;
    written.push(path);
    Ok(written)
}
