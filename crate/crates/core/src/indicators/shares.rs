use serde::{Deserialize, Serialize};

use super::format::{percent, thousands};
use crate::mobility::{MobilityClassification, Typology};

/// Researcher counts per typology.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobilityCounts {
    pub not_mobile: u64,
    pub migrant: u64,
    pub traveller_directional: u64,
    pub traveller_non_directional: u64,
    pub insufficient_information: u64,
}

impl MobilityCounts {
    pub fn from_classifications(classifications: &[MobilityClassification]) -> Self {
        let mut c = Self::default();
        for x in classifications {
            c.add(x.typology, 1);
        }
        c
    }

    pub fn add(&mut self, typology: Typology, n: u64) {
        match typology {
            Typology::NotMobile => self.not_mobile += n,
            Typology::Migrant => self.migrant += n,
            Typology::TravellerDirectional => self.traveller_directional += n,
            Typology::TravellerNonDirectional => self.traveller_non_directional += n,
            Typology::InsufficientInformation => self.insufficient_information += n,
        }
    }

    pub fn get(&self, typology: Typology) -> u64 {
        match typology {
            Typology::NotMobile => self.not_mobile,
            Typology::Migrant => self.migrant,
            Typology::TravellerDirectional => self.traveller_directional,
            Typology::TravellerNonDirectional => self.traveller_non_directional,
            Typology::InsufficientInformation => self.insufficient_information,
        }
    }

    pub fn mobile(&self) -> u64 {
        self.migrant + self.traveller_directional + self.traveller_non_directional
    }

    pub fn total(&self) -> u64 {
        self.not_mobile + self.mobile() + self.insufficient_information
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShareRow {
    pub label: String,
    /// 0 for top-level rows, 1 for the mobile sub-rows.
    pub level: u8,
    pub count: u64,
    /// Share of all researchers.
    pub total_share: Option<f64>,
    /// Share of mobile researchers; sub-rows only.
    pub subgroup_share: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShareTable {
    pub total: u64,
    pub rows: Vec<ShareRow>,
    /// No researchers: every share is undefined.
    pub empty: bool,
}

pub const MOBILE_LABEL: &str = "mobile";

impl ShareTable {
    pub fn row(&self, label: &str) -> Option<&ShareRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn top_level(&self) -> impl Iterator<Item = &ShareRow> {
        self.rows.iter().filter(|r| r.level == 0)
    }

    pub fn sub_rows(&self) -> impl Iterator<Item = &ShareRow> {
        self.rows.iter().filter(|r| r.level == 1)
    }

    /// Plain-text rendering: total shares at 1 decimal, mobility shares at 0.
    pub fn render(&self) -> String {
        let mut out = String::from("type\tresearchers\tshare\tmobility_share\n");
        for r in &self.rows {
            let indent = if r.level == 1 { "  " } else { "" };
            let share = r.total_share.map(|s| percent(s, 1)).unwrap_or_default();
            let sub = r.subgroup_share.map(|s| percent(s, 0)).unwrap_or_default();
            out.push_str(&format!(
                "{indent}{}\t{}\t{share}\t{sub}\n",
                r.label,
                thousands(r.count)
            ));
        }
        out.push_str(&format!("total\t{}\t\t\n", thousands(self.total)));
        out
    }
}

pub fn share_table(counts: &MobilityCounts) -> ShareTable {
    let total = counts.total();
    let mobile = counts.mobile();
    let frac = |n: u64, d: u64| (d > 0).then(|| n as f64 / d as f64);
    let top = |label: &str, n: u64| ShareRow {
        label: label.to_string(),
        level: 0,
        count: n,
        total_share: frac(n, total),
        subgroup_share: None,
    };
    let sub = |t: Typology| {
        let n = counts.get(t);
        ShareRow {
            label: t.label().to_string(),
            level: 1,
            count: n,
            total_share: frac(n, total),
            subgroup_share: frac(n, mobile),
        }
    };
    ShareTable {
        total,
        rows: vec![
            top(Typology::NotMobile.label(), counts.not_mobile),
            top(MOBILE_LABEL, mobile),
            sub(Typology::Migrant),
            sub(Typology::TravellerDirectional),
            sub(Typology::TravellerNonDirectional),
            top(
                Typology::InsufficientInformation.label(),
                counts.insufficient_information,
            ),
        ],
        empty: total == 0,
    }
}

/// Table of researchers by typology over the given classifications.
pub fn mobility_shares(classifications: &[MobilityClassification]) -> ShareTable {
    share_table(&MobilityCounts::from_classifications(classifications))
}
