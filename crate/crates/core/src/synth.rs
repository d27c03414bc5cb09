//! Planted-population corpus generator.
//!
//! Researchers are drawn with a known typology, gender, first publication
//! year and country trajectory, grouped into small teams that co-publish one
//! paper per shared year. [`PlantedManifest`] is computed from that plan
//! alone, so a pipeline run over the generated records can be checked
//! against it.
//!
//! Two naming regimes:
//! - [`NameMode::Unique`]: every researcher has a distinct surname and an
//!   e-mail on every mention, so identities are recoverable exactly.
//! - [`NameMode::Colliding`]: a share of researchers draw from a skewed
//!   common-surname pool; e-mails and full first names are only sometimes
//!   present.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{write_corpus, AuthorMention, MentionRef, PublicationRecord, StudyWindow};
use crate::demography::{AgeBucket, Gender};
use crate::disambig::ReferenceIdentity;
use crate::error::{Error, Result};
use crate::indicators::MobilityCounts;
use crate::mobility::Typology;

const MENA: &[&str] = &[
    "EGY", "SAU", "IRN", "TUR", "PAK", "MAR", "TUN", "DZA", "JOR", "LBN", "ARE", "QAT", "IRQ",
    "KWT", "OMN",
];
const ELSEWHERE: &[&str] = &[
    "USA", "GBR", "FRA", "DEU", "CAN", "ITA", "ESP", "AUS", "CHN", "IND", "JPN", "MYS", "NLD",
    "SWE", "BRA",
];

const MALE: &[&str] = &[
    "Ahmed", "Mohamed", "Ali", "Omar", "Youssef", "Khaled", "Hassan", "Ibrahim", "Karim", "Tarek",
    "Walid", "Samir", "Reza", "Mehdi", "Amir", "Mehmet", "Emre", "Burak", "Imran", "Bilal",
    "Faisal", "Nasser", "Fahad", "Nabil", "Ziad", "Michael", "David", "Pierre", "Thomas", "Carlos",
];
const FEMALE: &[&str] = &[
    "Fatima", "Aisha", "Maryam", "Leila", "Amina", "Salma", "Huda", "Rania", "Dina", "Nadia",
    "Yasmin", "Hanan", "Sara", "Zahra", "Elif", "Zeynep", "Sana", "Khadija", "Mona", "Reem",
    "Maria", "Anna", "Laura", "Sophie", "Elena",
];
/// Absent from the bundled table or below its confidence floor.
const UNKNOWN: &[&str] = &[
    "Nour",
    "Noor",
    "Jihad",
    "Ihsan",
    "Wafa",
    "Safa",
    "Dominique",
    "Kim",
    "Wei",
    "Sasha",
];

const ONSETS: &[&str] = &[
    "Al", "Ben", "Bou", "El", "Ha", "Ka", "Ma", "Na", "Sa", "Ta", "Za", "Ra", "Da", "Fa", "Ja",
    "Ba", "Ya", "Ga", "La", "Wa",
];
const MIDDLES: &[&str] = &[
    "b", "d", "dd", "h", "hm", "j", "k", "l", "m", "mm", "n", "r", "s", "sh", "t", "z", "z", "y",
];
const CODAS: &[&str] = &[
    "ad", "ani", "ari", "awi", "di", "ef", "ib", "id", "im", "ir", "oud", "oui", "our", "ra", "ri",
    "ti", "un", "ya",
];

const COMMON_SURNAMES: &[&str] = &[
    "Mohamed", "Ahmed", "Ali", "Hassan", "Ibrahim", "Mahmoud", "Khan", "Hussein", "Abdullah",
    "Yilmaz", "Kaya", "Demir", "Saleh", "Hamdan", "Haddad", "Nasser", "Karimi", "Rezaei",
    "Hosseini", "Ahmadi", "Mansour", "Salem", "Youssef", "Aziz", "Rahman", "Malik", "Qureshi",
    "Shah", "Farouk", "Benali", "Bouazza", "Cherif", "Amrani", "Alaoui", "Idrissi", "Tazi",
    "Khalil", "Issa", "Najjar", "Darwish", "Jaber", "Sabbagh", "Awad", "Said", "Zaki", "Fathi",
    "Ghanem", "Habib", "Kamal", "Lotfi", "Moussa", "Nour", "Osman", "Qasim", "Rashid", "Sharif",
    "Taha", "Wahba", "Yassin", "Zidan", "Celik", "Sahin", "Ozturk", "Aydin", "Arslan", "Dogan",
    "Kilic", "Aslan", "Cetin", "Kara", "Koc", "Kurt", "Ozdemir", "Sarhan", "Barakat", "Hijazi",
    "Shami", "Masri", "Tamimi", "Rifai", "Smith", "Martin", "Muller", "Rossi", "Garcia", "Wang",
    "Li", "Zhang", "Kumar", "Singh", "Tanaka", "Silva", "Dubois", "Bernard", "Schmidt", "Brown",
    "Taylor", "Wilson", "Moreau", "Fischer",
];

/// `(country, count)` pairs, largest first.
pub type Ranked = Vec<(String, u64)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NameMode {
    Unique,
    Colliding,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub researchers: usize,
    pub seed: u64,
    pub names: NameMode,
    /// Probability that a mention carries the researcher's e-mail.
    pub email_rate: f64,
    /// Probability that a mention gives only the first initial.
    pub initials_rate: f64,
    /// Colliding mode: share of researchers drawing a common surname.
    pub common_name_share: f64,
    pub window: StudyWindow,
    /// Earliest first-publication year drawn. Pre-window first papers fall
    /// before the window start.
    pub history_from: i32,
    /// Probability that a researcher's origin is a MENA country.
    pub mena_share: f64,
    /// Weights in [`Typology::ALL`] order.
    pub typology_weights: [f64; 5],
    /// Weights for male, female, unknown.
    pub gender_weights: [f64; 3],
    pub team_size: (usize, usize),
}

impl Default for SynthConfig {
    fn default() -> Self {
        Self {
            researchers: 2000,
            seed: 2008,
            names: NameMode::Unique,
            email_rate: 1.0,
            initials_rate: 0.0,
            common_name_share: 0.0,
            window: StudyWindow::default(),
            history_from: 1975,
            mena_share: 0.6,
            typology_weights: [0.45, 0.18, 0.15, 0.1, 0.12],
            gender_weights: [0.55, 0.3, 0.15],
            team_size: (2, 4),
        }
    }
}

impl SynthConfig {
    /// Common surnames, partial e-mail coverage and some initials-only
    /// mentions.
    pub fn realistic() -> Self {
        Self {
            names: NameMode::Colliding,
            email_rate: 0.7,
            initials_rate: 0.05,
            common_name_share: 0.35,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedResearcher {
    pub id: String,
    pub last_name: String,
    pub first_name: String,
    pub email: String,
    pub gender: Gender,
    pub typology: Typology,
    pub origin: String,
    /// Destination of migrants and travellers.
    pub partner: Option<String>,
    pub first_pub_year: i32,
    /// In-window publications as (year, countries), one per year.
    pub entries: Vec<(i32, BTreeSet<String>)>,
    /// First year with a new country, for migrants and directional travellers.
    pub event_year: Option<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedPaper {
    pub pub_id: String,
    pub year: i32,
    /// Researcher index per mention, in mention order.
    pub authors: Vec<usize>,
    pub countries: BTreeSet<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedProfile {
    pub researchers: u64,
    pub publications: u64,
    pub emigrant: u64,
    pub immigrant: u64,
    pub outgoing: u64,
    pub incoming: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedGenderCounts {
    pub male: u64,
    pub female: u64,
    pub migrant_male: u64,
    pub migrant_female: u64,
}

/// Expected indicator values, derived from the plan only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantedManifest {
    pub typology_counts: MobilityCounts,
    pub profiles: BTreeMap<String, PlantedProfile>,
    /// Migrants per age bucket leaving / entering MENA countries.
    pub pyramid: BTreeMap<AgeBucket, (u64, u64)>,
    pub gender: BTreeMap<String, PlantedGenderCounts>,
    /// Per MENA country: ranked (origin, count) and (destination, count).
    pub top_partners: BTreeMap<String, (Ranked, Ranked)>,
    pub ages: BTreeMap<String, u32>,
    pub top_k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticCorpus {
    pub config: SynthConfig,
    pub researchers: Vec<PlantedResearcher>,
    /// In-window papers; pre-window papers are listed in `records` only.
    pub papers: Vec<PlantedPaper>,
    pub records: Vec<PublicationRecord>,
    /// True researcher id of every mention.
    pub truth: BTreeMap<MentionRef, String>,
}

fn pick<'a, R: Rng>(rng: &mut R, items: &[&'a str]) -> &'a str {
    items.choose(rng).expect("non-empty pool")
}

fn weighted<R: Rng>(rng: &mut R, weights: &[f64]) -> usize {
    let total: f64 = weights.iter().sum();
    let mut x = rng.gen::<f64>() * total;
    for (i, w) in weights.iter().enumerate() {
        if x < *w {
            return i;
        }
        x -= w;
    }
    weights.len() - 1
}

fn unique_surnames<R: Rng>(rng: &mut R, n: usize) -> Vec<String> {
    let mut all: Vec<String> = Vec::new();
    for o in ONSETS {
        for m in MIDDLES {
            for c in CODAS {
                all.push(format!("{o}{m}{c}"));
            }
        }
    }
    all.sort();
    all.dedup();
    all.shuffle(rng);
    let base = all.len();
    (0..n)
        .map(|i| {
            if i < base {
                all[i].clone()
            } else {
                // past the syllable space: double-barrelled names
                format!("{}-{}", all[i % base], all[(i / base) % base])
            }
        })
        .collect()
}

fn country<R: Rng>(rng: &mut R, mena_share: f64, not: Option<&str>) -> String {
    loop {
        let pool = if rng.gen::<f64>() < mena_share {
            MENA
        } else {
            ELSEWHERE
        };
        let c = pick(rng, pool);
        if Some(c) != not {
            return c.to_string();
        }
    }
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl SyntheticCorpus {
    pub fn generate(config: &SynthConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let n = config.researchers;
        let surnames = match config.names {
            NameMode::Unique => unique_surnames(&mut rng, n),
            NameMode::Colliding => {
                // common names drawn Zipf-like (rank r with weight 1/r)
                let w: Vec<f64> = (1..=COMMON_SURNAMES.len())
                    .map(|r| 1.0 / r as f64)
                    .collect();
                unique_surnames(&mut rng, n)
                    .into_iter()
                    .map(|u| {
                        if rng.gen::<f64>() < config.common_name_share {
                            COMMON_SURNAMES[weighted(&mut rng, &w)].to_string()
                        } else {
                            u
                        }
                    })
                    .collect()
            }
        };
        let (ws, we) = (config.window.start(), config.window.end());
        let years_in_window: Vec<i32> = (ws..=we).collect();

        let mut researchers = Vec::with_capacity(n);
        let mut teams: Vec<(Vec<usize>, Vec<i32>)> = Vec::new();
        while researchers.len() < n {
            let size = rng
                .gen_range(config.team_size.0..=config.team_size.1.max(config.team_size.0))
                .min(n - researchers.len());
            let span = rng.gen_range(2..=6usize.min(years_in_window.len()).max(2));
            let mut years: Vec<i32> = years_in_window
                .choose_multiple(&mut rng, span.min(years_in_window.len()))
                .copied()
                .collect();
            years.sort_unstable();
            let mut members = Vec::with_capacity(size);
            for _ in 0..size {
                let idx = researchers.len();
                researchers.push(Self::plan_researcher(
                    &mut rng,
                    config,
                    idx,
                    &surnames[idx],
                    &years,
                ));
                members.push(idx);
            }
            teams.push((members, years));
        }

        let mut papers = Vec::new();
        let mut records = Vec::new();
        let mut truth = BTreeMap::new();
        let mention =
            |rng: &mut ChaCha8Rng, r: &PlantedResearcher, countries: &BTreeSet<String>| {
                let first = if rng.gen::<f64>() < config.initials_rate {
                    format!("{}.", &r.first_name[..1])
                } else {
                    r.first_name.clone()
                };
                let mut m =
                    AuthorMention::new(&r.last_name, &first, countries.iter().map(String::as_str));
                if rng.gen::<f64>() < config.email_rate {
                    m = m.with_email(&r.email);
                }
                m
            };
        for (t, (members, years)) in teams.iter().enumerate() {
            for &year in years {
                let authors: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&i| researchers[i].entries.iter().any(|(y, _)| *y == year))
                    .collect();
                if authors.is_empty() {
                    continue;
                }
                let pub_id = format!("W{t:04}-{year}");
                let mut mentions = Vec::new();
                let mut countries = BTreeSet::new();
                for (k, &i) in authors.iter().enumerate() {
                    let r = &researchers[i];
                    let cs = &r
                        .entries
                        .iter()
                        .find(|(y, _)| *y == year)
                        .expect("active")
                        .1;
                    countries.extend(cs.iter().cloned());
                    mentions.push(mention(&mut rng, r, cs));
                    truth.insert(MentionRef::new(&pub_id, k), r.id.clone());
                }
                let mut rec = PublicationRecord::new(&pub_id, year, mentions);
                rec.doi = Some(format!("10.5555/synth.{}", pub_id.to_lowercase()));
                records.push(rec);
                papers.push(PlantedPaper {
                    pub_id,
                    year,
                    authors,
                    countries,
                });
            }
        }
        // Pre-window papers: each researcher's first paper, co-written with
        // team members who were already publishing by then.
        for (members, _) in &teams {
            for &i in members {
                let r = &researchers[i];
                if r.first_pub_year >= r.entries[0].0 {
                    continue;
                }
                let pub_id = format!("H{i:05}");
                let mut authors = vec![i];
                authors.extend(
                    members
                        .iter()
                        .copied()
                        .filter(|&j| j != i && researchers[j].first_pub_year <= r.first_pub_year)
                        .take(2),
                );
                let mut mentions = Vec::new();
                for (k, &j) in authors.iter().enumerate() {
                    let a = &researchers[j];
                    mentions.push(mention(&mut rng, a, &a.entries[0].1));
                    truth.insert(MentionRef::new(&pub_id, k), a.id.clone());
                }
                let mut rec = PublicationRecord::new(&pub_id, r.first_pub_year, mentions);
                rec.doi = Some(format!("10.5555/synth.{}", pub_id.to_lowercase()));
                records.push(rec);
            }
        }
        records.sort_by(|a, b| a.pub_id.cmp(&b.pub_id));
        Self {
            config: config.clone(),
            researchers,
            papers,
            records,
            truth,
        }
    }

    fn plan_researcher(
        rng: &mut ChaCha8Rng,
        config: &SynthConfig,
        idx: usize,
        surname: &str,
        team_years: &[i32],
    ) -> PlantedResearcher {
        let typology = Typology::ALL[weighted(rng, &config.typology_weights)];
        let gender =
            [Gender::Male, Gender::Female, Gender::Unknown][weighted(rng, &config.gender_weights)];
        let first_name = pick(
            rng,
            match gender {
                Gender::Male => MALE,
                Gender::Female => FEMALE,
                Gender::Unknown => UNKNOWN,
            },
        )
        .to_string();
        let origin = country(rng, config.mena_share, None);
        let partner = match typology {
            Typology::NotMobile | Typology::InsufficientInformation => None,
            _ => Some(country(rng, 0.5, Some(&origin))),
        };
        let years: Vec<i32> = if typology == Typology::InsufficientInformation {
            team_years[..1].to_vec()
        } else {
            team_years.to_vec()
        };
        let a = set(&[&origin]);
        let switch = if years.len() > 1 {
            rng.gen_range(1..years.len())
        } else {
            1
        };
        let entries: Vec<(i32, BTreeSet<String>)> = years
            .iter()
            .enumerate()
            .map(|(k, &y)| {
                let b = partner.as_deref().unwrap_or_default();
                let cs = match typology {
                    Typology::NotMobile | Typology::InsufficientInformation => a.clone(),
                    Typology::Migrant if k >= switch => set(&[b]),
                    Typology::TravellerDirectional if k >= switch => set(&[&origin, b]),
                    Typology::TravellerNonDirectional => set(&[&origin, b]),
                    _ => a.clone(),
                };
                (y, cs)
            })
            .collect();
        let event_year = matches!(typology, Typology::Migrant | Typology::TravellerDirectional)
            .then(|| years[switch]);
        let y0 = years[0];
        let ws = config.window.start();
        let first_pub_year = if rng.gen::<f64>() < 0.7 && ws > config.history_from {
            rng.gen_range(config.history_from..ws)
        } else {
            y0
        };
        let id = format!("R{idx:05}");
        let email = format!(
            "{}.{}.{}@synth.example",
            first_name.to_lowercase(),
            surname.to_lowercase().replace('-', ""),
            idx
        );
        PlantedResearcher {
            id,
            last_name: surname.to_string(),
            first_name,
            email,
            gender,
            typology,
            origin,
            partner,
            first_pub_year,
            entries,
            event_year,
        }
    }

    /// One reference identity per researcher, listing the DOIs of their
    /// papers.
    pub fn reference_identities(&self) -> Vec<ReferenceIdentity> {
        let mut pubs: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        let dois: BTreeMap<&str, &str> = self
            .records
            .iter()
            .filter_map(|r| r.doi.as_deref().map(|d| (r.pub_id.as_str(), d)))
            .collect();
        for (m, id) in &self.truth {
            if let Some(d) = dois.get(m.pub_id.as_str()) {
                pubs.entry(id).or_default().push(d.to_string());
            }
        }
        self.researchers
            .iter()
            .map(|r| ReferenceIdentity {
                identity_id: r.id.clone(),
                name: format!("{}, {}", r.last_name, r.first_name),
                email: Some(r.email.clone()),
                publication_ids: pubs.remove(r.id.as_str()).unwrap_or_default(),
            })
            .collect()
    }

    /// Expected indicators for the given study window end and top-k.
    pub fn manifest(&self, top_k: usize) -> PlantedManifest {
        let mena: BTreeSet<&str> = MENA.iter().copied().collect();
        let mut m = PlantedManifest {
            typology_counts: MobilityCounts::default(),
            profiles: BTreeMap::new(),
            pyramid: BTreeMap::new(),
            gender: BTreeMap::new(),
            top_partners: BTreeMap::new(),
            ages: BTreeMap::new(),
            top_k,
        };
        let window_end = self.config.window.end();
        let mut flows: BTreeMap<(String, String), u64> = BTreeMap::new();
        for r in &self.researchers {
            m.typology_counts.add(r.typology, 1);
            let reference = match (r.typology, r.event_year) {
                (Typology::Migrant, Some(y)) => y,
                _ => window_end,
            };
            let age = (reference - r.first_pub_year) as u32;
            m.ages.insert(r.id.clone(), age);
            let linked: BTreeSet<&String> = r.entries.iter().flat_map(|(_, cs)| cs).collect();
            for c in &linked {
                m.profiles.entry(c.to_string()).or_default().researchers += 1;
                let g = m.gender.entry(c.to_string()).or_default();
                let migrant = r.typology == Typology::Migrant;
                match r.gender {
                    Gender::Male => {
                        g.male += 1;
                        g.migrant_male += migrant as u64;
                    }
                    Gender::Female => {
                        g.female += 1;
                        g.migrant_female += migrant as u64;
                    }
                    Gender::Unknown => {}
                }
            }
            let partner = r.partner.clone().unwrap_or_default();
            match r.typology {
                Typology::Migrant => {
                    m.profiles.entry(r.origin.clone()).or_default().emigrant += 1;
                    m.profiles.entry(partner.clone()).or_default().immigrant += 1;
                    let bucket = bucket_of(age);
                    let slot = m.pyramid.entry(bucket).or_default();
                    slot.0 += mena.contains(r.origin.as_str()) as u64;
                    slot.1 += mena.contains(partner.as_str()) as u64;
                }
                Typology::TravellerDirectional => {
                    m.profiles.entry(r.origin.clone()).or_default().outgoing += 1;
                    m.profiles.entry(partner.clone()).or_default().incoming += 1;
                }
                _ => {}
            }
            if matches!(
                r.typology,
                Typology::Migrant | Typology::TravellerDirectional
            ) {
                *flows.entry((r.origin.clone(), partner)).or_default() += 1;
            }
        }
        for p in &self.papers {
            for c in &p.countries {
                m.profiles.entry(c.clone()).or_default().publications += 1;
            }
        }
        for b in [
            AgeBucket::UpTo5,
            AgeBucket::From6To10,
            AgeBucket::From11To15,
            AgeBucket::From16To20,
            AgeBucket::From21,
        ] {
            m.pyramid.entry(b).or_default();
        }
        let present: Vec<String> = m
            .profiles
            .iter()
            .filter(|(c, p)| p.researchers > 0 && mena.contains(c.as_str()))
            .map(|(c, _)| c.clone())
            .collect();
        for c in present {
            let rank = |mut v: Vec<(String, u64)>| {
                v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
                v.truncate(top_k);
                v
            };
            let origins = flows
                .iter()
                .filter(|((_, t), _)| *t == c)
                .map(|((f, _), n)| (f.clone(), *n))
                .collect();
            let dests = flows
                .iter()
                .filter(|((f, _), _)| *f == c)
                .map(|((_, t), n)| (t.clone(), *n))
                .collect();
            m.top_partners.insert(c, (rank(origins), rank(dests)));
        }
        m
    }
}

/// File names written by [`SyntheticCorpus::write_to`].
pub const CORPUS_FILE: &str = "corpus.jsonl";
pub const REFERENCE_FILE: &str = "reference.jsonl";
pub const PLANTED_FILE: &str = "planted.json";

impl SyntheticCorpus {
    /// Writes the records, the reference identities and the planted manifest
    /// into `dir`, creating it if needed.
    pub fn write_to(&self, dir: &Path, top_k: usize) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let create = |name: &str| {
            let p = dir.join(name);
            File::create(&p)
                .map(BufWriter::new)
                .map_err(|e| Error::io(p, e))
        };
        let mut w = create(CORPUS_FILE)?;
        write_corpus(&self.records, &mut w)?;
        w.flush().map_err(|e| Error::io(dir.join(CORPUS_FILE), e))?;
        let mut w = create(REFERENCE_FILE)?;
        for r in self.reference_identities() {
            let line = serde_json::to_string(&r).expect("identity serializes");
            writeln!(w, "{line}").map_err(|e| Error::io(dir.join(REFERENCE_FILE), e))?;
        }
        w.flush()
            .map_err(|e| Error::io(dir.join(REFERENCE_FILE), e))?;
        let mut w = create(PLANTED_FILE)?;
        let json =
            serde_json::to_string_pretty(&self.manifest(top_k)).expect("manifest serializes");
        writeln!(w, "{json}").map_err(|e| Error::io(dir.join(PLANTED_FILE), e))?;
        w.flush().map_err(|e| Error::io(dir.join(PLANTED_FILE), e))
    }
}

fn bucket_of(age: u32) -> AgeBucket {
    match age {
        0..=5 => AgeBucket::UpTo5,
        6..=10 => AgeBucket::From6To10,
        11..=15 => AgeBucket::From11To15,
        16..=20 => AgeBucket::From16To20,
        _ => AgeBucket::From21,
    }
}
