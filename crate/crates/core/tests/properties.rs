mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::oracle;
use proptest::prelude::*;
use scimob::corpus::{
    filter_window, parse_corpus, write_corpus, AuthorMention, CountryRegistry, ParseOptions,
    PublicationRecord, StudyWindow,
};
use scimob::disambig::{disambiguate, DisambigConfig};
use scimob::indicators::{share_table, MobilityCounts};
use scimob::mobility::{classify, AffiliationTimeline, Role, Typology};
use scimob::netmetrics::{
    assortativity, average_degree, build_mobility_network, closeness_centrality,
    clustering_coefficient, density, diameter, read_edge_list, regional_flow_matrix,
    write_edge_list, CountryGraph,
};

const NAMES: [&str; 5] = ["EGY", "FRA", "USA", "JOR", "CHN"];
const CODES: [&str; 8] = ["EGY", "FRA", "USA", "JOR", "CHN", "MAR", "DEU", "SAU"];

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

fn mask_entries() -> impl Strategy<Value = Vec<(i32, u8)>> {
    prop::collection::vec((2008..=2017i32, 1u8..32), 0..8).prop_map(|mut v| {
        v.sort_by_key(|e| e.0);
        v
    })
}

fn timeline(entries: &[(i32, u8)], names: &[&str]) -> AffiliationTimeline {
    AffiliationTimeline::from_entries(
        "r",
        entries.iter().enumerate().map(|(i, &(year, mask))| {
            let set: BTreeSet<String> = (0..names.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| names[b].to_string())
                .collect();
            (year, format!("W{i:03}"), set)
        }),
    )
}

fn mention() -> impl Strategy<Value = AuthorMention> {
    (
        "[A-Z][a-z]{1,6}",
        "[A-Z][a-z]{0,6}",
        prop::collection::btree_set(prop::sample::select(&CODES[..]), 1..3),
        prop::option::of("[a-z]{1,5}@[a-z]{2,4}\\.org"),
    )
        .prop_map(|(last, first, countries, email)| {
            let m = AuthorMention::new(&last, &first, countries);
            match email {
                Some(e) => m.with_email(&e),
                None => m,
            }
        })
}

fn corpus() -> impl Strategy<Value = Vec<PublicationRecord>> {
    prop::collection::vec(
        (2000..=2020i32, prop::collection::vec(mention(), 1..4)),
        0..25,
    )
    .prop_map(|v| {
        v.into_iter()
            .enumerate()
            .map(|(i, (year, mentions))| PublicationRecord::new(&format!("W{i}"), year, mentions))
            .collect()
    })
}

proptest! {
    #[test]
    fn corpus_round_trips_through_json_lines(records in corpus()) {
        let mut buf = Vec::new();
        write_corpus(&records, &mut buf).unwrap();
        let parsed = parse_corpus(&buf[..], &CountryRegistry::bundled(), ParseOptions { strict: true }).unwrap();
        prop_assert_eq!(parsed.records, records);
        prop_assert_eq!(parsed.stats.rejected_lines, 0);
    }

    #[test]
    fn window_filter_is_idempotent(records in corpus(), a in 2000..=2020i32, len in 0..10i32) {
        let w = StudyWindow::new(a, a + len).unwrap();
        let once = filter_window(&records, w);
        prop_assert!(once.iter().all(|r| w.contains(r.year)));
        prop_assert_eq!(filter_window(&once, w), once.clone());
        let kept = records.iter().filter(|r| w.contains(r.year)).count();
        prop_assert_eq!(once.len(), kept);
    }

    #[test]
    fn disambiguation_partitions_mentions(records in corpus()) {
        let clusters = disambiguate(&records, &DisambigConfig::default());
        let mentions: usize = records.iter().map(|r| r.mentions.len()).sum();
        let members: usize = clusters.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(members, mentions);
        let distinct: BTreeSet<_> = clusters.iter().flat_map(|c| c.members.iter()).collect();
        prop_assert_eq!(distinct.len(), mentions);
        prop_assert!(clusters.iter().all(|c| !c.members.is_empty()));
        let mut reversed = records.clone();
        reversed.reverse();
        prop_assert_eq!(disambiguate(&reversed, &DisambigConfig::default()), clusters);
    }

    #[test]
    fn share_columns_sum_to_one(c in (0..500u64, 0..500u64, 0..500u64, 0..500u64, 0..500u64)) {
        let counts = MobilityCounts {
            not_mobile: c.0,
            migrant: c.1,
            traveller_directional: c.2,
            traveller_non_directional: c.3,
            insufficient_information: c.4,
        };
        let t = share_table(&counts);
        prop_assert_eq!(t.total, c.0 + c.1 + c.2 + c.3 + c.4);
        prop_assert_eq!(t.empty, t.total == 0);
        if t.total > 0 {
            let s: f64 = t.top_level().map(|r| r.total_share.unwrap()).sum();
            prop_assert!(close(s, 1.0));
        } else {
            prop_assert!(t.rows.iter().all(|r| r.total_share.is_none()));
        }
        if counts.mobile() > 0 {
            let s: f64 = t.sub_rows().map(|r| r.subgroup_share.unwrap()).sum();
            prop_assert!(close(s, 1.0));
        }
        let sub: u64 = t.sub_rows().map(|r| r.count).sum();
        prop_assert_eq!(sub, counts.mobile());
    }

    #[test]
    fn classification_matches_oracle(entries in mask_entries()) {
        let got = classify(&timeline(&entries, &NAMES));
        let want = oracle::taxonomy(&entries, &NAMES);
        prop_assert_eq!(got.typology, want.typology);
        prop_assert_eq!(got.roles, want.roles);
        let mut events: Vec<_> = got.events.iter().map(|e| (e.from.clone(), e.to.clone(), e.year)).collect();
        events.sort();
        prop_assert_eq!(events, want.events);
    }

    #[test]
    fn classification_ignores_country_names(
        entries in mask_entries(),
        perm in Just(NAMES.to_vec()).prop_shuffle(),
    ) {
        let a = classify(&timeline(&entries, &NAMES));
        let b = classify(&timeline(&entries, &perm));
        let rename: BTreeMap<&str, &str> = NAMES.iter().copied().zip(perm.iter().copied()).collect();
        prop_assert_eq!(a.typology, b.typology);
        let mapped: BTreeMap<String, Role> = a.roles.iter().map(|(c, r)| (rename[c.as_str()].to_string(), *r)).collect();
        prop_assert_eq!(mapped, b.roles);
        prop_assert_eq!(a.events.len(), b.events.len());
    }

    #[test]
    fn timeline_order_does_not_depend_on_input_order(
        entries in mask_entries(),
        seed in any::<u64>(),
    ) {
        let t = timeline(&entries, &NAMES);
        let mut shuffled = t.entries.clone();
        let k = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % k);
        shuffled.reverse();
        let u = AffiliationTimeline::from_entries(
            "r",
            shuffled.into_iter().map(|e| (e.year, e.pub_id, e.countries)),
        );
        prop_assert_eq!(&u, &t);
        prop_assert!(t.entries.windows(2).all(|w| w[0].year <= w[1].year));
        prop_assert_eq!(classify(&u), classify(&t));
    }

    #[test]
    fn mobility_is_only_for_multi_country_careers(entries in mask_entries()) {
        let c = classify(&timeline(&entries, &NAMES));
        let countries = entries.iter().fold(0u8, |a, e| a | e.1).count_ones();
        if c.typology.is_mobile() {
            prop_assert!(countries >= 2);
        }
        if c.typology == Typology::NotMobile {
            prop_assert!(c.events.is_empty());
        }
        prop_assert_eq!(c.events.is_empty(), entries.len() < 2 || entries.iter().skip(1).all(|e| {
            let earlier = entries.iter().take_while(|x| !std::ptr::eq(*x, e)).fold(0u8, |a, x| a | x.1);
            e.1 & !earlier == 0
        }));
    }

    #[test]
    fn graph_measures_match_oracle(
        n in 1..10usize,
        pairs in prop::collection::btree_set((0..10usize, 0..10usize), 0..30),
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|(a, b)| a < b && *b < n)
            .collect();
        let mut g = CountryGraph::new();
        for x in &names {
            g.add_node(x);
        }
        for &(a, b) in &edges {
            g.add_edge(&names[a], &names[b], 1);
        }
        let want = oracle::graph(n, &edges);
        prop_assert!(close(average_degree(&g), want.average_degree));
        prop_assert_eq!(density(&g).map(|d| (d * 1e9).round()), want.density.map(|d| (d * 1e9).round()));
        let d = diameter(&g);
        prop_assert_eq!(d.value, want.diameter);
        prop_assert_eq!(d.disconnected, want.disconnected);
        prop_assert!(close(clustering_coefficient(&g), want.clustering));
        match (assortativity(&g), want.assortativity) {
            (Some(a), Some(b)) => prop_assert!(close(a, b)),
            (a, b) => prop_assert_eq!(a, b),
        }
        for (i, x) in names.iter().enumerate() {
            let c = closeness_centrality(&g, x).unwrap();
            prop_assert!(close(c.value, want.closeness[i].0));
            prop_assert_eq!(c.isolated, want.closeness[i].1);
        }
    }

    #[test]
    fn edge_lists_round_trip(
        flows in prop::collection::vec(
            (prop::sample::select(&CODES[..]), prop::sample::select(&CODES[..]), 1..20u64),
            0..20,
        ),
        directed in any::<bool>(),
    ) {
        let mut g = if directed { CountryGraph::new_directed() } else { CountryGraph::new() };
        for (a, b, w) in &flows {
            if a == b {
                continue;
            }
            if directed {
                g.add_flow(a, b, *w);
            } else {
                g.add_edge(a, b, *w);
            }
        }
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(&buf[..]).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.directed_flows(), g.directed_flows());
        prop_assert_eq!(back.nodes(), g.nodes());
    }

    #[test]
    fn flows_are_conserved(careers in prop::collection::vec(mask_entries(), 0..20)) {
        let registry = CountryRegistry::bundled();
        let classes: Vec<_> = careers.iter().map(|e| classify(&timeline(e, &NAMES))).collect();
        let events: Vec<&[_]> = classes.iter().map(|c| c.events.as_slice()).collect();
        let m = regional_flow_matrix(events.iter().copied(), &registry).unwrap();
        let rows: u64 = m.row_totals().values().sum();
        let cols: u64 = m.column_totals().values().sum();
        prop_assert_eq!(rows, m.total());
        prop_assert_eq!(cols, m.total());

        let g = build_mobility_network(events.iter().copied());
        let flows = g.directed_flows().unwrap();
        let out: u64 = flows.values().sum();
        let undirected: u64 = g.edges().values().sum();
        prop_assert_eq!(out, undirected);
        for ((a, b), w) in g.edges() {
            prop_assert_eq!(*w, g.flow(a, b) + g.flow(b, a));
        }
    }
}
