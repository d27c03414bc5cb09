//! Parses a JSON-lines corpus, reports what was rejected, and keeps the
//! study window.
//!
//! ```text
//! cargo run --example ingest_corpus -- [CORPUS.jsonl] [--strict]
//! ```
//!
//! Without a path a small inline corpus with a few broken lines is used.

use std::fs::File;
use std::io::{BufReader, Cursor};

use scimob::corpus::{filter_window, parse_corpus, CountryRegistry, ParseOptions, StudyWindow};

const SAMPLE: &str = r#"{"pub_id":"W1","year":2009,"doi":"10.1/a","mentions":[{"last_name":"Haddad","first_name":"Rania","countries":["LBN"]},{"last_name":"Müller","first_name":"Jonas","countries":["DEU"]}]}
{"pub_id":"W2","year":2014,"mentions":[{"last_name":"Haddad","first_name":"R.","email":"rh@aub.example","countries":["FRA","LBN"]}]}
{"pub_id":"W3","year":2003,"mentions":[{"last_name":"Saleh","first_name":"Omar","countries":["EGY"]}]}
{"pub_id":"W4","year":2011,"mentions":[{"last_name":"Nowhere","first_name":"Ann","countries":["XXX"]}]}
{"pub_id":"W5","year":"soon","mentions":[]}
not json at all

{"pub_id":"W1","year":2010,"mentions":[{"last_name":"Dup","first_name":"Id","countries":["USA"]}]}
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let options = ParseOptions {
        strict: args.iter().any(|a| a == "--strict"),
    };
    let registry = CountryRegistry::bundled();
    let parsed = match args.iter().find(|a| !a.starts_with("--")) {
        Some(path) => parse_corpus(BufReader::new(File::open(path)?), &registry, options)?,
        None => parse_corpus(Cursor::new(SAMPLE), &registry, options)?,
    };

    let s = &parsed.stats;
    println!(
        "{} records, {} mentions, years {:?}..={:?}",
        s.records, s.mentions, s.min_year, s.max_year
    );
    println!(
        "rejected: {} lines, {} mentions",
        s.rejected_lines, s.rejected_mentions
    );
    for d in parsed.diagnostics.iter().take(10) {
        match d.mention {
            Some(m) => println!("  line {} mention {}: {}", d.line, m, d.message),
            None => println!("  line {}: {}", d.line, d.message),
        }
    }

    let window = StudyWindow::default();
    let kept = filter_window(&parsed.records, window);
    println!(
        "{} of {} records fall in {}:{}",
        kept.len(),
        parsed.records.len(),
        window.start(),
        window.end()
    );
    for r in kept.iter().take(3) {
        println!("  {}", r.to_json_line());
    }
    Ok(())
}
