use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PublicationRecord;
use crate::error::{Error, Result};

/// Inclusive range of publication years under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StudyWindow {
    start: i32,
    end: i32,
}

impl StudyWindow {
    pub fn new(start: i32, end: i32) -> Result<Self> {
        if start > end {
            return Err(Error::Window(format!("start {start} is after end {end}")));
        }
        Ok(Self { start, end })
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    pub fn end(&self) -> i32 {
        self.end
    }

    pub fn contains(&self, year: i32) -> bool {
        self.start <= year && year <= self.end
    }
}

impl Default for StudyWindow {
    /// 2008 to 2017, the first decade with linked author affiliations.
    fn default() -> Self {
        Self {
            start: 2008,
            end: 2017,
        }
    }
}

impl fmt::Display for StudyWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

impl FromStr for StudyWindow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Window(format!("{s:?} is not START:END")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<i32>()
                .map_err(|_| Error::Window(format!("{v:?} is not a year")))
        };
        Self::new(parse(a)?, parse(b)?)
    }
}

impl TryFrom<String> for StudyWindow {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<StudyWindow> for String {
    fn from(w: StudyWindow) -> Self {
        w.to_string()
    }
}

/// Keeps the records whose year lies inside `window`, preserving order.
pub fn filter_window(records: &[PublicationRecord], window: StudyWindow) -> Vec<PublicationRecord> {
    records
        .iter()
        .filter(|r| window.contains(r.year))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_displays() {
        let w: StudyWindow = "2008:2017".parse().unwrap();
        assert_eq!((w.start(), w.end()), (2008, 2017));
        assert_eq!(w.to_string(), "2008:2017");
        assert_eq!(w, StudyWindow::default());
        assert!("2017:2008".parse::<StudyWindow>().is_err());
        assert!("2008".parse::<StudyWindow>().is_err());
        assert!("a:b".parse::<StudyWindow>().is_err());
    }

    #[test]
    fn single_year_window() {
        let w = StudyWindow::new(2012, 2012).unwrap();
        assert!(w.contains(2012));
        assert!(!w.contains(2011) && !w.contains(2013));
    }
}
