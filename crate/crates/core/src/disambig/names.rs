//! Name folding rules used for blocking keys.
//!
//! A name is folded by, in order:
//!
//! 1. compatibility decomposition (NFKD), so `é` becomes `e` + U+0301 and
//!    ligatures such as `ﬁ` split into letters;
//! 2. replacing letters that do not decompose: `ß`→`ss`, `æ`→`ae`, `œ`→`oe`,
//!    `ø`→`o`, `ł`→`l`, `đ`/`ð`→`d`, `þ`→`th`, `ı`→`i`, `ħ`→`h`;
//! 3. dropping combining marks;
//! 4. lowercasing;
//! 5. keeping only alphanumeric characters, which removes hyphens, spaces,
//!    apostrophes, periods and transliteration marks such as `ʿ` and `ʾ`.
//!
//! So `"El-Ouahi"`, `"el ouahi"` and `"ÉL OUAHI"` all fold to `"elouahi"`.

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

pub fn fold_name(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for c in raw.nfkd() {
        // spacing modifier letters (ʿ ʾ ʼ ...) count as alphabetic in Unicode
        if is_combining_mark(c) || ('\u{02B0}'..='\u{02FF}').contains(&c) {
            continue;
        }
        let replaced: Option<&str> = match c {
            'ß' | 'ẞ' => Some("ss"),
            'æ' | 'Æ' => Some("ae"),
            'œ' | 'Œ' => Some("oe"),
            'ø' | 'Ø' => Some("o"),
            'ł' | 'Ł' => Some("l"),
            'đ' | 'Đ' | 'ð' | 'Ð' => Some("d"),
            'þ' | 'Þ' => Some("th"),
            'ı' => Some("i"),
            'ħ' | 'Ħ' => Some("h"),
            _ => None,
        };
        match replaced {
            Some(s) => out.push_str(s),
            None => {
                for lc in c.to_lowercase() {
                    if lc.is_alphanumeric() {
                        out.push(lc);
                    }
                }
            }
        }
    }
    out
}

/// First character of the folded first name, or `'_'` when there is none.
pub fn first_initial(first_name: &str) -> char {
    fold_name(first_name).chars().next().unwrap_or('_')
}

/// Folded first name when it is spelled out, `None` when it is only
/// initials (`"J."`, `"J. M."`, `"J-M"`) or empty.
pub fn full_first_name(first_name: &str) -> Option<String> {
    let spelled_out = first_name
        .split(|c: char| c.is_whitespace() || c == '.' || c == '-')
        .any(|tok| fold_name(tok).chars().count() > 1);
    spelled_out.then(|| fold_name(first_name))
}
