//! Printed-precision helpers shared by every report.

/// `1244858` → `"1,244,858"`.
pub fn thousands(n: u64) -> String {
    let digits = n.to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// A fraction as a percentage: `percent(0.8474, 1)` → `"84.7%"`.
pub fn percent(frac: f64, decimals: usize) -> String {
    format!("{:.*}%", decimals, frac * 100.0)
}

/// Percentage without the sign, `"NA"` when undefined. Used in CSV cells.
pub fn percent_cell(frac: Option<f64>, decimals: usize) -> String {
    frac.map_or_else(|| NA.to_string(), |f| format!("{:.*}", decimals, f * 100.0))
}

/// Fixed decimals, `"NA"` when undefined.
pub fn fixed(value: Option<f64>, decimals: usize) -> String {
    value.map_or_else(|| NA.to_string(), |v| format!("{v:.decimals$}"))
}

/// Marker printed for undefined values.
pub const NA: &str = "NA";

/// Decimals for shares in percent.
pub const SHARE_DECIMALS: usize = 1;
/// Decimals for ratios and means.
pub const RATIO_DECIMALS: usize = 2;
