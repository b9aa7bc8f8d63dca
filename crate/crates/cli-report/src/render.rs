//! Report envelopes and the shared table renderings.
//!
//! Every report carries the tool version and the fully resolved
//! configuration, so the output alone identifies the run that produced it
//! and identical inputs render to identical bytes. Bigraded tables are laid
//! out as diamonds with rows in descending p; the CSV form leaves cells
//! outside the support hull empty rather than writing zeros, while the text
//! form marks them with a dot.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::Serialize;

/// The version stamped into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// How a report is laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn label(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?}; expected json, csv, or text")),
        }
    }
}

/// A report together with the version and configuration that produced it.
#[derive(Serialize)]
pub struct Envelope<C: Serialize, R: Serialize> {
    pub version: String,
    pub config: C,
    pub report: R,
}

impl<C: Serialize, R: Serialize> Envelope<C, R> {
    pub fn new(config: C, report: R) -> Self {
        Envelope {
            version: VERSION.to_string(),
            config,
            report,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("an envelope always serializes");
        text.push('\n');
        text
    }
}

/// One bigraded dimension table plus the hull of bidegrees that carry a
/// space at all. Dimensions default to zero inside the hull; bidegrees
/// outside it have no space and are rendered as absent.
pub struct Diamond {
    pub title: String,
    pub hull: BTreeSet<(i64, i64)>,
    pub dims: BTreeMap<(i64, i64), usize>,
}

impl Diamond {
    fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.hull.iter();
        let &(p0, q0) = it.next()?;
        let (mut p_lo, mut p_hi, mut q_lo, mut q_hi) = (p0, p0, q0, q0);
        for &(p, q) in it {
            p_lo = p_lo.min(p);
            p_hi = p_hi.max(p);
            q_lo = q_lo.min(q);
            q_hi = q_hi.max(q);
        }
        Some((p_lo, p_hi, q_lo, q_hi))
    }

    fn cell(&self, p: i64, q: i64) -> Option<usize> {
        if self.hull.contains(&(p, q)) {
            Some(self.dims.get(&(p, q)).copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Appends the grid in CSV form, one header row of q values and one row
    /// per p in descending order, empty cells outside the hull.
    pub fn push_csv(&self, out: &mut String) {
        out.push_str(&format!("table,{}\n", self.title));
        let Some((p_lo, p_hi, q_lo, q_hi)) = self.bounds() else {
            out.push_str("p\\q\n");
            return;
        };
        out.push_str("p\\q");
        for q in q_lo..=q_hi {
            out.push_str(&format!(",{q}"));
        }
        out.push('\n');
        for p in (p_lo..=p_hi).rev() {
            out.push_str(&p.to_string());
            for q in q_lo..=q_hi {
                out.push(',');
                if let Some(dim) = self.cell(p, q) {
                    out.push_str(&dim.to_string());
                }
            }
            out.push('\n');
        }
    }

    /// Appends the grid as an aligned text diamond, rows in descending p,
    /// dots outside the hull.
    pub fn push_text(&self, out: &mut String) {
        out.push_str(&format!("{}\n", self.title));
        let Some((p_lo, p_hi, q_lo, q_hi)) = self.bounds() else {
            out.push_str("  (empty)\n");
            return;
        };
        let mut width = 3;
        for q in q_lo..=q_hi {
            width = width.max(q.to_string().len());
        }
        for p in p_lo..=p_hi {
            width = width.max(p.to_string().len());
        }
        for dim in self.dims.values() {
            width = width.max(dim.to_string().len());
        }
        let pad = |s: &str| format!(" {s:>width$}");
        let mut header = pad("p\\q");
        for q in q_lo..=q_hi {
            header.push_str(&pad(&q.to_string()));
        }
        out.push_str(&header);
        out.push('\n');
        for p in (p_lo..=p_hi).rev() {
            let mut row = pad(&p.to_string());
            for q in q_lo..=q_hi {
                match self.cell(p, q) {
                    Some(dim) => row.push_str(&pad(&dim.to_string())),
                    None => row.push_str(&pad(".")),
                }
            }
            out.push_str(&row);
            out.push('\n');
        }
    }
}

/// Appends "key,value" CSV rows for a configuration listing.
pub fn push_csv_pairs(out: &mut String, pairs: &[(&str, String)]) {
    for (key, value) in pairs {
        out.push_str(&format!("{key},{value}\n"));
    }
}

/// Appends "key: value" text lines for a configuration listing.
pub fn push_text_pairs(out: &mut String, pairs: &[(&str, String)]) {
    for (key, value) in pairs {
        out.push_str(&format!("{key}: {value}\n"));
    }
}
