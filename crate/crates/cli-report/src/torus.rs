//! The torus command: combined cohomology tables of a model over a box of
//! Fourier modes, with the per mode contributions and the completeness
//! verdict for the box.

use std::collections::BTreeSet;
use std::path::Path;

use double_complex_core::Theory;
use flat_bigc::{DeltaPair, FlatBiGcModel, ModelError, TorusReport};
use serde::Serialize;

use crate::render::{push_csv_pairs, push_text_pairs, Diamond, Envelope, Format, VERSION};
use crate::{emit, Failure};

#[derive(Clone, Debug, Serialize)]
pub struct TorusConfig {
    pub command: String,
    pub model: String,
    pub mode_box: i64,
    pub theories: Vec<String>,
    pub pair: String,
    pub output: Option<String>,
    pub format: String,
}

/// Parses a comma separated theory list; bc, aeppli, dprime, dsecond, and
/// derham are the accepted tokens.
pub fn parse_theories(text: &str) -> Result<Vec<Theory>, String> {
    let mut theories = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err("empty theory token in the list".to_string());
        }
        theories.push(token.parse::<Theory>()?);
    }
    Ok(theories)
}

fn hull_of(report: &TorusReport) -> BTreeSet<(i64, i64)> {
    report
        .slice_dims
        .iter()
        .filter(|e| e.dim > 0)
        .map(|e| (e.p, e.q))
        .collect()
}

fn summary_pairs(report: &TorusReport) -> Vec<(&'static str, String)> {
    vec![
        ("modes_contributing", report.per_mode.len().to_string()),
        (
            "nonzero_mode_contribution",
            report.nonzero_mode_contribution.to_string(),
        ),
        (
            "complete_within_box",
            report.complete_within_box.to_string(),
        ),
    ]
}

pub fn torus_csv(config: &TorusConfig, report: &TorusReport) -> String {
    let mut out = String::new();
    push_csv_pairs(
        &mut out,
        &[
            ("version", VERSION.to_string()),
            ("command", config.command.clone()),
            ("model", config.model.clone()),
            ("label", report.label.clone()),
            ("mode_box", config.mode_box.to_string()),
            ("theories", config.theories.join(" ")),
            ("pair", config.pair.clone()),
        ],
    );
    let hull = hull_of(report);
    let slice_dims = report
        .slice_dims
        .iter()
        .map(|e| ((e.p, e.q), e.dim))
        .collect();
    Diamond {
        title: "slices".to_string(),
        hull: hull.clone(),
        dims: slice_dims,
    }
    .push_csv(&mut out);
    for table in &report.totals {
        Diamond {
            title: table.theory.label().to_string(),
            hull: hull.clone(),
            dims: table.entries.iter().map(|e| ((e.p, e.q), e.dim)).collect(),
        }
        .push_csv(&mut out);
    }
    if report.theories.contains(&Theory::DeRham) {
        out.push_str("table,deRham\ndegree,dim\n");
        for entry in &report.de_rham {
            out.push_str(&format!("{},{}\n", entry.degree, entry.dim));
        }
    }
    push_csv_pairs(&mut out, &summary_pairs(report));
    out
}

pub fn torus_text(config: &TorusConfig, report: &TorusReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("bigc {VERSION}\n"));
    push_text_pairs(
        &mut out,
        &[
            ("command", config.command.clone()),
            ("model", config.model.clone()),
            ("label", report.label.clone()),
            ("mode_box", config.mode_box.to_string()),
            ("theories", config.theories.join(",")),
            ("pair", config.pair.clone()),
        ],
    );
    out.push('\n');
    let hull = hull_of(report);
    let slice_dims = report
        .slice_dims
        .iter()
        .map(|e| ((e.p, e.q), e.dim))
        .collect();
    Diamond {
        title: "slices".to_string(),
        hull: hull.clone(),
        dims: slice_dims,
    }
    .push_text(&mut out);
    out.push('\n');
    for table in &report.totals {
        Diamond {
            title: format!("theory {}", table.theory.label()),
            hull: hull.clone(),
            dims: table.entries.iter().map(|e| ((e.p, e.q), e.dim)).collect(),
        }
        .push_text(&mut out);
        out.push('\n');
    }
    if report.theories.contains(&Theory::DeRham) {
        out.push_str("theory deRham\n");
        for entry in &report.de_rham {
            out.push_str(&format!("  degree {}: {}\n", entry.degree, entry.dim));
        }
        out.push('\n');
    }
    push_text_pairs(&mut out, &summary_pairs(report));
    out
}

fn model_failure(error: ModelError) -> Failure {
    match error {
        ModelError::Parse(_) => Failure::parse(error.to_string()),
        other => Failure::validation(other.to_string()),
    }
}

/// Reads a model, folds the requested theories over the mode box, and
/// renders the combined report.
pub fn run(
    model_path: &Path,
    mode_box: i64,
    theories_text: &str,
    pair: DeltaPair,
    output: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(model_path)
        .map_err(|e| Failure::parse(format!("could not read {}: {e}", model_path.display())))?;
    let model = FlatBiGcModel::from_json(&text).map_err(model_failure)?;
    let theories = parse_theories(theories_text).map_err(Failure::parse)?;
    let report = model
        .torus_cohomology(&theories, pair, mode_box)
        .map_err(model_failure)?;
    let config = TorusConfig {
        command: "torus".to_string(),
        model: model_path.display().to_string(),
        mode_box,
        theories: theories.iter().map(|t| t.label().to_string()).collect(),
        pair: pair.label().to_string(),
        output: output.map(|p| p.display().to_string()),
        format: format.label().to_string(),
    };
    let rendered = match format {
        Format::Json => Envelope::new(config, report).to_json(),
        Format::Csv => torus_csv(&config, &report),
        Format::Text => torus_text(&config, &report),
    };
    emit(output, &rendered)
}
