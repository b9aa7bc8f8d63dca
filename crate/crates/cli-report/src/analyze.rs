//! Analysis of one double complex: the five cohomology tables, the lattice
//! invariants of the two inclusion towers, the lemma verdict at every
//! bidegree, the injectivity and surjectivity flags of the natural maps,
//! and the five-way equivalence record.

use std::collections::BTreeSet;
use std::path::Path;

use double_complex_core::{
    DoubleComplex, LatticeInvariants, NaturalMaps, Theory, TheoremEquivalences,
};
use flat_bigc::{DegreeEntry, DimEntry, TheoryTable};
use serde::Serialize;

use crate::render::{push_csv_pairs, push_text_pairs, Diamond, Envelope, Format, VERSION};
use crate::{emit, Failure};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BidegreeFlags {
    pub p: i64,
    pub q: i64,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DegreeFlags {
    pub degree: i64,
    pub injective: bool,
    pub surjective: bool,
}

/// Rank flags of the seven natural map families, keyed the way each family
/// is graded.
#[derive(Clone, Debug, Serialize)]
pub struct MapFlags {
    pub phi_bidegree: Vec<BidegreeFlags>,
    pub phi_total: Vec<DegreeFlags>,
    pub psi_total: Vec<DegreeFlags>,
    pub phi_plus: Vec<BidegreeFlags>,
    pub phi_minus: Vec<BidegreeFlags>,
    pub psi_plus: Vec<BidegreeFlags>,
    pub psi_minus: Vec<BidegreeFlags>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LatticeEntry {
    pub p: i64,
    pub q: i64,
    #[serde(flatten)]
    pub invariants: LatticeInvariants,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LemmaEntry {
    pub p: i64,
    pub q: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub support: Vec<DimEntry>,
    pub tables: Vec<TheoryTable>,
    pub de_rham: Vec<DegreeEntry>,
    pub lattice: Vec<LatticeEntry>,
    pub lemma: Vec<LemmaEntry>,
    pub lemma_everywhere: bool,
    pub maps: MapFlags,
    pub equivalences: TheoremEquivalences,
    pub equivalences_consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeConfig {
    pub command: String,
    pub input: String,
    pub output: Option<String>,
    pub format: String,
}

fn map_flags(maps: &NaturalMaps) -> MapFlags {
    let bidegree = |family: &std::collections::BTreeMap<(i64, i64), double_complex_core::MapReport>| {
        family
            .iter()
            .map(|(&(p, q), report)| BidegreeFlags {
                p,
                q,
                injective: report.injective,
                surjective: report.surjective,
            })
            .collect()
    };
    let total = |family: &std::collections::BTreeMap<i64, double_complex_core::MapReport>| {
        family
            .iter()
            .map(|(&degree, report)| DegreeFlags {
                degree,
                injective: report.injective,
                surjective: report.surjective,
            })
            .collect()
    };
    MapFlags {
        phi_bidegree: bidegree(&maps.phi_bidegree),
        phi_total: total(&maps.phi_total),
        psi_total: total(&maps.psi_total),
        phi_plus: bidegree(&maps.phi_plus),
        phi_minus: bidegree(&maps.phi_minus),
        psi_plus: bidegree(&maps.psi_plus),
        psi_minus: bidegree(&maps.psi_minus),
    }
}

/// Computes the full report of a validated complex.
pub fn analyze_complex(complex: &DoubleComplex) -> AnalyzeReport {
    let support: Vec<DimEntry> = complex
        .support()
        .iter()
        .map(|(&(p, q), &dim)| DimEntry { p, q, dim })
        .collect();

    let mut tables = Vec::new();
    for theory in [
        Theory::BottChern,
        Theory::Aeppli,
        Theory::Dprime,
        Theory::Dsecond,
    ] {
        let groups = complex.bigraded_cohomology(theory);
        let entries = complex
            .bidegrees()
            .map(|(p, q)| DimEntry {
                p,
                q,
                dim: groups[&(p, q)].dim(),
            })
            .collect();
        tables.push(TheoryTable { theory, entries });
    }

    let de_rham: Vec<DegreeEntry> = match complex.total_range() {
        Some((lo, hi)) => {
            let groups = complex.de_rham_cohomology();
            (lo..=hi)
                .map(|degree| DegreeEntry {
                    degree,
                    dim: groups.get(&degree).map(|g| g.dim()).unwrap_or(0),
                })
                .collect()
        }
        None => Vec::new(),
    };

    let lattice = complex
        .bidegrees()
        .map(|(p, q)| LatticeEntry {
            p,
            q,
            invariants: complex.lattice_invariants_at(p, q),
        })
        .collect();

    let lemma: Vec<LemmaEntry> = complex
        .bidegrees()
        .map(|(p, q)| LemmaEntry {
            p,
            q,
            holds: complex.ddbar_lemma_at(p, q),
        })
        .collect();
    let lemma_everywhere = lemma.iter().all(|e| e.holds);

    let maps = map_flags(&complex.natural_maps());
    let equivalences = complex.check_theorem_equivalences();
    let equivalences_consistent = equivalences.consistent();

    AnalyzeReport {
        support,
        tables,
        de_rham,
        lattice,
        lemma,
        lemma_everywhere,
        maps,
        equivalences,
        equivalences_consistent,
    }
}

fn hull_of(support: &[DimEntry]) -> BTreeSet<(i64, i64)> {
    support
        .iter()
        .filter(|e| e.dim > 0)
        .map(|e| (e.p, e.q))
        .collect()
}

fn diamond_of(title: &str, hull: &BTreeSet<(i64, i64)>, entries: &[DimEntry]) -> Diamond {
    Diamond {
        title: title.to_string(),
        hull: hull.clone(),
        dims: entries.iter().map(|e| ((e.p, e.q), e.dim)).collect(),
    }
}

fn equivalence_pairs(eq: &TheoremEquivalences, consistent: bool) -> Vec<(&'static str, String)> {
    vec![
        ("lemma_everywhere", eq.lemma_everywhere.to_string()),
        ("bc_matches_row_column", eq.bc_matches_row_column.to_string()),
        (
            "aeppli_matches_row_column",
            eq.aeppli_matches_row_column.to_string(),
        ),
        ("bc_matches_de_rham", eq.bc_matches_de_rham.to_string()),
        (
            "aeppli_matches_de_rham",
            eq.aeppli_matches_de_rham.to_string(),
        ),
        ("consistent", consistent.to_string()),
    ]
}

const LATTICE_COLUMNS: [&str; 12] = [
    "p0", "p_plus", "p_minus", "s_plus", "s_minus", "s0", "u0", "u_plus", "u_minus", "v_plus",
    "v_minus", "v0",
];

fn lattice_row(inv: &LatticeInvariants) -> [usize; 12] {
    [
        inv.p0, inv.p_plus, inv.p_minus, inv.s_plus, inv.s_minus, inv.s0, inv.u0, inv.u_plus,
        inv.u_minus, inv.v_plus, inv.v_minus, inv.v0,
    ]
}

pub fn analyze_csv(config: &AnalyzeConfig, report: &AnalyzeReport) -> String {
    let mut out = String::new();
    push_csv_pairs(
        &mut out,
        &[
            ("version", VERSION.to_string()),
            ("command", config.command.clone()),
            ("input", config.input.clone()),
            ("format", config.format.clone()),
        ],
    );
    let hull = hull_of(&report.support);
    diamond_of("support", &hull, &report.support).push_csv(&mut out);
    for table in &report.tables {
        diamond_of(table.theory.label(), &hull, &table.entries).push_csv(&mut out);
    }
    out.push_str("table,deRham\ndegree,dim\n");
    for entry in &report.de_rham {
        out.push_str(&format!("{},{}\n", entry.degree, entry.dim));
    }
    out.push_str(&format!("table,lattice\np,q,{}\n", LATTICE_COLUMNS.join(",")));
    for entry in &report.lattice {
        let cells: Vec<String> = lattice_row(&entry.invariants)
            .iter()
            .map(|v| v.to_string())
            .collect();
        out.push_str(&format!("{},{},{}\n", entry.p, entry.q, cells.join(",")));
    }
    out.push_str("table,lemma\np,q,holds\n");
    for entry in &report.lemma {
        out.push_str(&format!("{},{},{}\n", entry.p, entry.q, entry.holds));
    }
    out.push_str(&format!("lemma_everywhere,{}\n", report.lemma_everywhere));
    out.push_str("table,maps\nfamily,p,q,degree,injective,surjective\n");
    let bigraded_families = [
        ("phi_bidegree", &report.maps.phi_bidegree),
        ("phi_plus", &report.maps.phi_plus),
        ("phi_minus", &report.maps.phi_minus),
        ("psi_plus", &report.maps.psi_plus),
        ("psi_minus", &report.maps.psi_minus),
    ];
    for (name, entries) in bigraded_families {
        for e in entries {
            out.push_str(&format!(
                "{name},{},{},,{},{}\n",
                e.p, e.q, e.injective, e.surjective
            ));
        }
    }
    for (name, entries) in [
        ("phi_total", &report.maps.phi_total),
        ("psi_total", &report.maps.psi_total),
    ] {
        for e in entries {
            out.push_str(&format!(
                "{name},,,{},{},{}\n",
                e.degree, e.injective, e.surjective
            ));
        }
    }
    out.push_str("table,equivalences\nname,value\n");
    push_csv_pairs(
        &mut out,
        &equivalence_pairs(&report.equivalences, report.equivalences_consistent),
    );
    out
}

pub fn analyze_text(config: &AnalyzeConfig, report: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("bigc {VERSION}\n"));
    push_text_pairs(
        &mut out,
        &[
            ("command", config.command.clone()),
            ("input", config.input.clone()),
            ("format", config.format.clone()),
        ],
    );
    out.push('\n');
    let hull = hull_of(&report.support);
    diamond_of("support", &hull, &report.support).push_text(&mut out);
    out.push('\n');
    for table in &report.tables {
        diamond_of(&format!("theory {}", table.theory.label()), &hull, &table.entries)
            .push_text(&mut out);
        out.push('\n');
    }
    out.push_str("theory deRham\n");
    for entry in &report.de_rham {
        out.push_str(&format!("  degree {}: {}\n", entry.degree, entry.dim));
    }
    out.push('\n');
    out.push_str(&format!("lattice invariants (p q {})\n", LATTICE_COLUMNS.join(" ")));
    for entry in &report.lattice {
        let cells: Vec<String> = lattice_row(&entry.invariants)
            .iter()
            .map(|v| v.to_string())
            .collect();
        out.push_str(&format!("  {} {} {}\n", entry.p, entry.q, cells.join(" ")));
    }
    out.push('\n');
    out.push_str("lemma\n");
    for entry in &report.lemma {
        let verdict = if entry.holds { "holds" } else { "fails" };
        out.push_str(&format!("  ({},{}): {verdict}\n", entry.p, entry.q));
    }
    out.push_str(&format!("  everywhere: {}\n\n", report.lemma_everywhere));
    out.push_str("natural maps\n");
    let flag = |b: bool| if b { "yes" } else { "no" };
    let bigraded_families = [
        ("phi_bidegree", &report.maps.phi_bidegree),
        ("phi_plus", &report.maps.phi_plus),
        ("phi_minus", &report.maps.phi_minus),
        ("psi_plus", &report.maps.psi_plus),
        ("psi_minus", &report.maps.psi_minus),
    ];
    for (name, entries) in bigraded_families {
        for e in entries {
            out.push_str(&format!(
                "  {name} ({},{}): injective={} surjective={}\n",
                e.p,
                e.q,
                flag(e.injective),
                flag(e.surjective)
            ));
        }
    }
    for (name, entries) in [
        ("phi_total", &report.maps.phi_total),
        ("psi_total", &report.maps.psi_total),
    ] {
        for e in entries {
            out.push_str(&format!(
                "  {name} degree {}: injective={} surjective={}\n",
                e.degree,
                flag(e.injective),
                flag(e.surjective)
            ));
        }
    }
    out.push('\n');
    out.push_str("equivalences\n");
    for (name, value) in equivalence_pairs(&report.equivalences, report.equivalences_consistent)
    {
        out.push_str(&format!("  {name}: {value}\n"));
    }
    out
}

/// Reads, validates, analyzes, and renders one complex.
pub fn run(input: &Path, output: Option<&Path>, format: Format) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::parse(format!("could not read {}: {e}", input.display())))?;
    let complex: DoubleComplex = serde_json::from_str(&text)
        .map_err(|e| Failure::parse(format!("{} is not a double complex: {e}", input.display())))?;
    let violations = complex.validate();
    if !violations.is_empty() {
        let listing: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::validation(format!(
            "{} is not a valid double complex:\n  {}",
            input.display(),
            listing.join("\n  ")
        )));
    }
    let config = AnalyzeConfig {
        command: "analyze".to_string(),
        input: input.display().to_string(),
        output: output.map(|p| p.display().to_string()),
        format: format.label().to_string(),
    };
    let report = analyze_complex(&complex);
    let rendered = match format {
        Format::Json => Envelope::new(config, report).to_json(),
        Format::Csv => analyze_csv(&config, &report),
        Format::Text => analyze_text(&config, &report),
    };
    emit(output, &rendered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use double_complex_core::{generate_elementary, ElementaryShape, ZigzagOrientation};

    #[test]
    fn a_dot_report_has_one_class_everywhere_it_can() {
        let dot = generate_elementary(ElementaryShape::Dot { p: 0, q: 0 });
        let report = analyze_complex(&dot);
        for table in &report.tables {
            assert_eq!(table.entries.len(), 1);
            assert_eq!(table.entries[0].dim, 1);
        }
        assert_eq!(report.de_rham, vec![DegreeEntry { degree: 0, dim: 1 }]);
        assert!(report.lemma_everywhere);
        assert!(report.equivalences_consistent);
        assert!(report.equivalences.all().iter().all(|&b| b));
    }

    #[test]
    fn a_zigzag_report_flags_the_lemma_failure() {
        let z = generate_elementary(ElementaryShape::Zigzag {
            p: 0,
            q: 1,
            length: 2,
            orientation: ZigzagOrientation::DprimeFirst,
        });
        let report = analyze_complex(&z);
        let at = report
            .lemma
            .iter()
            .find(|e| (e.p, e.q) == (1, 1))
            .expect("the zigzag supports (1,1)");
        assert!(!at.holds);
        assert!(!report.lemma_everywhere);
        assert!(report.equivalences.all().iter().all(|&b| !b));
        assert!(report.equivalences_consistent);
    }
}
