//! The randomized verification suites behind the verify command.
//!
//! The core suite drives generated double complexes through the equivalence
//! theorem, the lattice tower identities, and the natural map implications,
//! and confirms that a deliberately corrupted sign is caught by validation.
//! The geometry suite drives the two torus models through the mode level
//! identities: the component split, reality across opposite modes, the
//! adjoint star conjugation formulas, Laplacian chains, harmonic
//! decompositions, mode vanishing, and the table symmetries. Every case is
//! drawn from a seeded generator, so a run is reproducible from its
//! configuration alone.

use std::collections::BTreeMap;
use std::str::FromStr;

use double_complex_core::{
    generate_elementary, random_complex, scramble_basis, CorpusKind, DoubleComplex,
    ElementaryShape, Theory, Violation,
};
use exact_linalg::{GaussianRational, Matrix};
use flat_bigc::{
    standard_four_torus, standard_two_torus, DeltaKind, DeltaPair, FlatBiGcModel, HodgeForm,
    StarConvention,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::render::VERSION;
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Geometry,
    All,
}

impl Suite {
    pub fn label(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Geometry => "geometry",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "core" => Ok(Suite::Core),
            "geometry" => Ok(Suite::Geometry),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}; expected core, geometry, or all"
            )),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub command: String,
    pub suite: String,
    pub seed: u64,
    pub count: usize,
}

/// One checked property: how many cases ran, what failed, and an optional
/// one line measurement worth reporting even on success.
#[derive(Clone, Debug)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub detail: Option<String>,
}

impl PropertyOutcome {
    fn new(name: &'static str, cases: usize, failures: Vec<String>) -> Self {
        PropertyOutcome {
            name,
            cases,
            failures,
            detail: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn case_count(&self) -> usize {
        self.properties.iter().map(|p| p.cases).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.properties.iter().map(|p| p.failures.len()).sum()
    }

    pub fn ok(&self) -> bool {
        self.failure_count() == 0
    }
}

fn negate_dprime_block(complex: &DoubleComplex, at: (i64, i64)) -> DoubleComplex {
    let mut dprime = BTreeMap::new();
    let mut dsecond = BTreeMap::new();
    for (p, q) in complex.bidegrees() {
        let row = complex.dprime_at(p, q);
        if !row.is_zero() {
            dprime.insert((p, q), if (p, q) == at { -&row } else { row });
        }
        let column = complex.dsecond_at(p, q);
        if !column.is_zero() {
            dsecond.insert((p, q), column);
        }
    }
    DoubleComplex::new(complex.support().clone(), dprime, dsecond)
}

fn core_properties(seed: u64, count: usize) -> Vec<PropertyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut properties = Vec::new();

    let mut failures = Vec::new();
    for case in 0..count {
        let complex = random_complex(&mut rng, CorpusKind::Mixed);
        let verdicts = complex.check_theorem_equivalences();
        if !verdicts.consistent() {
            failures.push(format!("case {case}: verdicts split as {:?}", verdicts.all()));
        }
    }
    properties.push(PropertyOutcome::new(
        "the five equivalence verdicts agree on every generated complex",
        count,
        failures,
    ));

    let mut failures = Vec::new();
    for case in 0..count {
        let complex = random_complex(&mut rng, CorpusKind::WithZigzag);
        let verdicts = complex.check_theorem_equivalences();
        if verdicts.all().iter().any(|&b| b) {
            failures.push(format!(
                "case {case}: a zigzag bearing complex reports {:?}",
                verdicts.all()
            ));
        }
    }
    properties.push(PropertyOutcome::new(
        "a zigzag summand forces all five verdicts false",
        count,
        failures,
    ));

    let mut failures = Vec::new();
    for case in 0..count {
        let complex = random_complex(&mut rng, CorpusKind::ZigzagFree);
        let verdicts = complex.check_theorem_equivalences();
        if verdicts.all().iter().any(|&b| !b) {
            failures.push(format!(
                "case {case}: a zigzag free complex reports {:?}",
                verdicts.all()
            ));
        }
    }
    properties.push(PropertyOutcome::new(
        "a zigzag free sum keeps all five verdicts true",
        count,
        failures,
    ));

    let mut failures = Vec::new();
    for case in 0..count {
        let complex = random_complex(&mut rng, CorpusKind::Mixed);
        for line in complex.lattice_identity_failures() {
            failures.push(format!("case {case}: {line}"));
        }
    }
    properties.push(PropertyOutcome::new(
        "the lattice tower identities hold at every bidegree",
        count,
        failures,
    ));

    let mut failures = Vec::new();
    for case in 0..count {
        let complex = random_complex(&mut rng, CorpusKind::Mixed);
        let maps = complex.natural_maps();
        for line in complex.map_implication_failures(&maps) {
            failures.push(format!("case {case}: {line}"));
        }
    }
    properties.push(PropertyOutcome::new(
        "the natural map implications hold at every degree",
        count,
        failures,
    ));

    let mut failures = Vec::new();
    for case in 0..count {
        let p = rng.random_range(-2..=2);
        let q = rng.random_range(-2..=2);
        let square = generate_elementary(ElementaryShape::Square { p, q });
        let scrambled = scramble_basis(&square, rng.random());
        let corrupted = negate_dprime_block(&scrambled, (p, q + 1));
        let violations = corrupted.validate();
        if violations.is_empty() {
            failures.push(format!("case {case}: the corrupted complex passed validation"));
        } else if !violations
            .iter()
            .any(|v| matches!(v, Violation::Anticommute { .. }))
        {
            failures.push(format!(
                "case {case}: the sign fault surfaced as {violations:?} instead of a broken anticommutator"
            ));
        }
    }
    properties.push(PropertyOutcome::new(
        "a corrupted sign in one differential is caught by validation",
        count,
        failures,
    ));

    properties
}

fn random_mode(rng: &mut ChaCha8Rng, coords: usize, bound: i64, force_nonzero: bool) -> Vec<i64> {
    let mut k: Vec<i64> = (0..coords)
        .map(|_| rng.random_range(-bound..=bound))
        .collect();
    if force_nonzero && k.iter().all(|&x| x == 0) {
        *k.last_mut().expect("a mode has at least one coordinate") = 1;
    }
    k
}

fn split_failure(model: &FlatBiGcModel, k: &[i64]) -> Option<String> {
    let mc = model.mode_complex(k).expect("the mode length fits the model");
    let dim = mc.operator().rows();
    let mut sum = Matrix::zeros(dim, dim);
    for kind in DeltaKind::ALL {
        sum = &sum + mc.delta(kind);
    }
    if &sum != mc.operator() {
        return Some(format!("mode {k:?}: the four components do not sum to the operator"));
    }
    let anti = |a: DeltaKind, b: DeltaKind| {
        &(mc.delta(a) * mc.delta(b)) + &(mc.delta(b) * mc.delta(a))
    };
    for kind in DeltaKind::ALL {
        if !anti(kind, kind).is_zero() {
            return Some(format!("mode {k:?}: {} does not square to zero", kind.label()));
        }
    }
    for (a, b) in [
        (DeltaKind::Plus, DeltaKind::Minus),
        (DeltaKind::Plus, DeltaKind::BarMinus),
        (DeltaKind::BarPlus, DeltaKind::BarMinus),
        (DeltaKind::BarPlus, DeltaKind::Minus),
    ] {
        if !anti(a, b).is_zero() {
            return Some(format!(
                "mode {k:?}: {} and {} fail to anticommute",
                a.label(),
                b.label()
            ));
        }
    }
    let four_term = &anti(DeltaKind::Plus, DeltaKind::BarPlus)
        + &anti(DeltaKind::Minus, DeltaKind::BarMinus);
    if !four_term.is_zero() {
        return Some(format!("mode {k:?}: the mixed four term identity fails"));
    }
    None
}

fn reality_failure(model: &FlatBiGcModel, k: &[i64]) -> Option<String> {
    let mc = model.mode_complex(k).expect("the mode length fits the model");
    let neg: Vec<i64> = k.iter().map(|x| -x).collect();
    let opposite = model.mode_complex(&neg).expect("the mode length fits the model");
    for kind in DeltaKind::ALL {
        if opposite.delta(kind).conj() != *mc.delta(kind.conj()) {
            return Some(format!(
                "mode {k:?}: conjugating {} does not give {} at the opposite mode",
                kind.label(),
                kind.conj().label()
            ));
        }
    }
    None
}

fn chain_failure(model: &FlatBiGcModel, k: &[i64]) -> Option<String> {
    let lap = match model.laplacians(k) {
        Ok(lap) => lap,
        Err(e) => return Some(format!("mode {k:?}: {e}")),
    };
    let two = GaussianRational::from_int(2);
    let four = GaussianRational::from_int(4);
    let expected: [(&str, Matrix); 4] = [
        ("twice the first partial Laplacian", lap.partial_one().scale(&two)),
        ("twice the second partial Laplacian", lap.partial_two().scale(&two)),
        (
            "four times the raising component Laplacian",
            lap.single(DeltaKind::Plus).scale(&four),
        ),
        (
            "four times the lowering component Laplacian",
            lap.single(DeltaKind::Minus).scale(&four),
        ),
    ];
    for (name, rhs) in expected {
        if lap.de_rham() != &rhs {
            return Some(format!("mode {k:?}: the de Rham Laplacian is not {name}"));
        }
    }
    None
}

fn commutation_failure(model: &FlatBiGcModel, form: &HodgeForm, k: &[i64]) -> Option<String> {
    let mc = model.mode_complex(k).expect("the mode length fits the model");
    let numbered = [
        DeltaKind::Plus,
        DeltaKind::Minus,
        DeltaKind::BarMinus,
        DeltaKind::BarPlus,
    ];
    for i in 0..4 {
        for j in (i + 1)..4 {
            let di = mc.delta(numbered[i]);
            let dj = mc.delta(numbered[j]);
            let di_star = form.adjoint(di);
            let dj_star = form.adjoint(dj);
            if !(&(&di_star * dj) + &(dj * &di_star)).is_zero() {
                return Some(format!(
                    "mode {k:?}: the adjoint of {} does not anticommute past {}",
                    numbered[i].label(),
                    numbered[j].label()
                ));
            }
            if !(&(di * &dj_star) + &(&dj_star * di)).is_zero() {
                return Some(format!(
                    "mode {k:?}: {} does not anticommute past the adjoint of {}",
                    numbered[i].label(),
                    numbered[j].label()
                ));
            }
        }
    }
    for pair in DeltaPair::ALL {
        let (first, second) = pair.laplacian_order();
        let a = form.adjoint(mc.delta(first));
        let b = form.adjoint(mc.delta(second));
        if !(&(&a * &b) + &(&b * &a)).is_zero() {
            return Some(format!(
                "mode {k:?}: the starred {} components fail to anticommute",
                pair.label()
            ));
        }
    }
    None
}

fn geometry_properties(seed: u64, count: usize) -> Vec<PropertyOutcome> {
    let two_torus = standard_two_torus();
    let four_torus = standard_four_torus();
    let models: [(&FlatBiGcModel, usize, i64); 2] =
        [(&two_torus, 2, 4), (&four_torus, 4, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut properties = Vec::new();

    let mut failures = Vec::new();
    for (model, coords, bound) in models {
        for _ in 0..count {
            let k = random_mode(&mut rng, coords, bound, false);
            if let Some(line) = split_failure(model, &k) {
                failures.push(format!("{}: {line}", model.label()));
            }
        }
    }
    properties.push(PropertyOutcome::new(
        "the mode operator splits into four anticommuting components",
        2 * count,
        failures,
    ));

    let mut failures = Vec::new();
    for (model, coords, bound) in models {
        for _ in 0..count {
            let k = random_mode(&mut rng, coords, bound, false);
            if let Some(line) = reality_failure(model, &k) {
                failures.push(format!("{}: {line}", model.label()));
            }
        }
    }
    properties.push(PropertyOutcome::new(
        "conjugation carries each component to the opposite mode",
        2 * count,
        failures,
    ));

    let mut failures = Vec::new();
    let mut surviving: Vec<StarConvention> = StarConvention::ALL.to_vec();
    for (model, coords, bound) in models {
        for _ in 0..count {
            let k = random_mode(&mut rng, coords, bound, true);
            match model.check_adjoint_formulas(&k) {
                Ok(report) => {
                    if report.matching().is_empty() {
                        failures.push(format!(
                            "{}: no convention matches at mode {k:?}",
                            model.label()
                        ));
                    }
                    surviving.retain(|c| report.matches(*c));
                }
                Err(e) => failures.push(format!("{}: mode {k:?}: {e}", model.label())),
            }
        }
    }
    let mut convention = PropertyOutcome::new(
        "one star conjugation convention gives the adjoint at every mode",
        2 * count,
        failures,
    );
    if surviving.len() == 1 {
        convention.detail = Some(format!("the surviving convention is {}", surviving[0].label()));
    } else {
        convention.failures.push(format!(
            "{} conventions match every sampled mode",
            surviving.len()
        ));
    }
    properties.push(convention);

    let mut failures = Vec::new();
    for (model, coords, bound) in models {
        for _ in 0..count {
            let k = random_mode(&mut rng, coords, bound, false);
            if let Some(line) = chain_failure(model, &k) {
                failures.push(format!("{}: {line}", model.label()));
            }
        }
    }
    properties.push(PropertyOutcome::new(
        "the Laplacian chain collapses at rates two and four",
        2 * count,
        failures,
    ));

    let mut failures = Vec::new();
    for (model, coords, bound) in models {
        match model.hodge_form() {
            Ok(form) => {
                for _ in 0..count {
                    let k = random_mode(&mut rng, coords, bound, false);
                    if let Some(line) = commutation_failure(model, &form, &k) {
                        failures.push(format!("{}: {line}", model.label()));
                    }
                }
            }
            Err(e) => failures.push(format!("{}: {e}", model.label())),
        }
    }
    properties.push(PropertyOutcome::new(
        "adjoint components anticommute across the split",
        2 * count,
        failures,
    ));

    let mut failures = Vec::new();
    for (model, coords, bound) in models {
        for case in 0..count {
            let k = random_mode(&mut rng, coords, bound, false);
            let pair = DeltaPair::ALL[case % 4];
            let support: Vec<(i64, i64)> = model
                .mode_complex(&k)
                .expect("the mode length fits the model")
                .support()
                .keys()
                .copied()
                .collect();
            for slice in support {
                match model.harmonic_decomposition(&k, pair, slice) {
                    Ok(report) => {
                        if !report.verified
                            || report.kernel_dim != report.harmonic_dim + report.image_dim
                        {
                            failures.push(format!(
                                "{}: mode {k:?} pair {} slice {slice:?} splits badly",
                                model.label(),
                                pair.label()
                            ));
                        }
                    }
                    Err(e) => failures.push(format!(
                        "{}: mode {k:?} pair {} slice {slice:?}: {e}",
                        model.label(),
                        pair.label()
                    )),
                }
            }
        }
    }
    properties.push(PropertyOutcome::new(
        "harmonic pieces split the joint kernel on every slice",
        2 * count,
        failures,
    ));

    let mut failures = Vec::new();
    for (model, radius) in [(&two_torus, 2i64), (&four_torus, 1i64)] {
        match model.torus_cohomology(&Theory::ALL, DeltaPair::PlusMinus, radius) {
            Ok(report) => {
                for contribution in &report.per_mode {
                    if contribution.mode.iter().any(|&x| x != 0) {
                        failures.push(format!(
                            "{}: mode {:?} contributed",
                            model.label(),
                            contribution.mode
                        ));
                    }
                }
                if !report.complete_within_box {
                    failures.push(format!(
                        "{}: the box of radius {radius} is not marked complete",
                        model.label()
                    ));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", model.label())),
        }
    }
    properties.push(PropertyOutcome::new(
        "nonzero modes contribute nothing to the combined tables",
        2,
        failures,
    ));

    let mut failures = Vec::new();
    match four_torus.torus_cohomology(
        &[Theory::Dprime, Theory::Dsecond, Theory::BottChern],
        DeltaPair::PlusMinus,
        0,
    ) {
        Ok(report) => {
            for table in &report.totals {
                for entry in &table.entries {
                    if report.dim(table.theory, -entry.p, -entry.q) != entry.dim {
                        failures.push(format!(
                            "{}: {} breaks duality at ({},{})",
                            four_torus.label(),
                            table.theory.label(),
                            entry.p,
                            entry.q
                        ));
                    }
                }
            }
        }
        Err(e) => failures.push(format!("{}: {e}", four_torus.label())),
    }
    for model in [&two_torus, &four_torus] {
        let plain = model.torus_cohomology(&[Theory::BottChern], DeltaPair::PlusMinus, 0);
        let barred =
            model.torus_cohomology(&[Theory::BottChern], DeltaPair::BarPlusBarMinus, 0);
        match (plain, barred) {
            (Ok(plain), Ok(barred)) => {
                let entry_count = |r: &flat_bigc::TorusReport| {
                    r.totals.first().map(|t| t.entries.len()).unwrap_or(0)
                };
                if entry_count(&plain) != entry_count(&barred) {
                    failures.push(format!(
                        "{}: the plain and barred tables have different support",
                        model.label()
                    ));
                }
                for table in &plain.totals {
                    for entry in &table.entries {
                        if barred.dim(Theory::BottChern, -entry.p, -entry.q) != entry.dim {
                            failures.push(format!(
                                "{}: conjugation symmetry breaks at ({},{})",
                                model.label(),
                                entry.p,
                                entry.q
                            ));
                        }
                    }
                }
            }
            (Err(e), _) | (_, Err(e)) => failures.push(format!("{}: {e}", model.label())),
        }
    }
    properties.push(PropertyOutcome::new(
        "combined tables obey duality and conjugation symmetry",
        3,
        failures,
    ));

    properties
}

/// Runs the requested suite with a seeded generator.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SuiteReport {
    let mut properties = Vec::new();
    if suite == Suite::Core || suite == Suite::All {
        properties.extend(core_properties(seed, count));
    }
    if suite == Suite::Geometry || suite == Suite::All {
        properties.extend(geometry_properties(seed, count));
    }
    SuiteReport { suite, properties }
}

pub fn verify_text(config: &VerifyConfig, report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("bigc {VERSION}\n"));
    out.push_str(&format!(
        "command: verify\nsuite: {}\nseed: {}\ncount: {}\n\n",
        config.suite, config.seed, config.count
    ));
    for property in &report.properties {
        if property.failures.is_empty() {
            out.push_str(&format!("ok {} ({} cases", property.name, property.cases));
            if let Some(detail) = &property.detail {
                out.push_str(&format!("; {detail}"));
            }
            out.push_str(")\n");
        } else {
            out.push_str(&format!(
                "FAIL {} ({} cases, {} failures)\n",
                property.name,
                property.cases,
                property.failures.len()
            ));
            for line in &property.failures {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    out.push_str(&format!(
        "\nsuite {}: {} properties, {} cases, {} failures\n",
        report.suite.label(),
        report.properties.len(),
        report.case_count(),
        report.failure_count()
    ));
    out
}

/// Runs a suite, prints its report, and maps any failure to exit code one.
pub fn run(suite: Suite, seed: u64, count: usize) -> Result<(), Failure> {
    let config = VerifyConfig {
        command: "verify".to_string(),
        suite: suite.label().to_string(),
        seed,
        count,
    };
    let report = run_suite(suite, seed, count);
    print!("{}", verify_text(&config, &report));
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::property(format!(
            "{} of {} cases failed",
            report.failure_count(),
            report.case_count()
        )))
    }
}
