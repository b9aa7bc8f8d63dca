//! Randomized invariants of the flat torus models: the component split of
//! the mode operator, reality across opposite modes, adjoint involutions,
//! Laplacian self-adjointness, harmonic verdicts, and agreement of the
//! Euler characteristics across all five cohomology theories.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use double_complex_core::{DoubleComplex, Theory};
use exact_linalg::{GaussianRational, Matrix};
use flat_bigc::{
    standard_four_torus, standard_two_torus, DeltaKind, DeltaPair, FlatBiGcModel, HodgeForm,
};
use proptest::prelude::*;

fn t2() -> &'static FlatBiGcModel {
    static MODEL: OnceLock<FlatBiGcModel> = OnceLock::new();
    MODEL.get_or_init(standard_two_torus)
}

fn t4() -> &'static FlatBiGcModel {
    static MODEL: OnceLock<FlatBiGcModel> = OnceLock::new();
    MODEL.get_or_init(standard_four_torus)
}

fn t2_form() -> &'static HodgeForm {
    static FORM: OnceLock<HodgeForm> = OnceLock::new();
    FORM.get_or_init(|| t2().hodge_form().unwrap())
}

fn t4_form() -> &'static HodgeForm {
    static FORM: OnceLock<HodgeForm> = OnceLock::new();
    FORM.get_or_init(|| t4().hodge_form().unwrap())
}

fn mode2() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4..=4i64, 2)
}

fn mode4() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-2..=2i64, 4)
}

fn pairs() -> impl Strategy<Value = DeltaPair> {
    (0usize..4).prop_map(|i| DeltaPair::ALL[i])
}

fn euler_characteristics(complex: &DoubleComplex) -> Vec<i64> {
    let mut out = Vec::new();
    for theory in [Theory::BottChern, Theory::Aeppli, Theory::Dprime, Theory::Dsecond] {
        let chi: i64 = complex
            .bigraded_cohomology(theory)
            .iter()
            .map(|(&(a, b), g)| {
                let sign = if (a + b).rem_euclid(2) == 0 { 1 } else { -1 };
                sign * g.dim() as i64
            })
            .sum();
        out.push(chi);
    }
    let chi_de_rham: i64 = complex
        .de_rham_cohomology()
        .iter()
        .map(|(&k, g)| {
            let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            sign * g.dim() as i64
        })
        .sum();
    out.push(chi_de_rham);
    out
}

fn zero_like(m: &Matrix) -> Matrix {
    Matrix::zeros(m.rows(), m.cols())
}

fn check_split_and_anticommutators(model: &FlatBiGcModel, k: &[i64]) {
    let mc = model.mode_complex(k).unwrap();
    let mut sum = zero_like(mc.operator());
    for kind in DeltaKind::ALL {
        sum = &sum + mc.delta(kind);
    }
    assert_eq!(&sum, mc.operator());

    let anticommutes = |a: DeltaKind, b: DeltaKind| {
        let left = &(mc.delta(a) * mc.delta(b)) + &(mc.delta(b) * mc.delta(a));
        assert!(left.is_zero(), "{} and {} fail to anticommute", a.label(), b.label());
    };
    for kind in DeltaKind::ALL {
        anticommutes(kind, kind);
    }
    anticommutes(DeltaKind::Plus, DeltaKind::Minus);
    anticommutes(DeltaKind::Plus, DeltaKind::BarMinus);
    anticommutes(DeltaKind::BarPlus, DeltaKind::BarMinus);
    anticommutes(DeltaKind::BarPlus, DeltaKind::Minus);

    let mixed = |a: DeltaKind, b: DeltaKind| &(mc.delta(a) * mc.delta(b)) + &(mc.delta(b) * mc.delta(a));
    let four_term = &mixed(DeltaKind::Plus, DeltaKind::BarPlus)
        + &mixed(DeltaKind::Minus, DeltaKind::BarMinus);
    assert!(four_term.is_zero(), "mixed four term identity fails");
}

fn check_reality(model: &FlatBiGcModel, k: &[i64]) {
    let mc = model.mode_complex(k).unwrap();
    let neg: Vec<i64> = k.iter().map(|x| -x).collect();
    let opposite = model.mode_complex(&neg).unwrap();
    for kind in DeltaKind::ALL {
        assert_eq!(
            opposite.delta(kind).conj(),
            mc.delta(kind.conj()).clone(),
            "conjugation should swap {} with {} across opposite modes",
            kind.label(),
            kind.conj().label()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_components_split_the_operator_at_random_modes(k in mode2()) {
        check_split_and_anticommutators(t2(), &k);
    }

    #[test]
    fn reality_swaps_components_across_opposite_modes(k in mode2()) {
        check_reality(t2(), &k);
    }

    #[test]
    fn the_mode_operator_scales_linearly(k in mode2(), t in 1..=3i64) {
        let base = t2().mode_complex(&k).unwrap();
        let scaled_mode: Vec<i64> = k.iter().map(|x| t * x).collect();
        let scaled = t2().mode_complex(&scaled_mode).unwrap();
        let factor = GaussianRational::from_int(t);
        prop_assert_eq!(scaled.operator().clone(), base.operator().scale(&factor));
    }

    #[test]
    fn adjoints_are_involutive(k in mode2()) {
        let mc = t2().mode_complex(&k).unwrap();
        let form = t2_form();
        for kind in DeltaKind::ALL {
            let once = form.adjoint(mc.delta(kind));
            prop_assert_eq!(&form.adjoint(&once), mc.delta(kind));
        }
    }

    #[test]
    fn laplacians_are_self_adjoint(k in mode2(), pair in pairs()) {
        let lap = t2().laplacians(&k).unwrap();
        let form = t2_form();
        prop_assert_eq!(form.adjoint(lap.de_rham()), lap.de_rham().clone());
        prop_assert_eq!(form.adjoint(lap.pair(pair)), lap.pair(pair).clone());
        let kind = pair.dprime_kind();
        prop_assert_eq!(form.adjoint(lap.single(kind)), lap.single(kind).clone());
    }

    #[test]
    fn harmonic_verdicts_hold_on_every_slice(k in mode2(), pair in pairs()) {
        let support: Vec<(i64, i64)> =
            t2().mode_complex(&k).unwrap().support().keys().copied().collect();
        for slice in support {
            let report = t2().harmonic_decomposition(&k, pair, slice).unwrap();
            prop_assert!(report.verified, "slice {slice:?} mode {k:?}");
            prop_assert_eq!(report.kernel_dim, report.harmonic_dim + report.image_dim);
        }
    }

    #[test]
    fn euler_characteristics_agree_at_random_modes(k in mode2(), pair in pairs()) {
        let rc = t2().mode_complex(&k).unwrap().reindex(pair);
        let chis = euler_characteristics(rc.complex());
        prop_assert!(chis.windows(2).all(|w| w[0] == w[1]), "{chis:?} at mode {k:?}");
    }

    #[test]
    fn cohomology_is_invariant_under_mode_doubling(k in mode2(), pair in pairs()) {
        let doubled: Vec<i64> = k.iter().map(|x| 2 * x).collect();
        let at_k = t2().mode_complex(&k).unwrap().reindex(pair);
        let at_2k = t2().mode_complex(&doubled).unwrap().reindex(pair);
        let dims = |rc: &DoubleComplex| -> BTreeMap<(i64, i64), usize> {
            rc.bigraded_cohomology(Theory::BottChern)
                .into_iter()
                .map(|(key, g)| (key, g.dim()))
                .filter(|&(_, d)| d > 0)
                .collect()
        };
        prop_assert_eq!(dims(at_k.complex()), dims(at_2k.complex()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn the_four_torus_obeys_the_same_mode_identities(k in mode4()) {
        check_split_and_anticommutators(t4(), &k);
        check_reality(t4(), &k);

        let mc = t4().mode_complex(&k).unwrap();
        let form = t4_form();
        for kind in DeltaKind::ALL {
            let once = form.adjoint(mc.delta(kind));
            prop_assert_eq!(&form.adjoint(&once), mc.delta(kind));
        }
    }
}
