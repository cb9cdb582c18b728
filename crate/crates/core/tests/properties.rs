use std::collections::HashSet;

use proptest::prelude::*;

use polclass_core::{
    canonical_class, classify_pair, classify_polarized, enumerate_universe,
    hypothesis_high_nefvalue, is_ample, is_nef, is_pseff, nefvalue, oracle_pseff_sections,
    BoundarySpec, CaseLabel, DivisorClass, Rational, UniverseBounds, VarietyModel,
};

fn r(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn small_bounds() -> UniverseBounds {
    UniverseBounds::new(2, 4, 3, 2).unwrap()
}

#[test]
fn universe_is_ample_and_duplicate_free() {
    let universe = enumerate_universe(&small_bounds()).unwrap();
    let mut seen = HashSet::new();
    for (model, l) in &universe {
        assert!(is_ample(model, l).unwrap(), "{model}, {l}");
        assert!(
            seen.insert((model.clone(), l.clone())),
            "{model}, {l} twice"
        );
    }
    assert_eq!(universe, enumerate_universe(&small_bounds()).unwrap());
}

#[test]
fn high_nefvalue_exceeds_dimension_minus_one() {
    for (model, l) in enumerate_universe(&small_bounds()).unwrap() {
        let n = model.dim() as i64;
        let tau = nefvalue(&model, &l).unwrap().value;
        let hypothesis = hypothesis_high_nefvalue(&model, &l).unwrap();
        if hypothesis {
            assert!(tau > r(n - 1), "{model}, {l}: τ = {tau}");
        }
        // K + τL sits on the boundary of the nef cone
        let k = canonical_class(&model);
        if tau.is_positive() {
            assert!(is_nef(&model, &k.add_scaled(&tau, &l).unwrap()).unwrap());
        }
    }
}

#[test]
fn labels_match_hypothesis_and_delta() {
    for (model, l) in enumerate_universe(&small_bounds()).unwrap() {
        let report = classify_polarized(&model, &l).unwrap();
        let hypothesis = hypothesis_high_nefvalue(&model, &l).unwrap();
        assert_eq!(
            report.label != CaseLabel::Reject,
            hypothesis,
            "{model}, {l}"
        );
        assert_eq!(
            report.label == CaseLabel::Reject,
            report.reject_reason.is_some()
        );
        if report.label.requires_delta_zero() {
            assert_eq!(report.delta, Some(0), "{model}, {l}");
        }
    }
}

#[test]
fn nefvalue_decreases_with_larger_polarization() {
    for n in 2..=5u32 {
        let models = [
            VarietyModel::projective_space(n).unwrap(),
            VarietyModel::quadric(n, n + 2).unwrap(),
        ];
        for model in models {
            let mut previous: Option<Rational> = None;
            for d in 1..=5 {
                let tau = nefvalue(&model, &model.tautological().scale(&r(d)))
                    .unwrap()
                    .value;
                if let Some(p) = previous {
                    assert!(tau < p, "{model}: τ({d}H) = {tau} ≥ {p}");
                }
                previous = Some(tau);
            }
        }
    }
}

#[test]
fn pair_verdicts_match_adjoint_pseudo_effectivity() {
    let models = [
        VarietyModel::split_bundle(&[2, 1]).unwrap(),
        VarietyModel::split_bundle(&[1, 1, 1]).unwrap(),
        VarietyModel::split_bundle(&[3, 2, 2]).unwrap(),
    ];
    for model in models {
        for k in 1..=4 {
            let report =
                classify_pair(&model, &BoundarySpec::fibers(k), &model.tautological()).unwrap();
            let adjoint = report.adjoint_class.clone().unwrap();
            assert_eq!(
                report.label.as_str() != "REJECT",
                !is_pseff(&model, &adjoint).unwrap()
            );
        }
    }
}

fn bundle_strategy() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=4, 2..=4).prop_map(|mut d| {
        d.sort_by(|a, b| b.cmp(a));
        d
    })
}

proptest! {
    #[test]
    fn nef_classes_are_pseudo_effective(degrees in bundle_strategy(), x in -6i64..=6, y in -12i64..=12) {
        let model = VarietyModel::split_bundle(&degrees).unwrap();
        let class = model.class_from_ints(&[x, y]).unwrap();
        if is_nef(&model, &class).unwrap() {
            prop_assert!(is_pseff(&model, &class).unwrap());
        }
    }

    #[test]
    fn pseudo_effective_integral_classes_have_sections(degrees in bundle_strategy(), x in -4i64..=4, y in -10i64..=10) {
        let model = VarietyModel::split_bundle(&degrees).unwrap();
        let class = model.class_from_ints(&[x, y]).unwrap();
        let closed_form = is_pseff(&model, &class).unwrap();
        let oracle = oracle_pseff_sections(&model, &class, 12).unwrap();
        prop_assert_eq!(closed_form, oracle);
    }

    #[test]
    fn twisting_preserves_classification(a in 1i64..=4, b in 1i64..=4, t in -3i64..=3) {
        // P(V) ≅ P(V ⊗ O(t)) with ξ_V + t f = ξ_{V(t)}; compare ξ on V(t) with ξ + t f on V
        let (hi, lo) = (a.max(b), a.min(b));
        let base = VarietyModel::split_bundle(&[hi, lo]).unwrap();
        prop_assume!(lo + t >= 1);
        let twisted = VarietyModel::split_bundle(&[hi + t, lo + t]).unwrap();
        let on_base = classify_polarized(&base, &base.class_from_ints(&[1, t]).unwrap()).unwrap();
        let on_twisted = classify_polarized(&twisted, &twisted.tautological()).unwrap();
        prop_assert_eq!(on_base.label, on_twisted.label);
        prop_assert_eq!(on_base.nefvalue, on_twisted.nefvalue);
        prop_assert_eq!(on_base.delta, on_twisted.delta);
    }

    #[test]
    fn class_json_round_trip(p in -50i64..=50, q in 1i64..=12, s in -50i64..=50) {
        let class = DivisorClass::new(
            polclass_core::BasisTag::BundleXiF,
            vec![Rational::new(p, q), r(s)],
        ).unwrap();
        let json = serde_json::to_string(&class).unwrap();
        let back: DivisorClass = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, class);
        prop_assert!(json.contains('/'));
    }
}
