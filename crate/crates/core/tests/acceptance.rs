//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line with its wall time against the budget.
//!
//! Run with `cargo test -p polclass-core --test acceptance -- --nocapture`
//! to see the lines.

use std::time::{Duration, Instant};

use polclass_core::{
    canonical_class, classify_pair, classify_polarized, cone_pushforward, delta_genus,
    hirzebruch_case_table, hypothesis_high_nefvalue, is_pseff, kobayashi_ochiai, nefvalue,
    oracle_grid, slc_classify, slc_exclusions, verify_theorems, BasisTag, BoundaryComponent,
    BoundarySpec, DivisorClass, PairLabel, Rational, RejectReason, SlcLabel, UniverseBounds,
    VarietyModel, DEFAULT_K_MAX,
};

type Check = Result<(), Vec<String>>;

fn r(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn run(id: u32, name: &str, budget: Duration, body: impl FnOnce(&mut Vec<String>)) {
    let start = Instant::now();
    let mut problems = Vec::new();
    body(&mut problems);
    let elapsed = start.elapsed();
    if elapsed > budget {
        problems.push(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let outcome: Check = if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    };
    match &outcome {
        Ok(()) => println!(
            "PASS criterion {id} ({name}): {:.3}s / {}s",
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
        Err(problems) => {
            println!(
                "FAIL criterion {id} ({name}): {:.3}s / {}s, {} problem(s); first: {}",
                elapsed.as_secs_f64(),
                budget.as_secs(),
                problems.len(),
                problems[0]
            );
            for p in problems {
                eprintln!("  criterion {id}: {p}");
            }
        }
    }
    assert!(
        outcome.is_ok(),
        "criterion {id} failed: {:?}",
        outcome.unwrap_err()
    );
}

fn expect<T: PartialEq + std::fmt::Debug>(
    problems: &mut Vec<String>,
    what: String,
    got: T,
    want: T,
) {
    if got != want {
        problems.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

#[test]
fn criterion_1_golden_nefvalues() {
    run(1, "golden nefvalues", Duration::from_secs(1), |problems| {
        for n in 2..=5u32 {
            let p = VarietyModel::projective_space(n).unwrap();
            let tau = nefvalue(&p, &p.tautological()).unwrap().value;
            expect(problems, format!("τ(P^{n}, H)"), tau, r(n as i64 + 1));

            let bundle = VarietyModel::split_bundle(&vec![1; n as usize]).unwrap();
            let tau = nefvalue(&bundle, &bundle.tautological()).unwrap().value;
            expect(problems, format!("τ({bundle}, ξ)"), tau, r(n as i64));

            for rank in 3..=n + 2 {
                let quadric = VarietyModel::quadric(n, rank).unwrap();
                let tau = nefvalue(&quadric, &quadric.tautological()).unwrap().value;
                expect(problems, format!("τ({quadric}, H)"), tau, r(n as i64));
            }

            for a in 3..=6u32 {
                let cone = VarietyModel::cone_over_p1(n, a).unwrap();
                let tau = nefvalue(&cone, &cone.tautological()).unwrap().value;
                let want = &r(n as i64) - &q(a as i64 - 2, a as i64);
                expect(problems, format!("τ({cone}, L)"), tau, want);
            }
        }
    });
}

#[test]
fn criterion_2_cone_cutoff() {
    run(
        2,
        "cone hypothesis cutoff at a = 3",
        Duration::from_secs(1),
        |problems| {
            for n in 2..=5u32 {
                for a in 1..=6u32 {
                    let cone = VarietyModel::cone_over_p1(n, a).unwrap();
                    let got = hypothesis_high_nefvalue(&cone, &cone.tautological()).unwrap();
                    let want = a >= 3;
                    if got != want {
                        let k = canonical_class(&cone);
                        problems.push(format!(
                            "{cone}: hypothesis {got}, expected {want} (K = {k}, K + (n−1)L = {})",
                            k.add_scaled(&r(n as i64 - 1), &cone.tautological())
                                .unwrap()
                        ));
                    }
                }
            }
        },
    );
}

fn bundles(max_len: usize, max_degree: i64) -> Vec<Vec<i64>> {
    polclass_core::degree_sequences(2, 0, max_degree)
        .into_iter()
        .chain((3..=max_len).flat_map(|len| polclass_core::degree_sequences(len, 0, max_degree)))
        .collect()
}

#[test]
fn criterion_3_cone_oracles() {
    run(
        3,
        "cone-oracle equivalence",
        Duration::from_secs(30),
        |problems| {
            let mut compared = 0usize;
            for degrees in bundles(4, 4) {
                let model = VarietyModel::split_bundle(&degrees).unwrap();
                for row in oracle_grid(&model, 10, DEFAULT_K_MAX).unwrap() {
                    compared += 1;
                    if !row.agree {
                        problems.push(format!(
                            "{model}, {} {}: closed form {}, oracle {}",
                            row.test, row.class, row.closed_form, row.oracle
                        ));
                    }
                }
            }
            // 2 + 3 + 4-term sequences of 0..=4 (15 + 35 + 70), 21^2 classes, 3 tests
            expect(problems, "comparisons".into(), compared, 120 * 441 * 3);
        },
    );
}

#[test]
fn criterion_4_exhaustive_verification() {
    run(
        4,
        "exhaustive verification at (2,4,4,3)",
        Duration::from_secs(60),
        |problems| {
            let report = verify_theorems(&UniverseBounds::default()).unwrap();
            for f in &report.failures {
                problems.push(format!(
                    "[{}] {}: expected {}, got {}",
                    f.check, f.input, f.expected, f.actual
                ));
            }
            if report.hypothesis_count == 0 {
                problems.push("no hypothesis-true inputs".into());
            }
        },
    );
}

fn pair_label(
    model: &VarietyModel,
    components: Vec<BoundaryComponent>,
) -> (PairLabel, Option<RejectReason>) {
    let report =
        classify_pair(model, &BoundarySpec::new(components), &model.tautological()).unwrap();
    (report.label, report.reject_reason)
}

#[test]
fn criterion_5_pair_table() {
    use BoundaryComponent as C;
    run(5, "log pair table", Duration::from_secs(5), |problems| {
        for n in 2..=5u32 {
            let p = VarietyModel::projective_space(n).unwrap();
            expect(
                problems,
                format!("P^{n}, one hyperplane"),
                pair_label(&p, vec![C::Hyperplane { degree: 1 }]).0,
                PairLabel::ProjectiveSpaceHyperplane,
            );
            for boundary in [
                vec![C::Hyperplane { degree: 2 }],
                vec![C::Hyperplane { degree: 1 }, C::Hyperplane { degree: 1 }],
            ] {
                expect(
                    problems,
                    format!("P^{n}, {boundary:?}"),
                    pair_label(&p, boundary.clone()).0,
                    PairLabel::Reject,
                );
            }

            // rank 3: K + k·(½H) + (n − 1)H = (k/2 − 1)H
            let q3 = VarietyModel::quadric(n, 3).unwrap();
            for k in 1..=4 {
                let report = classify_pair(
                    &q3,
                    &BoundarySpec::new(vec![C::HalfHyperplane { k }]),
                    &q3.tautological(),
                )
                .unwrap();
                let want = if k == 1 {
                    PairLabel::QuadricRankThree
                } else {
                    PairLabel::Reject
                };
                expect(problems, format!("{q3}, k = {k}"), report.label, want);
                let adjoint =
                    DivisorClass::from_ints(BasisTag::QuadricHalfHyperplane, &[k - 2]).unwrap();
                expect(
                    problems,
                    format!("{q3}, k = {k}, adjoint"),
                    report.adjoint_class,
                    Some(adjoint),
                );
            }

            let q4 = VarietyModel::quadric(n, 4).unwrap();
            for (ruling, want) in [
                ((1, 0), PairLabel::QuadricRankFour),
                ((0, 1), PairLabel::QuadricRankFour),
                ((1, 1), PairLabel::Reject),
                ((2, 1), PairLabel::Reject),
            ] {
                let (p_, q_) = ruling;
                expect(
                    problems,
                    format!("{q4}, ruling {ruling:?}"),
                    pair_label(&q4, vec![C::Ruling { p: p_, q: q_ }]).0,
                    want,
                );
            }

            for rank in 5..=n + 2 {
                let q = VarietyModel::quadric(n, rank).unwrap();
                expect(
                    problems,
                    format!("{q}, hyperplane"),
                    pair_label(&q, vec![C::Hyperplane { degree: 1 }]),
                    (PairLabel::Reject, Some(RejectReason::Pseff)),
                );
            }
        }

        for degrees in [
            vec![1, 1],
            vec![3, 1],
            vec![2, 2],
            vec![1, 1, 1],
            vec![3, 2, 1],
            vec![2, 1, 1, 1],
        ] {
            let m = VarietyModel::split_bundle(&degrees).unwrap();
            for k in 1..=3 {
                let report =
                    classify_pair(&m, &BoundarySpec::fibers(k), &m.tautological()).unwrap();
                expect(
                    problems,
                    format!("{m}, {k} fibers"),
                    report.label,
                    PairLabel::ScrollFibers,
                );
                let xi_coeff = report.adjoint_class.map(|c| c.coeffs[0].clone());
                expect(
                    problems,
                    format!("{m}, {k} fibers, ξ-coefficient"),
                    xi_coeff,
                    Some(r(-1)),
                );
            }
        }

        for a in 1..=5 {
            for b in 1..=a {
                let m = VarietyModel::split_bundle(&[a, b]).unwrap();
                let report = classify_pair(
                    &m,
                    &BoundarySpec::new(vec![C::Section { x: 1, d: 0 }]),
                    &m.tautological(),
                )
                .unwrap();
                // on P^1 × P^1 the section is a line of the other ruling
                let want = match (a, b) {
                    (1, 1) => PairLabel::ScrollFibers,
                    (_, 1) => PairLabel::NegativeSection,
                    _ => PairLabel::Reject,
                };
                expect(
                    problems,
                    format!("{m}, negative section"),
                    report.label,
                    want,
                );
                if b == 1 {
                    let d = DivisorClass::from_ints(BasisTag::BundleXiF, &[1, -a]).unwrap();
                    expect(
                        problems,
                        format!("{m}, section class"),
                        report.boundary_class,
                        Some(d),
                    );
                }
            }
        }

        for degrees in [vec![1, 1, 1], vec![2, 1, 1], vec![3, 1, 1, 1]] {
            let m = VarietyModel::split_bundle(&degrees).unwrap();
            expect(
                problems,
                format!("{m}, section"),
                pair_label(&m, vec![C::Section { x: 1, d: 0 }]),
                (PairLabel::Reject, Some(RejectReason::DimensionConstraint)),
            );
        }

        // cone over the conic: K and the slope of h recomputed from the resolution
        for n in 3..=5u32 {
            let cone = VarietyModel::cone_over_conic(n).unwrap();
            let res = cone_pushforward(&cone).unwrap();
            let l = cone.tautological();
            let k = res.pushforward(&res.canonical()).unwrap();
            expect(
                problems,
                format!("{cone}, K"),
                k.clone(),
                l.scale(&(&q(1, 2) - n as i64)),
            );
            expect(
                problems,
                format!("{cone}, m"),
                res.base_slope.clone(),
                q(1, 2),
            );
            for m1 in 0..=4 {
                for m2 in 0..=3 {
                    if (m1, m2) == (0, 0) {
                        continue;
                    }
                    let report =
                        classify_pair(&cone, &BoundarySpec::new(vec![C::Lift { m1, m2 }]), &l)
                            .unwrap();
                    let delta = &(&res.base_slope * m1) + m2;
                    let adjoint = k
                        .add(&l.scale(&delta))
                        .unwrap()
                        .add_scaled(&r(n as i64 - 1), &l)
                        .unwrap();
                    let coefficient = &q(m1 - 1, 2) + m2;
                    expect(
                        problems,
                        format!("{cone}, lift ({m1},{m2}), adjoint"),
                        adjoint.clone(),
                        l.scale(&coefficient),
                    );
                    expect(
                        problems,
                        format!("{cone}, lift ({m1},{m2}), adjoint class"),
                        report.adjoint_class,
                        Some(adjoint),
                    );
                    let want = if coefficient >= r(0) {
                        (PairLabel::Reject, Some(RejectReason::Pseff))
                    } else {
                        (PairLabel::ScrollFibers, None)
                    };
                    expect(
                        problems,
                        format!("{cone}, lift ({m1},{m2})"),
                        (report.label, report.reject_reason),
                        want,
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_6_hirzebruch_table() {
    run(
        6,
        "Hirzebruch prime-class table",
        Duration::from_secs(5),
        |problems| {
            for a in 1..=5 {
                for b in 1..=a {
                    let m = VarietyModel::split_bundle(&[a, b]).unwrap();
                    let rows = hirzebruch_case_table(a, b).unwrap();
                    let mut tags: Vec<&str> = rows.iter().map(|row| row.case_tag.tag()).collect();
                    tags.dedup();
                    let want_tags = if a > b {
                        vec!["i", "ii", "iii", "iv"]
                    } else {
                        vec!["i", "ii", "iii"]
                    };
                    expect(problems, format!("({a},{b}) cases"), tags, want_tags);
                    for row in &rows {
                        let closed_form = match row.case_tag.tag() {
                            "i" => true,
                            "ii" => b == 1,
                            _ => false,
                        };
                        expect(
                            problems,
                            format!(
                                "({a},{b}) ({}) x={} d'={} closed form",
                                row.case_tag.tag(),
                                row.x,
                                row.d
                            ),
                            row.non_pseff,
                            closed_form,
                        );
                        // K + ξ + D recomputed in the model's basis
                        let d = m.hirzebruch_class(row.x, row.d).unwrap();
                        let adjoint = canonical_class(&m)
                            .add(&m.tautological())
                            .unwrap()
                            .add(&d)
                            .unwrap();
                        let tabulated = m.to_model_basis(&row.k_plus_l_plus_d).unwrap();
                        expect(
                            problems,
                            format!("({a},{b}) x={} d'={} class", row.x, row.d),
                            tabulated,
                            adjoint.clone(),
                        );
                        expect(
                            problems,
                            format!("({a},{b}) x={} d'={} is_pseff", row.x, row.d),
                            row.non_pseff,
                            !is_pseff(&m, &adjoint).unwrap(),
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_7_slc_parity() {
    run(
        7,
        "slc conductor parity",
        Duration::from_secs(1),
        |problems| {
            for degrees in [
                vec![1, 1],
                vec![2, 1],
                vec![1, 1, 1],
                vec![3, 2, 1],
                vec![2, 2, 1, 1],
            ] {
                let m = VarietyModel::split_bundle(&degrees).unwrap();
                for k in 1..=8usize {
                    let report = slc_classify(&m, &BoundarySpec::fibers(k), None).unwrap();
                    // ξ^{n−1}·f = 1, so the conductor degree is the fiber count
                    expect(
                        problems,
                        format!("{m}, {k} fibers, degree"),
                        report.conductor_degree.clone(),
                        r(k as i64),
                    );
                    if k % 2 == 0 {
                        expect(
                            problems,
                            format!("{m}, {k} fibers"),
                            report.label,
                            SlcLabel::Glued,
                        );
                        match &report.glued {
                            Some(glued) => {
                                expect(
                                    problems,
                                    format!("{m}, {k} fibers, nodes"),
                                    glued.node_count,
                                    k / 2,
                                );
                                expect(
                                    problems,
                                    format!("{m}, {k} fibers, invariants"),
                                    glued.check_invariants(),
                                    true,
                                );
                            }
                            None => problems.push(format!("{m}, {k} fibers: no glued model")),
                        }
                    } else {
                        expect(
                            problems,
                            format!("{m}, {k} fibers"),
                            (report.label, report.reject_reason),
                            (SlcLabel::Reject, Some(RejectReason::Parity)),
                        );
                    }
                }
            }

            // L-degree of each excluded conductor is 1: H^n = 1 on P^n, ξ·C_0 =
            // −e + a = 1 on P(O(a) ⊕ O(1)), and a linear space (½H or a ruling)
            // on a quadric; two fibers of a scroll give 2
            let rows = slc_exclusions().unwrap();
            let mut cases: Vec<PairLabel> = rows
                .iter()
                .filter(|row| row.excluded)
                .map(|row| row.clr_case)
                .collect();
            cases.dedup();
            expect(
                problems,
                "excluded cases".into(),
                cases,
                vec![
                    PairLabel::ProjectiveSpaceHyperplane,
                    PairLabel::NegativeSection,
                    PairLabel::QuadricRankThree,
                    PairLabel::QuadricRankFour,
                ],
            );
            for row in &rows {
                let want = if row.clr_case == PairLabel::ScrollFibers {
                    r(2)
                } else {
                    r(1)
                };
                expect(
                    problems,
                    format!("{} on {}", row.clr_case, row.model),
                    row.conductor_degree.clone(),
                    want,
                );
                expect(
                    problems,
                    format!("{} on {} excluded", row.clr_case, row.model),
                    row.excluded,
                    row.clr_case != PairLabel::ScrollFibers,
                );
            }
        },
    );
}

#[test]
fn criterion_8_cross_family() {
    run(
        8,
        "P^1 × P^1 as bundle and as quadric",
        Duration::from_secs(1),
        |problems| {
            let bundle = VarietyModel::split_bundle(&[1, 1]).unwrap();
            let quadric = VarietyModel::quadric(2, 4).unwrap();
            let (xi, h) = (bundle.tautological(), quadric.tautological());
            let tau = (
                nefvalue(&bundle, &xi).unwrap().value,
                nefvalue(&quadric, &h).unwrap().value,
            );
            expect(problems, "nefvalue".into(), tau.0.clone(), tau.1.clone());
            expect(problems, "nefvalue value".into(), tau.0, r(2));
            let delta = (
                delta_genus(&bundle, &xi).unwrap(),
                delta_genus(&quadric, &h).unwrap(),
            );
            expect(problems, "Δ-genus".into(), delta.0.delta, delta.1.delta);
            expect(
                problems,
                "L^2".into(),
                delta.0.top_self_intersection,
                delta.1.top_self_intersection,
            );
            expect(problems, "h0".into(), delta.0.h0, delta.1.h0);
            let ko = (
                kobayashi_ochiai(&bundle, &xi).unwrap(),
                kobayashi_ochiai(&quadric, &h).unwrap(),
            );
            expect(problems, "KO label".into(), ko.0, ko.1);
            expect(
                problems,
                "KO label value".into(),
                ko.0.map(|k| k.as_str()),
                Some("KO_QUADRIC"),
            );
            let labels = (
                classify_polarized(&bundle, &xi).unwrap().kobayashi_ochiai,
                classify_polarized(&quadric, &h).unwrap().kobayashi_ochiai,
            );
            expect(problems, "classifier KO label".into(), labels.0, labels.1);
        },
    );
}
