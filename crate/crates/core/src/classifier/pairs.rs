use std::fmt;

use serde::{Deserialize, Serialize};

use super::polarized::{identify, quadric_h_degree};
use super::{
    adjoint_class, integral_i64, swap_rulings, twist_normalize, Normalization, RejectReason,
};
use crate::cones::{is_pseff, require_ample};
use crate::model::{canonical_class, ConeBase, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::resolution::cone_pushforward;
use crate::{Error, Result};

/// A prime boundary component, described by its class.
///
/// - `hyperplane`: a prime divisor in `|O(degree)|` on a projective space
///   or quadric;
/// - `fiber`: a fiber of a split bundle over `P^1`;
/// - `section`: on a split bundle of dimension 2, a prime curve of class
///   `x C_0 + d f'`;
/// - `half_hyperplane`: `k` times the generator `½H` of the class group of
///   a rank-3 quadric;
/// - `ruling`: type `(p, q)` on a rank-4 quadric;
/// - `lift`: on a generalized cone, the image of a prime divisor of class
///   `m1 h + m2 ξ` on the resolving bundle (`h` pulled back from the base).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryComponent {
    Hyperplane { degree: i64 },
    Fiber,
    Section { x: i64, d: i64 },
    HalfHyperplane { k: i64 },
    Ruling { p: i64, q: i64 },
    Lift { m1: i64, m2: i64 },
}

impl BoundaryComponent {
    fn kind(&self) -> &'static str {
        match self {
            BoundaryComponent::Hyperplane { .. } => "hyperplane",
            BoundaryComponent::Fiber => "fiber",
            BoundaryComponent::Section { .. } => "section",
            BoundaryComponent::HalfHyperplane { .. } => "half_hyperplane",
            BoundaryComponent::Ruling { .. } => "ruling",
            BoundaryComponent::Lift { .. } => "lift",
        }
    }
}

/// A reduced boundary: every component appears with multiplicity one.
/// Components with equal descriptors are distinct prime divisors in the
/// same class (e.g. several fibers).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub components: Vec<BoundaryComponent>,
}

impl BoundarySpec {
    pub fn new(components: Vec<BoundaryComponent>) -> Self {
        BoundarySpec { components }
    }

    pub fn fibers(count: usize) -> Self {
        BoundarySpec::new(vec![BoundaryComponent::Fiber; count])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairLabel {
    #[serde(rename = "CLR_1")]
    ProjectiveSpaceHyperplane,
    #[serde(rename = "CLR_2I")]
    ScrollFibers,
    #[serde(rename = "CLR_2II")]
    NegativeSection,
    #[serde(rename = "CLR_3I")]
    QuadricRankThree,
    #[serde(rename = "CLR_3II")]
    QuadricRankFour,
    #[serde(rename = "REJECT")]
    Reject,
}

impl PairLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            PairLabel::ProjectiveSpaceHyperplane => "CLR_1",
            PairLabel::ScrollFibers => "CLR_2I",
            PairLabel::NegativeSection => "CLR_2II",
            PairLabel::QuadricRankThree => "CLR_3I",
            PairLabel::QuadricRankFour => "CLR_3II",
            PairLabel::Reject => "REJECT",
        }
    }

    pub fn case_number(self) -> &'static str {
        match self {
            PairLabel::ProjectiveSpaceHyperplane => "(1)",
            PairLabel::ScrollFibers => "(2.i)",
            PairLabel::NegativeSection => "(2.ii)",
            PairLabel::QuadricRankThree => "(3.i)",
            PairLabel::QuadricRankFour => "(3.ii)",
            PairLabel::Reject => "-",
        }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCaseReport {
    pub label: PairLabel,
    /// Discrepancy of the exceptional divisor of the resolving bundle of a
    /// generalized cone: `K_T + Δ' = μ^*(K + Δ) + λ E`.
    pub lambda: Option<Rational>,
    /// `m` with `K + Δ ≡ m L`, when the two are proportional.
    pub m_slope: Option<Rational>,
    pub reject_reason: Option<RejectReason>,
    /// `Δ` in the model's basis.
    pub boundary_class: Option<DivisorClass>,
    /// `K + Δ + (n − 1) L`.
    pub adjoint_class: Option<DivisorClass>,
    pub normalization: Option<Normalization>,
    /// Log canonicity of `(X, Δ)` is a hypothesis, never checked.
    pub lc_assumed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identified_as: Option<String>,
}

impl PairCaseReport {
    fn empty() -> Self {
        PairCaseReport {
            label: PairLabel::Reject,
            lambda: None,
            m_slope: None,
            reject_reason: None,
            boundary_class: None,
            adjoint_class: None,
            normalization: None,
            lc_assumed: true,
            identified_as: None,
        }
    }
}

fn invalid(component: &BoundaryComponent, model: &VarietyModel) -> Error {
    Error::InvalidBoundary(format!(
        "{} component {component:?} is not a prime divisor class on {model}",
        component.kind()
    ))
}

/// Prime classes on the Hirzebruch surface `F_e` in the `(C_0, f')` basis:
/// `C_0`, `f'`, and `x C_0 + d f'` with `x > 0` and `d > xe`, or `d = xe`
/// when `e > 0`.
pub(crate) fn is_prime_hirzebruch_class(e: i64, x: i64, d: i64) -> bool {
    (x, d) == (0, 1) || (x, d) == (1, 0) || (x > 0 && d > x * e) || (e > 0 && x > 0 && d == x * e)
}

/// Class of one component in the model's basis.
fn component_class(model: &VarietyModel, component: &BoundaryComponent) -> Result<DivisorClass> {
    use BoundaryComponent as C;
    let bad = || Err(invalid(component, model));
    match (model.family(), component) {
        (Family::ProjectiveSpace { .. }, C::Hyperplane { degree }) if *degree >= 1 => {
            model.class_from_ints(&[*degree])
        }
        (Family::SplitBundle { .. }, C::Fiber) => model.class_from_ints(&[0, 1]),
        (Family::SplitBundle { degrees }, C::Section { x, d }) if degrees.len() == 2 => {
            if !is_prime_hirzebruch_class(degrees[0] - degrees[1], *x, *d) {
                return bad();
            }
            model.hirzebruch_class(*x, *d)
        }
        (Family::Quadric { rank, .. }, C::Hyperplane { degree }) if *degree >= 1 => match rank {
            3 => model.class_from_ints(&[2 * degree]),
            4 => model.class_from_ints(&[*degree, *degree]),
            _ => model.class_from_ints(&[*degree]),
        },
        (Family::Quadric { rank: 3, .. }, C::HalfHyperplane { k }) if *k >= 1 => {
            model.class_from_ints(&[*k])
        }
        (Family::Quadric { rank: 4, .. }, C::Ruling { p, q })
            if (*p, *q) == (1, 0) || (*p, *q) == (0, 1) || (*p >= 1 && *q >= 1) =>
        {
            model.class_from_ints(&[*p, *q])
        }
        (Family::GeneralizedCone { .. }, C::Lift { m1, m2 })
            if *m1 >= 0 && *m2 >= 0 && (*m1, *m2) != (0, 0) =>
        {
            let res = cone_pushforward(model)?;
            res.pushforward(&res.class(*m2, *m1))
        }
        _ => bad(),
    }
}

/// `(K + Δ)/L` when the two classes are proportional.
fn slope(
    model: &VarietyModel,
    boundary: &DivisorClass,
    l: &DivisorClass,
) -> Result<Option<Rational>> {
    let kd = canonical_class(model).add(boundary)?;
    let pivot = l
        .coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("ample class is non-zero");
    let m = &kd.coeffs[pivot] / &l.coeffs[pivot];
    Ok((kd == l.scale(&m)).then_some(m))
}

/// `λ` for a boundary of lifted components on a generalized cone, from
/// intersecting `K_T + Δ' = μ^*((K + Δ)) + λ E` with a line in a fiber of
/// the resolving bundle.
fn cone_discrepancy(
    model: &VarietyModel,
    boundary: &BoundarySpec,
    m: &Rational,
) -> Result<Rational> {
    let res = cone_pushforward(model)?;
    let mut upstairs = res.canonical();
    for component in &boundary.components {
        if let BoundaryComponent::Lift { m1, m2 } = component {
            upstairs = upstairs.add(&res.class(*m2, *m1))?;
        }
    }
    let line = &res.fiber_line;
    let pulled = res.xi().scale(m);
    let numerator = &upstairs.dot(line)? - &pulled.dot(line)?;
    Ok(numerator / res.exceptional.dot(line)?)
}

fn translate_cone_boundary(a: u32, boundary: &BoundarySpec) -> Result<BoundarySpec> {
    boundary
        .components
        .iter()
        .map(|c| match c {
            BoundaryComponent::Lift { m1, m2 } if *m1 >= 0 && *m2 >= 0 && (*m1, *m2) != (0, 0) => {
                Ok(if a == 1 {
                    BoundaryComponent::Hyperplane { degree: m1 + m2 }
                } else {
                    BoundaryComponent::HalfHyperplane { k: m1 + 2 * m2 }
                })
            }
            other => Err(Error::InvalidBoundary(format!(
                "{} component {other:?} on a generalized cone",
                other.kind()
            ))),
        })
        .collect::<Result<Vec<_>>>()
        .map(BoundarySpec::new)
}

/// Rank-4 quadric surface to `P(O(1) ⊕ O(1))`: type `(p, q)` becomes
/// `q C_0 + p f'`.
fn translate_rulings(model: &VarietyModel, boundary: &BoundarySpec) -> Result<BoundarySpec> {
    boundary
        .components
        .iter()
        .map(|c| match c {
            BoundaryComponent::Ruling { p, q } => Ok(BoundaryComponent::Section { x: *q, d: *p }),
            BoundaryComponent::Hyperplane { degree } => Ok(BoundaryComponent::Section {
                x: *degree,
                d: *degree,
            }),
            other => Err(invalid(other, model)),
        })
        .collect::<Result<Vec<_>>>()
        .map(BoundarySpec::new)
}

/// Classifies `(X, Δ, L)` with `Δ` reduced and `L` ample, assuming `(X, Δ)`
/// log canonical.
pub fn classify_pair(
    model: &VarietyModel,
    boundary: &BoundarySpec,
    l: &DivisorClass,
) -> Result<PairCaseReport> {
    let l = model.to_model_basis(l)?;
    if !l.is_integral() {
        return Err(Error::NotIntegral(l.to_string()));
    }
    if boundary.components.is_empty() {
        return Err(Error::InvalidBoundary("empty boundary".into()));
    }
    match model.family() {
        Family::GeneralizedCone {
            base: ConeBase::P1 { a },
            ..
        } if *a <= 2 => {
            let (iso, class) = identify(model, &l)?.expect("cone over a line or conic");
            let translated = translate_cone_boundary(*a, boundary)?;
            let mut report = classify_pair(&iso, &translated, &class)?;
            report.identified_as = Some(iso.to_string());
            return Ok(report);
        }
        Family::Quadric { rank, n } if *rank <= 4 && quadric_h_degree(*rank, &l).is_none() => {
            if *n == 2 && *rank == 4 {
                let (iso, class) = identify(model, &l)?.expect("rank-4 quadric surface");
                let translated = translate_rulings(model, boundary)?;
                let mut report = classify_pair(&iso, &translated, &class)?;
                report.identified_as = Some(iso.to_string());
                return Ok(report);
            }
            return Err(Error::Unsupported(format!(
                "only multiples of H are Cartier on {model}, got {l}"
            )));
        }
        _ => {}
    }
    require_ample(model, &l)?;

    let mut report = PairCaseReport::empty();
    if model.dim() >= 3 && model.bundle_degrees().is_some() {
        let has_section = boundary
            .components
            .iter()
            .any(|c| matches!(c, BoundaryComponent::Section { .. }));
        if has_section {
            report.reject_reason = Some(RejectReason::DimensionConstraint);
            return Ok(report);
        }
    }

    let mut delta = model.zero_class();
    for component in &boundary.components {
        delta = delta.add(&component_class(model, component)?)?;
    }
    if let Some(degrees) = model.bundle_degrees() {
        if degrees.len() == 2 && degrees[0] > degrees[1] {
            let negative = boundary
                .components
                .iter()
                .filter(|c| matches!(c, BoundaryComponent::Section { x: 1, d: 0 }))
                .count();
            if negative > 1 {
                return Err(Error::InvalidBoundary(
                    "the negative section C0 is unique on a Hirzebruch surface with e > 0".into(),
                ));
            }
        }
    }
    let adjoint = adjoint_class(model, &delta, &l)?;
    report.m_slope = if model.lattice_rank() == 1 || model.bundle_degrees().is_none() {
        slope(model, &delta, &l)?
    } else {
        None
    };
    if let (Family::GeneralizedCone { .. }, Some(m)) = (model.family(), &report.m_slope) {
        report.lambda = Some(cone_discrepancy(model, boundary, m)?);
    }
    report.boundary_class = Some(delta);
    let pseff = is_pseff(model, &adjoint)?;
    report.adjoint_class = Some(adjoint);
    if pseff {
        report.reject_reason = Some(RejectReason::Pseff);
        return Ok(report);
    }

    let (label, normalization) = non_pseff_case(model, boundary, &l)?;
    report.normalization = normalization;
    match label {
        Some(label) => report.label = label,
        None => report.reject_reason = Some(RejectReason::NotInList),
    }
    Ok(report)
}

/// Reads the case off a boundary whose adjoint class is not pseudo-effective.
fn non_pseff_case(
    model: &VarietyModel,
    boundary: &BoundarySpec,
    l: &DivisorClass,
) -> Result<(Option<PairLabel>, Option<Normalization>)> {
    use BoundaryComponent as C;
    let comps = &boundary.components;
    let single = |c: C| comps.len() == 1 && comps[0] == c;
    let label = match model.family() {
        Family::ProjectiveSpace { .. } => (single(C::Hyperplane { degree: 1 })
            && l.coeffs[0] == Rational::one())
        .then_some(PairLabel::ProjectiveSpaceHyperplane),
        Family::SplitBundle { degrees } => {
            let x = integral_i64(&l.coeffs[0]).ok_or(Error::Overflow("fiber degree"))?;
            let y = integral_i64(&l.coeffs[1]).ok_or(Error::Overflow("fiber degree"))?;
            let normalized: Vec<C> = comps
                .iter()
                .map(|c| match c {
                    C::Section { x: 0, d: 1 } => C::Fiber,
                    other => other.clone(),
                })
                .collect();
            return Ok(bundle_case(degrees, &normalized, x, y, false));
        }
        Family::Quadric { rank: 3, .. } => {
            single(C::HalfHyperplane { k: 1 }).then_some(PairLabel::QuadricRankThree)
        }
        Family::Quadric { rank: 4, .. } => {
            let first = comps.iter().all(|c| *c == C::Ruling { p: 1, q: 0 });
            let second = comps.iter().all(|c| *c == C::Ruling { p: 0, q: 1 });
            match (first || second, comps.len()) {
                (true, 1) => Some(PairLabel::QuadricRankFour),
                // cones over several lines of one ruling: images of fibers of
                // the small resolution P(O(1)^2 ⊕ O^{n−2}) → Q
                (true, _) => Some(PairLabel::ScrollFibers),
                _ => None,
            }
        }
        Family::GeneralizedCone {
            base: ConeBase::P1 { .. },
            ..
        } => single(C::Lift { m1: 1, m2: 0 }).then_some(PairLabel::ScrollFibers),
        _ => None,
    };
    Ok((label, None))
}

fn bundle_case(
    degrees: &[i64],
    comps: &[BoundaryComponent],
    x: i64,
    y: i64,
    swapped: bool,
) -> (Option<PairLabel>, Option<Normalization>) {
    use BoundaryComponent as C;
    let n = degrees.len();
    let product = n == 2 && degrees[0] == degrees[1];
    if x == 1 {
        let norm = twist_normalize(degrees, x, y, swapped);
        if comps.iter().all(|c| *c == C::Fiber) {
            return (Some(PairLabel::ScrollFibers), Some(norm));
        }
        if n == 2 && !product && comps.len() == 1 && comps[0] == (C::Section { x: 1, d: 0 }) {
            let label = (norm.degrees[1] == 1).then_some(PairLabel::NegativeSection);
            return (label, Some(norm));
        }
        if product && !swapped && comps.iter().all(|c| *c == C::Section { x: 1, d: 0 }) {
            return swapped_case(degrees[0], comps, x, y);
        }
        return (None, Some(norm));
    }
    if product && !swapped {
        return swapped_case(degrees[0], comps, x, y);
    }
    (None, None)
}

/// Exchanges the rulings of `P(O(a) ⊕ O(a))`: `(x C_0 + d f')` becomes
/// `(d C_0 + x f')` over the trivial bundle.
fn swapped_case(
    a: i64,
    comps: &[BoundaryComponent],
    x: i64,
    y: i64,
) -> (Option<PairLabel>, Option<Normalization>) {
    use BoundaryComponent as C;
    let (x2, y2) = swap_rulings(a, x, y);
    let swapped: Vec<C> = comps
        .iter()
        .map(|c| match c {
            C::Fiber => C::Section { x: 1, d: 0 },
            C::Section { x: 1, d: 0 } => C::Fiber,
            C::Section { x, d } => C::Section { x: *d, d: *x },
            other => other.clone(),
        })
        .collect();
    bundle_case(&[0, 0], &swapped, x2, y2, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::BasisTag;
    use BoundaryComponent as C;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn projective_space_hyperplane() {
        for n in 2..=5 {
            let p = VarietyModel::projective_space(n).unwrap();
            let h = p.tautological();
            let report = classify_pair(
                &p,
                &BoundarySpec::new(vec![C::Hyperplane { degree: 1 }]),
                &h,
            )
            .unwrap();
            assert_eq!(report.label, PairLabel::ProjectiveSpaceHyperplane);
            assert_eq!(report.m_slope, Some(r(-(n as i64))));
            let report = classify_pair(
                &p,
                &BoundarySpec::new(vec![C::Hyperplane { degree: 2 }]),
                &h,
            )
            .unwrap();
            assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
            let two = BoundarySpec::new(vec![C::Hyperplane { degree: 1 }; 2]);
            assert_eq!(
                classify_pair(&p, &two, &h).unwrap().reject_reason,
                Some(RejectReason::Pseff)
            );
        }
    }

    #[test]
    fn negative_section() {
        let m = VarietyModel::split_bundle(&[3, 1]).unwrap();
        let spec = BoundarySpec::new(vec![C::Section { x: 1, d: 0 }]);
        let report = classify_pair(&m, &spec, &m.tautological()).unwrap();
        assert_eq!(report.label, PairLabel::NegativeSection);
        assert_eq!(
            report.boundary_class,
            Some(DivisorClass::from_ints(BasisTag::BundleXiF, &[1, -3]).unwrap())
        );
        let m = VarietyModel::split_bundle(&[3, 2]).unwrap();
        let report = classify_pair(&m, &spec, &m.tautological()).unwrap();
        assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
    }

    #[test]
    fn fibers_on_bundles() {
        let m = VarietyModel::split_bundle(&[2, 1, 1]).unwrap();
        for k in 1..=4 {
            let report = classify_pair(&m, &BoundarySpec::fibers(k), &m.tautological()).unwrap();
            assert_eq!(report.label, PairLabel::ScrollFibers);
            let adj = report.adjoint_class.unwrap();
            assert_eq!(adj.coeffs[0], r(-1));
        }
        let spec = BoundarySpec::new(vec![C::Section { x: 1, d: 0 }]);
        let report = classify_pair(&m, &spec, &m.tautological()).unwrap();
        assert_eq!(
            report.reject_reason,
            Some(RejectReason::DimensionConstraint)
        );
    }

    #[test]
    fn lines_of_one_ruling_on_the_product() {
        let m = VarietyModel::split_bundle(&[1, 1]).unwrap();
        let spec = BoundarySpec::new(vec![C::Section { x: 1, d: 0 }; 2]);
        let report = classify_pair(&m, &spec, &m.tautological()).unwrap();
        assert_eq!(report.label, PairLabel::ScrollFibers);
        assert!(report.normalization.unwrap().ruling_swapped);
    }

    #[test]
    fn quadrics() {
        for n in 2..=5 {
            let q3 = VarietyModel::quadric(n, 3).unwrap();
            let h = q3.tautological();
            let one = BoundarySpec::new(vec![C::HalfHyperplane { k: 1 }]);
            assert_eq!(
                classify_pair(&q3, &one, &h).unwrap().label,
                PairLabel::QuadricRankThree
            );
            let two = BoundarySpec::new(vec![C::HalfHyperplane { k: 2 }]);
            let report = classify_pair(&q3, &two, &h).unwrap();
            assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
            assert!(report.adjoint_class.unwrap().is_zero());

            let q4 = VarietyModel::quadric(n, 4).unwrap();
            let h = q4.tautological();
            for (p, q) in [(1, 0), (0, 1)] {
                let spec = BoundarySpec::new(vec![C::Ruling { p, q }]);
                assert_eq!(
                    classify_pair(&q4, &spec, &h).unwrap().label,
                    PairLabel::QuadricRankFour
                );
            }
            let spec = BoundarySpec::new(vec![C::Ruling { p: 1, q: 1 }]);
            assert_eq!(
                classify_pair(&q4, &spec, &h).unwrap().reject_reason,
                Some(RejectReason::Pseff)
            );
            let bad = BoundarySpec::new(vec![C::Ruling { p: 2, q: 0 }]);
            assert!(matches!(
                classify_pair(&q4, &bad, &h),
                Err(Error::InvalidBoundary(_))
            ));

            for rank in 5..=n + 2 {
                let q = VarietyModel::quadric(n, rank).unwrap();
                let spec = BoundarySpec::new(vec![C::Hyperplane { degree: 1 }]);
                let report = classify_pair(&q, &spec, &q.tautological()).unwrap();
                assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
            }
        }
    }

    #[test]
    fn conic_cone_boundaries_rejected() {
        for n in 3..=5 {
            let cone = VarietyModel::cone_over_conic(n).unwrap();
            for (m1, m2) in [(1, 0), (0, 1), (2, 0), (1, 1), (3, 2)] {
                let spec = BoundarySpec::new(vec![C::Lift { m1, m2 }]);
                let report = classify_pair(&cone, &spec, &cone.tautological()).unwrap();
                assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
                let expected = Rational::new(m1 - 1, 2) + m2;
                assert_eq!(report.adjoint_class.unwrap().coeffs[0], expected);
                assert_eq!(report.lambda, Some(Rational::new(1 - m1, 2)));
            }
        }
    }

    #[test]
    fn rational_curve_cone_with_one_fiber() {
        let cone = VarietyModel::cone_over_p1(3, 4).unwrap();
        let spec = BoundarySpec::new(vec![C::Lift { m1: 1, m2: 0 }]);
        let report = classify_pair(&cone, &spec, &cone.tautological()).unwrap();
        assert_eq!(report.label, PairLabel::ScrollFibers);
        assert_eq!(report.lambda, Some(Rational::new(-3, 4)));
        assert!(report.lambda.unwrap() > r(-1));
        let two = BoundarySpec::new(vec![C::Lift { m1: 1, m2: 0 }; 2]);
        let report = classify_pair(&cone, &two, &cone.tautological()).unwrap();
        assert_eq!(report.reject_reason, Some(RejectReason::Pseff));
    }

    #[test]
    fn invalid_boundaries() {
        let p2 = VarietyModel::projective_space(2).unwrap();
        let h = p2.tautological();
        assert!(matches!(
            classify_pair(&p2, &BoundarySpec::default(), &h),
            Err(Error::InvalidBoundary(_))
        ));
        assert!(matches!(
            classify_pair(&p2, &BoundarySpec::fibers(1), &h),
            Err(Error::InvalidBoundary(_))
        ));
        let f2 = VarietyModel::split_bundle(&[3, 1]).unwrap();
        let not_prime = BoundarySpec::new(vec![C::Section { x: 1, d: 1 }]);
        assert!(matches!(
            classify_pair(&f2, &not_prime, &f2.tautological()),
            Err(Error::InvalidBoundary(_))
        ));
    }
}
