use std::fmt;

use serde::Serialize;

use super::{integral_i64, swap_rulings, twist_normalize, Normalization, RejectReason};
use crate::cohomology::delta_genus;
use crate::cones::{hypothesis_high_nefvalue, nefvalue, require_ample};
use crate::model::{canonical_class, ConeBase, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KoLabel {
    #[serde(rename = "KO_PN")]
    ProjectiveSpace,
    #[serde(rename = "KO_QUADRIC")]
    Quadric,
}

impl KoLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            KoLabel::ProjectiveSpace => "KO_PN",
            KoLabel::Quadric => "KO_QUADRIC",
        }
    }
}

impl fmt::Display for KoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "CL_1")]
    ProjectiveSpace,
    #[serde(rename = "CL_2I")]
    Scroll,
    #[serde(rename = "CL_2II")]
    ConeOverRationalCurve,
    #[serde(rename = "CL_3")]
    Quadric,
    #[serde(rename = "CL_4")]
    VeronesePlane,
    #[serde(rename = "CL_5")]
    ConeOverVeronese,
    #[serde(rename = "REJECT")]
    Reject,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 7] = [
        CaseLabel::ProjectiveSpace,
        CaseLabel::Scroll,
        CaseLabel::ConeOverRationalCurve,
        CaseLabel::Quadric,
        CaseLabel::VeronesePlane,
        CaseLabel::ConeOverVeronese,
        CaseLabel::Reject,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::ProjectiveSpace => "CL_1",
            CaseLabel::Scroll => "CL_2I",
            CaseLabel::ConeOverRationalCurve => "CL_2II",
            CaseLabel::Quadric => "CL_3",
            CaseLabel::VeronesePlane => "CL_4",
            CaseLabel::ConeOverVeronese => "CL_5",
            CaseLabel::Reject => "REJECT",
        }
    }

    /// Case number in the classification list, e.g. `(2.ii)`.
    pub fn case_number(self) -> &'static str {
        match self {
            CaseLabel::ProjectiveSpace => "(1)",
            CaseLabel::Scroll => "(2.i)",
            CaseLabel::ConeOverRationalCurve => "(2.ii)",
            CaseLabel::Quadric => "(3)",
            CaseLabel::VeronesePlane => "(4)",
            CaseLabel::ConeOverVeronese => "(5)",
            CaseLabel::Reject => "-",
        }
    }

    pub fn requires_delta_zero(self) -> bool {
        matches!(
            self,
            CaseLabel::ConeOverRationalCurve
                | CaseLabel::Quadric
                | CaseLabel::VeronesePlane
                | CaseLabel::ConeOverVeronese
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub label: CaseLabel,
    pub nefvalue: Rational,
    pub delta: Option<i64>,
    pub normalization: Option<Normalization>,
    pub reject_reason: Option<RejectReason>,
    pub kobayashi_ochiai: Option<KoLabel>,
    /// Set when the input was classified through an isomorphic model from
    /// another family (e.g. `C_N(P^1, O(1)) ≅ P^N`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identified_as: Option<String>,
}

fn require_integral(class: &DivisorClass) -> Result<()> {
    if !class.is_integral() {
        return Err(Error::NotIntegral(class.to_string()));
    }
    Ok(())
}

/// `KO_PN` iff `K + (n + 1)L ≡ 0`, `KO_QUADRIC` iff `K + nL ≡ 0`.
pub fn kobayashi_ochiai(model: &VarietyModel, l: &DivisorClass) -> Result<Option<KoLabel>> {
    let l = model.to_model_basis(l)?;
    require_ample(model, &l)?;
    let k = canonical_class(model);
    let n = model.dim() as i64;
    if k.add_scaled(&Rational::from_integer(n + 1), &l)?.is_zero() {
        return Ok(Some(KoLabel::ProjectiveSpace));
    }
    if k.add_scaled(&Rational::from_integer(n), &l)?.is_zero() {
        return Ok(Some(KoLabel::Quadric));
    }
    Ok(None)
}

/// Models from another family that are literally the same polarized
/// variety, with the class carried across: `C_N(P^1, O(1)) = P^N`,
/// `C_N(P^1, O(2))` = the rank-3 quadric of dimension `N`, and the rank-4
/// quadric surface = `P(O(1) ⊕ O(1))` with `(p, q) ↦ q ξ + (p − q) f`.
pub(crate) fn identify(
    model: &VarietyModel,
    class: &DivisorClass,
) -> Result<Option<(VarietyModel, DivisorClass)>> {
    Ok(match model.family() {
        Family::GeneralizedCone {
            dim,
            base: ConeBase::P1 { a },
        } if *a <= 2 => {
            let c = class.coeffs[0].clone();
            if *a == 1 {
                let p = VarietyModel::projective_space(*dim)?;
                let l = p.class(vec![c])?;
                Some((p, l))
            } else {
                let q = VarietyModel::quadric(*dim, 3)?;
                let l = q.class(vec![c * 2])?;
                Some((q, l))
            }
        }
        Family::Quadric { n: 2, rank: 4 } => {
            let bundle = VarietyModel::split_bundle(&[1, 1])?;
            let (p, q) = (&class.coeffs[0], &class.coeffs[1]);
            let l = bundle.class(vec![q.clone(), p - q])?;
            Some((bundle, l))
        }
        _ => None,
    })
}

/// On quadrics of rank 3 and 4 the `H`-coefficient of `class`, if `class`
/// is an integral multiple of `H` (the only Cartier classes for `n ≥ 3`).
pub(crate) fn quadric_h_degree(rank: u32, class: &DivisorClass) -> Option<i64> {
    match rank {
        3 => integral_i64(&(&class.coeffs[0] / 2)),
        4 if class.coeffs[0] == class.coeffs[1] => integral_i64(&class.coeffs[0]),
        4 => None,
        _ => integral_i64(&class.coeffs[0]),
    }
}

/// Every case whose defining condition holds, evaluated independently so
/// that exclusivity can be checked.
pub(crate) fn matching_cases(
    model: &VarietyModel,
    l: &DivisorClass,
) -> Vec<(CaseLabel, Option<Normalization>)> {
    let coeff = |i: usize| integral_i64(&l.coeffs[i]);
    let mut out = Vec::new();
    let n = model.dim();
    match model.family() {
        Family::ProjectiveSpace { .. } => {
            if coeff(0) == Some(1) {
                out.push((CaseLabel::ProjectiveSpace, None));
            }
            if n == 2 && coeff(0) == Some(2) {
                out.push((CaseLabel::VeronesePlane, None));
            }
        }
        Family::SplitBundle { degrees } => {
            if let (Some(x), Some(y)) = (coeff(0), coeff(1)) {
                if let Some(norm) = scroll_normalization(degrees, x, y) {
                    out.push((CaseLabel::Scroll, Some(norm)));
                }
            }
        }
        Family::Quadric { rank, .. } => {
            if quadric_h_degree(*rank, l) == Some(1) {
                out.push((CaseLabel::Quadric, None));
            }
        }
        Family::GeneralizedCone { base, .. } => {
            let tautological = coeff(0) == Some(1);
            match base {
                ConeBase::P1 { a } if *a >= 3 && tautological => {
                    out.push((CaseLabel::ConeOverRationalCurve, None))
                }
                ConeBase::P2Conic if tautological => out.push((CaseLabel::ConeOverVeronese, None)),
                _ => {}
            }
        }
    }
    out
}

/// Presents `x ξ + y f` with fiber degree 1, swapping the rulings of
/// `P^1 × P^1` when that is the only way.
fn scroll_normalization(degrees: &[i64], x: i64, y: i64) -> Option<Normalization> {
    if x == 1 {
        return Some(twist_normalize(degrees, x, y, false));
    }
    if degrees.len() == 2 && degrees[0] == degrees[1] {
        let (x2, y2) = swap_rulings(degrees[0], x, y);
        if x2 == 1 {
            return Some(twist_normalize(&[0, 0], x2, y2, true));
        }
    }
    None
}

/// Classifies an ample integral polarization.
///
/// Returns `REJECT` with `hypothesis_fails` when `K + (n − 1)L` is
/// pseudo-effective. Cones over `(P^1, O(1))` and `(P^1, O(2))` and the
/// rank-4 quadric surface with a non-`H` polarization are classified
/// through the isomorphic projective space, quadric, or `P^1 × P^1`.
pub fn classify_polarized(model: &VarietyModel, l: &DivisorClass) -> Result<CaseReport> {
    let l = model.to_model_basis(l)?;
    require_integral(&l)?;
    if let Family::Quadric { rank, .. } = model.family() {
        if *rank <= 4 && quadric_h_degree(*rank, &l).is_none() {
            if let Some((iso, class)) = identify(model, &l)? {
                let mut report = classify_polarized(&iso, &class)?;
                report.identified_as = Some(iso.to_string());
                return Ok(report);
            }
            return Err(Error::Unsupported(format!(
                "only multiples of H are Cartier on {model}, got {l}"
            )));
        }
    }
    if let Family::GeneralizedCone { .. } = model.family() {
        if let Some((iso, class)) = identify(model, &l)? {
            let mut report = classify_polarized(&iso, &class)?;
            report.identified_as = Some(iso.to_string());
            return Ok(report);
        }
    }
    require_ample(model, &l)?;

    let mut report = CaseReport {
        label: CaseLabel::Reject,
        nefvalue: nefvalue(model, &l)?.value,
        delta: delta_genus(model, &l).ok().map(|r| r.delta),
        normalization: None,
        reject_reason: None,
        kobayashi_ochiai: kobayashi_ochiai(model, &l)?,
        identified_as: None,
    };
    if !hypothesis_high_nefvalue(model, &l)? {
        report.reject_reason = Some(RejectReason::HypothesisFails);
        return Ok(report);
    }
    let mut cases = matching_cases(model, &l);
    debug_assert!(cases.len() <= 1, "overlapping cases {cases:?}");
    match cases.pop() {
        Some((label, normalization)) => {
            report.label = label;
            report.normalization = normalization;
        }
        None => report.reject_reason = Some(RejectReason::NotInList),
    }
    Ok(report)
}
