use std::fmt;

use serde::Serialize;

use super::pairs::{classify_pair, BoundaryComponent, BoundarySpec, PairLabel};
use super::RejectReason;
use crate::model::{intersection_top, DivisorClass, VarietyModel};
use crate::rational::Rational;
use crate::{Error, Result};

/// A rational curve with `m` nodes, each obtained by identifying a pair of
/// marked points on `P^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodalCurve {
    pub smooth_genus: u32,
    pub pairings: Vec<(usize, usize)>,
}

/// An irreducible component of the conductor downstairs, with the two
/// upstairs fibers mapping onto it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DownstairsComponent {
    pub preimages: (usize, usize),
}

/// A non-normal variety glued from `P(V)` over `P^1` along pairs of fibers:
/// the projective bundle over the nodal curve obtained by identifying the
/// paired base points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedModel {
    pub node_count: usize,
    pub base: NodalCurve,
    pub bundle_degrees: Vec<i64>,
    /// The `2m` fiber classes of the conductor on the normalization.
    pub conductor_components: Vec<DivisorClass>,
    pub downstairs_components: Vec<DownstairsComponent>,
    /// `(L|_D̄)^{n−1}` on the upstairs conductor.
    pub conductor_degree: Rational,
}

impl GluedModel {
    /// Conductor bookkeeping: `2m` upstairs components, `m` downstairs, each
    /// downstairs component covered by exactly two upstairs ones, every
    /// upstairs component used once.
    pub fn check_invariants(&self) -> bool {
        let m = self.node_count;
        if self.conductor_components.len() != 2 * m
            || self.downstairs_components.len() != m
            || self.base.pairings.len() != m
        {
            return false;
        }
        let mut used = vec![0u8; 2 * m];
        for (component, pair) in self.downstairs_components.iter().zip(&self.base.pairings) {
            let (i, j) = component.preimages;
            if (i, j) != *pair || i == j || i >= 2 * m || j >= 2 * m {
                return false;
            }
            used[i] += 1;
            used[j] += 1;
        }
        used.iter().all(|&u| u == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlcLabel {
    #[serde(rename = "GLUED")]
    Glued,
    #[serde(rename = "REJECT")]
    Reject,
}

impl fmt::Display for SlcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlcLabel::Glued => "GLUED",
            SlcLabel::Reject => "REJECT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlcReport {
    pub label: SlcLabel,
    pub glued: Option<GluedModel>,
    pub reject_reason: Option<RejectReason>,
    pub conductor_degree: Rational,
}

fn default_pairing(k: usize) -> Vec<(usize, usize)> {
    (0..k / 2).map(|i| (2 * i, 2 * i + 1)).collect()
}

fn check_pairing(pairing: &[(usize, usize)], k: usize) -> Result<()> {
    let mut seen = vec![false; k];
    for &(i, j) in pairing {
        for idx in [i, j] {
            if idx >= k || seen[idx] {
                return Err(Error::Precondition(format!(
                    "pairing {pairing:?} is not a perfect matching of {k} fibers"
                )));
            }
            seen[idx] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Precondition(format!(
            "pairing {pairing:?} is not a perfect matching of {k} fibers"
        )));
    }
    Ok(())
}

/// Glues `P(V)` along its conductor fibers with `L = ξ`.
///
/// The normalization of the downstairs conductor receives a degree-2 map
/// from the upstairs conductor, so `(L|_D̄)^{n−1}` must be even. An odd total
/// is rejected with `parity`; otherwise the `2m` fibers are paired into `m`
/// nodes of the base, by consecutive input order unless `pairing` is given.
pub fn slc_classify(
    model: &VarietyModel,
    conductor: &BoundarySpec,
    pairing: Option<&[(usize, usize)]>,
) -> Result<SlcReport> {
    let degrees = model
        .bundle_degrees()
        .ok_or_else(|| {
            Error::Precondition(format!("slc gluing needs a split bundle, not {model}"))
        })?
        .to_vec();
    if let Some(c) = conductor
        .components
        .iter()
        .find(|c| **c != BoundaryComponent::Fiber)
    {
        return Err(Error::InvalidBoundary(format!(
            "conductor contains a non-fiber component {c:?}"
        )));
    }
    let k = conductor.components.len();
    if k == 0 {
        return Err(Error::Precondition(
            "the conductor of a non-normal slc variety is non-empty".into(),
        ));
    }
    let xi = model.tautological();
    let pair = classify_pair(model, conductor, &xi)?;
    if pair.label != PairLabel::ScrollFibers {
        return Err(Error::Precondition(format!(
            "gluing needs a (2.i) pair, got {}",
            pair.label
        )));
    }
    let fiber = model.class_from_ints(&[0, 1])?;
    let mut factors = vec![xi; model.dim() - 1];
    factors.push(fiber.clone());
    let per_fiber = intersection_top(model, &factors)?;
    let conductor_degree = per_fiber * k as i64;
    if !conductor_degree.is_even_integer() {
        return Ok(SlcReport {
            label: SlcLabel::Reject,
            glued: None,
            reject_reason: Some(RejectReason::Parity),
            conductor_degree,
        });
    }
    let pairs = match pairing {
        Some(p) => {
            check_pairing(p, k)?;
            p.to_vec()
        }
        None => default_pairing(k),
    };
    let m = k / 2;
    let glued = GluedModel {
        node_count: m,
        base: NodalCurve {
            smooth_genus: 0,
            pairings: pairs.clone(),
        },
        bundle_degrees: degrees,
        conductor_components: vec![fiber; k],
        downstairs_components: pairs
            .iter()
            .map(|&preimages| DownstairsComponent { preimages })
            .collect(),
        conductor_degree: conductor_degree.clone(),
    };
    debug_assert!(glued.check_invariants());
    Ok(SlcReport {
        label: SlcLabel::Glued,
        glued: Some(glued),
        reject_reason: None,
        conductor_degree,
    })
}

/// One verdict on whether a pair case can be the normalization of a
/// non-normal slc variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclusionRow {
    pub clr_case: PairLabel,
    pub model: String,
    pub excluded: bool,
    pub reason: String,
    /// Degree of `L` on the upstairs conductor, `(L|_D̄)^{n−1}`.
    pub conductor_degree: Rational,
}

fn verdict(
    clr_case: PairLabel,
    model: &VarietyModel,
    what: &str,
    degree: Rational,
) -> ExclusionRow {
    let excluded = !degree.is_even_integer();
    let reason = if excluded {
        format!("{what} = {degree} is odd")
    } else {
        format!("{what} = {degree} is even")
    };
    ExclusionRow {
        clr_case,
        model: model.to_string(),
        excluded,
        reason,
        conductor_degree: degree,
    }
}

/// `L^{n−1} · D` for a conductor `D`.
fn conductor_degree(model: &VarietyModel, l: &DivisorClass, d: &DivisorClass) -> Result<Rational> {
    let mut factors = vec![l.clone(); model.dim() - 1];
    factors.push(d.clone());
    intersection_top(model, &factors)
}

/// Recomputes, for each pair case, the degree of `L` on the conductor that
/// the normalization would have to carry, and excludes the odd ones.
pub fn slc_exclusions() -> Result<Vec<ExclusionRow>> {
    let mut rows = Vec::new();
    for n in 2..=5 {
        let p = VarietyModel::projective_space(n)?;
        let h = p.tautological();
        rows.push(verdict(
            PairLabel::ProjectiveSpaceHyperplane,
            &p,
            "H^{n-1}·H",
            conductor_degree(&p, &h, &h)?,
        ));
    }
    for degrees in [vec![1, 1], vec![1, 1, 1], vec![2, 1, 1]] {
        let m = VarietyModel::split_bundle(&degrees)?;
        let xi = m.tautological();
        let per_fiber = conductor_degree(&m, &xi, &m.class_from_ints(&[0, 1])?)?;
        rows.push(verdict(
            PairLabel::ScrollFibers,
            &m,
            "ξ^{n-1}·(2 fibers)",
            per_fiber * 2,
        ));
    }
    for a in 2..=5 {
        let m = VarietyModel::split_bundle(&[a, 1])?;
        let section = m.hirzebruch_class(1, 0)?;
        rows.push(verdict(
            PairLabel::NegativeSection,
            &m,
            "ξ·C_0",
            conductor_degree(&m, &m.tautological(), &section)?,
        ));
    }
    for n in 2..=5 {
        let q = VarietyModel::quadric(n, 3)?;
        let generator = q.class_from_ints(&[1])?;
        rows.push(verdict(
            PairLabel::QuadricRankThree,
            &q,
            "H^{n-1}·(½H)",
            conductor_degree(&q, &q.tautological(), &generator)?,
        ));
    }
    for n in 2..=5 {
        let q = VarietyModel::quadric(n, 4)?;
        let ruling = q.class_from_ints(&[1, 0])?;
        rows.push(verdict(
            PairLabel::QuadricRankFour,
            &q,
            "H^{n-1}·(1,0)",
            conductor_degree(&q, &q.tautological(), &ruling)?,
        ));
    }
    Ok(rows)
}
