//! Section counts and the Δ-genus `n + L^n − h^0(L)`.

use serde::Serialize;

use crate::chow::binomial;
use crate::model::{intersection_top, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::resolution::cone_pushforward;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaGenusReport {
    pub n: usize,
    #[serde(rename = "L_top")]
    pub top_self_intersection: Rational,
    pub h0: u64,
    pub delta: i64,
}

fn to_int(value: &Rational, what: &str) -> Result<i64> {
    if !value.is_integer() {
        return Err(Error::NotIntegral(format!("{what} = {value}")));
    }
    value.to_i64().ok_or(Error::Overflow("h0"))
}

fn overflow<T>(value: Option<T>) -> Result<T> {
    value.ok_or(Error::Overflow("h0"))
}

/// `h^0(P^n, O(d))`.
fn projective_space_h0(n: usize, d: i64) -> Result<u64> {
    if d < 0 {
        return Ok(0);
    }
    overflow(binomial(n as u64 + d as u64, n as u64))
}

/// `h^0(Q, O_Q(d))` for a quadric hypersurface `Q ⊂ P^{n+1}`, from
/// `0 → O(d − 2) → O(d) → O_Q(d) → 0`.
fn quadric_h0(n: usize, d: i64) -> Result<u64> {
    let ambient = projective_space_h0(n + 1, d)?;
    let cut = projective_space_h0(n + 1, d - 2)?;
    Ok(ambient - cut)
}

/// Number of global sections of an integral class.
///
/// Supported: every `dH` on projective spaces and quadrics (on quadrics of
/// rank 3 and 4 only multiples of `H`), every `xξ + yf` with `x ≥ 0` on
/// split bundles, and the polarization `[L]` on generalized cones.
pub fn h0(model: &VarietyModel, class: &DivisorClass) -> Result<u64> {
    let class = model.to_model_basis(class)?;
    let n = model.dim();
    match model.family() {
        Family::ProjectiveSpace { .. } => projective_space_h0(n, to_int(&class.coeffs[0], "d")?),
        Family::SplitBundle { .. } => {
            let x = to_int(&class.coeffs[0], "x")?;
            let y = to_int(&class.coeffs[1], "y")?;
            if x < 0 {
                return Err(Error::NegativeFiberDegree(format!(
                    "h0 of {class} with ξ-coefficient {x} < 0"
                )));
            }
            let x = u32::try_from(x).map_err(|_| Error::Overflow("h0"))?;
            overflow(model.bundle_chow().expect("split bundle").h0(x, y))
        }
        Family::Quadric { rank, .. } => {
            let d = match rank {
                3 => &class.coeffs[0] / 2,
                4 if class.coeffs[0] == class.coeffs[1] => class.coeffs[0].clone(),
                4 => {
                    return Err(Error::Unsupported(format!(
                        "h0 of non-H class {class} on {model}"
                    )))
                }
                _ => class.coeffs[0].clone(),
            };
            if !d.is_integer() {
                return Err(Error::Unsupported(format!(
                    "h0 of non-H class {class} on {model}"
                )));
            }
            quadric_h0(n, to_int(&d, "d")?)
        }
        Family::GeneralizedCone { .. } => {
            if class != model.tautological() {
                return Err(Error::Unsupported(format!(
                    "h0 on {model} is only available for [L], not {class}"
                )));
            }
            let res = cone_pushforward(model)?;
            overflow(res.h0_of_polarization())
        }
    }
}

/// `L^n`, through the resolution on generalized cones.
fn top_power(model: &VarietyModel, l: &DivisorClass) -> Result<Rational> {
    match model.family() {
        Family::GeneralizedCone { .. } => {
            model.check(l)?;
            let res = cone_pushforward(model)?;
            let scale = (0..model.dim()).fold(Rational::one(), |acc, _| acc * &l.coeffs[0]);
            Ok(res.cone_degree() * scale)
        }
        _ => intersection_top(model, &vec![l.clone(); model.dim()]),
    }
}

pub fn delta_genus(model: &VarietyModel, l: &DivisorClass) -> Result<DeltaGenusReport> {
    let l = model.to_model_basis(l)?;
    let sections = h0(model, &l)?;
    let top = top_power(model, &l)?;
    let n = model.dim();
    let delta = &(&top + n as i64) - sections as i64;
    Ok(DeltaGenusReport {
        n,
        delta: to_int(&delta, "Δ")?,
        top_self_intersection: top,
        h0: sections,
    })
}
