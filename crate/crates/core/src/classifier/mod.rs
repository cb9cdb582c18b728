//! Decision procedures: the Kobayashi–Ochiai tests, classification of
//! polarized varieties and of log pairs with `K + Δ + (n − 1)L` not
//! pseudo-effective, the Hirzebruch prime-class table, and gluing of slc
//! varieties from projective bundles.

mod hirzebruch;
mod pairs;
mod polarized;
mod slc;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::model::{canonical_class, DivisorClass, VarietyModel};
use crate::rational::Rational;
use crate::Result;

pub use hirzebruch::{hirzebruch_case_table, HirzebruchCase, HirzebruchRow};
pub use pairs::{classify_pair, BoundaryComponent, BoundarySpec, PairCaseReport, PairLabel};
pub use polarized::{classify_polarized, kobayashi_ochiai, CaseLabel, CaseReport, KoLabel};
pub use slc::{
    slc_classify, slc_exclusions, DownstairsComponent, ExclusionRow, GluedModel, NodalCurve,
    SlcLabel, SlcReport,
};

/// Closed set of reasons a classifier can refuse an input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectReason {
    HypothesisFails,
    Pseff,
    DimensionConstraint,
    Parity,
    NotInList,
    UnsupportedBoundary,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::HypothesisFails => "hypothesis_fails",
            RejectReason::Pseff => "pseff",
            RejectReason::DimensionConstraint => "dimension_constraint",
            RejectReason::Parity => "parity",
            RejectReason::NotInList => "not_in_list",
            RejectReason::UnsupportedBoundary => "unsupported_boundary",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a split-bundle polarization was re-presented before reading off its
/// fiber degree: `ξ' = ξ + twist·f` (the bundle tensored by `O(twist)`), and
/// possibly the two rulings of `P^1 × P^1` exchanged first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub twist: i64,
    pub ruling_swapped: bool,
    /// Splitting type after the twist.
    pub degrees: Vec<i64>,
    /// `ξ'`-coefficient of the polarization.
    pub fiber_degree: i64,
    /// `f`-coefficient of the polarization after the twist, in `[0, fiber_degree)`.
    pub residue: i64,
}

/// Rewrites `L = x ξ + y f` (with `x ≥ 1`) as `x ξ' + y' f`, `ξ' = ξ + t f`,
/// `0 ≤ y' < x`.
pub(crate) fn twist_normalize(degrees: &[i64], x: i64, y: i64, swapped: bool) -> Normalization {
    debug_assert!(x >= 1);
    let twist = y.div_euclid(x);
    Normalization {
        twist,
        ruling_swapped: swapped,
        degrees: degrees.iter().map(|a| a + twist).collect(),
        fiber_degree: x,
        residue: y.rem_euclid(x),
    }
}

/// On `P(O(a) ⊕ O(a))`, the class `x ξ + y f` written in the presentation
/// where the other ruling is the fiber: `(xa + y) ξ'' + x f''` over the
/// trivial bundle.
pub(crate) fn swap_rulings(a: i64, x: i64, y: i64) -> (i64, i64) {
    (x * a + y, x)
}

/// `K + Δ + (n − 1) L`.
pub(crate) fn adjoint_class(
    model: &VarietyModel,
    boundary: &DivisorClass,
    l: &DivisorClass,
) -> Result<DivisorClass> {
    let n1 = Rational::from_integer(model.dim() as i64 - 1);
    canonical_class(model).add(boundary)?.add_scaled(&n1, l)
}

pub(crate) fn integral_i64(value: &Rational) -> Option<i64> {
    value.is_integer().then(|| value.to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_normalization_residue() {
        let n = twist_normalize(&[2, 1], 3, -4, false);
        assert_eq!((n.twist, n.residue), (-2, 2));
        assert_eq!(n.degrees, vec![0, -1]);
        let n = twist_normalize(&[1, 1], 1, 5, false);
        assert_eq!((n.twist, n.residue, n.degrees.clone()), (5, 0, vec![6, 6]));
    }

    #[test]
    fn ruling_swap_on_product() {
        // 2ξ − 3f on P(O(2) ⊕ O(2)) is ξ'' + 2f'' in the other ruling
        assert_eq!(swap_rulings(2, 2, -3), (1, 2));
    }

    #[test]
    fn reason_strings() {
        for reason in [
            RejectReason::HypothesisFails,
            RejectReason::Pseff,
            RejectReason::DimensionConstraint,
            RejectReason::Parity,
            RejectReason::NotInList,
            RejectReason::UnsupportedBoundary,
        ] {
            let json = serde_json::to_string(&reason).unwrap();
            assert_eq!(json, format!("\"{}\"", reason.as_str()));
        }
    }
}
