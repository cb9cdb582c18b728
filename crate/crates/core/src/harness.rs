//! Exhaustive enumeration of a bounded universe of polarized models and the
//! sweep that checks the classification statements over it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::classifier::{
    classify_polarized, slc_classify, BoundarySpec, CaseLabel, RejectReason, SlcLabel,
};
use crate::cones::{hypothesis_high_nefvalue, is_ample, nefvalue, oracle_grid, DEFAULT_K_MAX};
use crate::model::{ConeBase, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniverseBounds {
    pub n_min: u32,
    pub n_max: u32,
    pub degree_max: i64,
    pub coeff_max: i64,
}

impl Default for UniverseBounds {
    fn default() -> Self {
        UniverseBounds {
            n_min: 2,
            n_max: 4,
            degree_max: 4,
            coeff_max: 3,
        }
    }
}

impl UniverseBounds {
    pub fn new(n_min: u32, n_max: u32, degree_max: i64, coeff_max: i64) -> Result<Self> {
        let bounds = UniverseBounds {
            n_min,
            n_max,
            degree_max,
            coeff_max,
        };
        bounds.validate()?;
        Ok(bounds)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max || self.degree_max < 1 || self.coeff_max < 1 {
            return Err(Error::Precondition(format!(
                "bounds need 2 ≤ n_min ≤ n_max and positive caps, got {self}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for UniverseBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.n_min, self.n_max, self.degree_max, self.coeff_max
        )
    }
}

impl FromStr for UniverseBounds {
    type Err = Error;

    /// `n_min,n_max,degree_max,coeff_max`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "bounds must be n_min,n_max,degree_max,coeff_max, got {s:?}"
            )));
        }
        let int = |p: &str| -> Result<i64> {
            p.parse()
                .map_err(|_| Error::Parse(format!("bad bound {p:?} in {s:?}")))
        };
        let n_min = int(parts[0])?;
        let n_max = int(parts[1])?;
        if !(0..=u32::MAX as i64).contains(&n_min) || !(0..=u32::MAX as i64).contains(&n_max) {
            return Err(Error::Parse(format!(
                "dimension bounds out of range in {s:?}"
            )));
        }
        UniverseBounds::new(n_min as u32, n_max as u32, int(parts[2])?, int(parts[3])?)
    }
}

/// Identifies `(model, L)` pairs that are the same polarized variety in
/// different presentations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum CanonicalForm {
    Projective {
        n: u32,
        d: i64,
    },
    Quadric {
        n: u32,
        rank: u32,
        d: i64,
    },
    /// `P^1 × P^1` with `O(lo, hi)`, `lo ≤ hi`.
    ProductSurface {
        lo: i64,
        hi: i64,
    },
    /// Twist-normalized split bundle: degrees, fiber degree, residue.
    Bundle {
        degrees: Vec<i64>,
        x: i64,
        residue: i64,
    },
    Cone {
        n: u32,
        base: ConeBase,
        c: i64,
    },
}

fn canonical_form(model: &VarietyModel, l: &DivisorClass) -> CanonicalForm {
    let int = |v: &Rational| v.to_i64().expect("enumerated classes are small integers");
    match model.family() {
        Family::ProjectiveSpace { n } => CanonicalForm::Projective {
            n: *n,
            d: int(&l.coeffs[0]),
        },
        Family::Quadric { n: 2, rank: 4 } => {
            let (p, q) = (int(&l.coeffs[0]), int(&l.coeffs[1]));
            CanonicalForm::ProductSurface {
                lo: p.min(q),
                hi: p.max(q),
            }
        }
        Family::Quadric { n, rank } => CanonicalForm::Quadric {
            n: *n,
            rank: *rank,
            d: int(&l.coeffs[0]) / if *rank == 3 { 2 } else { 1 },
        },
        Family::SplitBundle { degrees } => {
            let (x, y) = (int(&l.coeffs[0]), int(&l.coeffs[1]));
            if degrees.len() == 2 && degrees[0] == degrees[1] {
                // bidegree with respect to the rulings f and ξ − a f
                let other = x * degrees[0] + y;
                return CanonicalForm::ProductSurface {
                    lo: x.min(other),
                    hi: x.max(other),
                };
            }
            let twist = y.div_euclid(x);
            CanonicalForm::Bundle {
                degrees: degrees.iter().map(|a| a + twist).collect(),
                x,
                residue: y.rem_euclid(x),
            }
        }
        Family::GeneralizedCone { dim, base } => {
            let c = int(&l.coeffs[0]);
            match base {
                ConeBase::P1 { a: 1 } => CanonicalForm::Projective { n: *dim, d: c },
                ConeBase::P1 { a: 2 } => CanonicalForm::Quadric {
                    n: *dim,
                    rank: 3,
                    d: c,
                },
                _ => CanonicalForm::Cone {
                    n: *dim,
                    base: *base,
                    c,
                },
            }
        }
    }
}

/// Non-increasing sequences of length `len` with entries in `lo..=hi`.
pub fn degree_sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, lo: i64, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in (lo..=cap).rev() {
            prefix.push(v);
            rec(len, lo, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every `(model, ample integral L)` within the bounds, in a fixed order,
/// with isomorphic presentations emitted once (first occurrence wins).
///
/// Per dimension `n`: projective spaces with `L = dH`; quadrics of every
/// rank with `L = dH`; split bundles with degrees in `1..=degree_max` and
/// `L = xξ + yf`, `1 ≤ x ≤ coeff_max`, `|y| ≤ coeff_max·degree_max`, ample;
/// generalized cones over `(P^1, O(a))`, `a ≤ degree_max`, and over
/// `(P^2, O(2))` for `n ≥ 3`, with `L = [L]`.
pub fn enumerate_universe(bounds: &UniverseBounds) -> Result<Vec<(VarietyModel, DivisorClass)>> {
    bounds.validate()?;
    let mut raw: Vec<(VarietyModel, DivisorClass)> = Vec::new();
    for n in bounds.n_min..=bounds.n_max {
        let p = VarietyModel::projective_space(n)?;
        for d in 1..=bounds.degree_max {
            raw.push((p.clone(), p.class_from_ints(&[d])?));
        }
        for rank in 3..=n + 2 {
            let q = VarietyModel::quadric(n, rank)?;
            for d in 1..=bounds.degree_max {
                let h = q.tautological().scale(&Rational::from_integer(d));
                raw.push((q.clone(), h));
            }
        }
        for degrees in degree_sequences(n as usize, 1, bounds.degree_max) {
            let m = VarietyModel::split_bundle(&degrees)?;
            let y_cap = bounds.coeff_max * bounds.degree_max;
            for x in 1..=bounds.coeff_max {
                for y in -y_cap..=y_cap {
                    if x * degrees[degrees.len() - 1] + y >= 1 {
                        raw.push((m.clone(), m.class_from_ints(&[x, y])?));
                    }
                }
            }
        }
        for a in 1..=bounds.degree_max {
            let cone = VarietyModel::cone_over_p1(n, a as u32)?;
            let l = cone.tautological();
            raw.push((cone, l));
        }
        if n >= 3 {
            let cone = VarietyModel::cone_over_conic(n)?;
            let l = cone.tautological();
            raw.push((cone, l));
        }
    }
    let mut seen = HashSet::new();
    Ok(raw
        .into_iter()
        .filter(|(m, l)| seen.insert(canonical_form(m, l)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bounds: UniverseBounds,
    pub total_models: usize,
    pub hypothesis_count: usize,
    pub label_histogram: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    /// Wall time; kept out of the JSON so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, label: CaseLabel) -> usize {
        self.label_histogram
            .get(label.as_str())
            .copied()
            .unwrap_or(0)
    }
}

struct Collector {
    failures: Vec<Failure>,
}

impl Collector {
    fn fail(
        &mut self,
        check: &str,
        input: String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.failures.push(Failure {
            check: check.into(),
            input,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn describe(model: &VarietyModel, l: &DivisorClass) -> String {
    format!("{model}, L = {l}")
}

/// Runs the classification over the whole universe and checks:
/// (1) a case label is assigned exactly when `K + (n − 1)L` is not
/// pseudo-effective; (2) `τ(L) > n − 1` whenever it is not; (3) `Δ = 0` on
/// every cone, quadric and Veronese label; (4) closed-form cones agree with
/// the section and curve oracles on every split bundle with degrees in
/// `0..=degree_max`; (5) slc gluing succeeds exactly on even fiber counts.
/// Failures are collected, never fatal.
pub fn verify_theorems(bounds: &UniverseBounds) -> Result<VerificationReport> {
    let start = Instant::now();
    let universe = enumerate_universe(bounds)?;
    let mut out = Collector {
        failures: Vec::new(),
    };
    let mut histogram: BTreeMap<String, usize> = CaseLabel::ALL
        .iter()
        .map(|l| (l.as_str().to_string(), 0))
        .collect();
    let mut hypothesis_count = 0;

    for (model, l) in &universe {
        let input = describe(model, l);
        match is_ample(model, l) {
            Ok(true) => {}
            other => {
                out.fail("ample", input, "ample", format!("{other:?}"));
                continue;
            }
        }
        let hypothesis = match hypothesis_high_nefvalue(model, l) {
            Ok(h) => h,
            Err(e) => {
                out.fail("hypothesis", input, "computable", e);
                continue;
            }
        };
        let report = match classify_polarized(model, l) {
            Ok(r) => r,
            Err(e) => {
                out.fail("classify", input, "a report", e);
                continue;
            }
        };
        *histogram
            .entry(report.label.as_str().to_string())
            .or_default() += 1;
        let labelled = report.label != CaseLabel::Reject;
        if labelled != hypothesis {
            out.fail(
                "label_iff_hypothesis",
                input.clone(),
                if hypothesis { "a case label" } else { "REJECT" },
                report.label,
            );
        }
        if report.reject_reason == Some(RejectReason::NotInList) {
            out.fail("exhaustive", input.clone(), "a case label", "not_in_list");
        }
        if hypothesis {
            hypothesis_count += 1;
            let bound = Rational::from_integer(model.dim() as i64 - 1);
            match nefvalue(model, l) {
                Ok(t) if t.value > bound => {}
                Ok(t) => out.fail(
                    "nefvalue_above_n_minus_1",
                    input.clone(),
                    format!("> {bound}"),
                    t.value,
                ),
                Err(e) => out.fail(
                    "nefvalue_above_n_minus_1",
                    input.clone(),
                    format!("> {bound}"),
                    e,
                ),
            }
        }
        if report.label.requires_delta_zero() && report.delta != Some(0) {
            out.fail("delta_zero", input, "Δ = 0", format!("{:?}", report.delta));
        }
    }

    for n in bounds.n_min..=bounds.n_max {
        for degrees in degree_sequences(n as usize, 0, bounds.degree_max) {
            let model = VarietyModel::split_bundle(&degrees)?;
            let rows = oracle_grid(&model, bounds.coeff_max, DEFAULT_K_MAX)?;
            for row in rows.into_iter().filter(|r| !r.agree) {
                out.fail(
                    "cone_oracle",
                    format!("{model}, {} of {}", row.test, row.class),
                    row.oracle,
                    row.closed_form,
                );
            }
            if degrees[degrees.len() - 1] < 1 {
                continue;
            }
            for k in 1..=4 {
                let input = format!("{model}, {k} conductor fibers");
                match slc_classify(&model, &BoundarySpec::fibers(k), None) {
                    Ok(r) => {
                        let glued = r.label == SlcLabel::Glued;
                        if glued != (k % 2 == 0) {
                            out.fail("slc_parity", input.clone(), k % 2 == 0, glued);
                        }
                        if let Some(g) = r.glued {
                            if !g.check_invariants() {
                                out.fail(
                                    "slc_invariants",
                                    input,
                                    "2-to-1 conductor",
                                    format!("{g:?}"),
                                );
                            }
                        }
                    }
                    Err(e) => out.fail("slc_parity", input, "a report", e),
                }
            }
        }
    }

    Ok(VerificationReport {
        bounds: *bounds,
        total_models: universe.len(),
        hypothesis_count,
        label_histogram: histogram,
        failures: out.failures,
        elapsed: start.elapsed(),
    })
}
