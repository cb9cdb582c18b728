//! Nef and pseudo-effective cones, ampleness, nefvalues, and the independent
//! oracles used to cross-check them on split bundles.

use serde::Serialize;

use crate::model::{canonical_class, CurveClass, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::{Error, Result};

/// A closed polyhedral cone in a lattice of rank 1 or 2, given by its
/// extremal ray generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeDescription {
    pub rank: usize,
    pub generators: Vec<DivisorClass>,
}

fn cross(u: &[Rational], v: &[Rational]) -> Rational {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

/// Scales a non-zero rational vector to a primitive integral one with the
/// same direction.
fn primitive(coeffs: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return coeffs.to_vec();
    }
    ints.into_iter()
        .map(|v| Rational::from_bigint(v / &gcd))
        .collect()
}

impl ConeDescription {
    fn new(generators: Vec<DivisorClass>) -> Self {
        let rank = generators[0].coeffs.len();
        debug_assert_eq!(rank, generators.len());
        if rank == 2 {
            debug_assert!(!cross(&generators[0].coeffs, &generators[1].coeffs).is_zero());
        }
        ConeDescription { rank, generators }
    }

    /// Closed-cone membership (facets included).
    pub fn contains(&self, class: &DivisorClass) -> Result<bool> {
        let g = &self.generators;
        if class.basis != g[0].basis {
            return Err(Error::BasisMismatch {
                expected: g[0].basis,
                found: class.basis,
            });
        }
        Ok(match self.rank {
            1 => class.coeffs[0].is_zero() || class.coeffs[0].signum() == g[0].coeffs[0].signum(),
            _ => {
                // class = α g0 + β g1 by Cramer's rule
                let det = cross(&g[0].coeffs, &g[1].coeffs);
                let alpha = cross(&class.coeffs, &g[1].coeffs) / &det;
                let beta = cross(&g[0].coeffs, &class.coeffs) / &det;
                !alpha.is_negative() && !beta.is_negative()
            }
        })
    }

    /// Extremal rays of the dual cone, as primitive curve classes. For a
    /// rank-2 cone the `i`-th ray vanishes on generator `i`.
    pub fn dual_rays(&self) -> Vec<CurveClass> {
        let basis = self.generators[0].basis;
        let g: Vec<&[Rational]> = self
            .generators
            .iter()
            .map(|c| c.coeffs.as_slice())
            .collect();
        match self.rank {
            1 => {
                let sign = if g[0][0].is_negative() { -1 } else { 1 };
                vec![CurveClass::from_ints(basis, &[sign])]
            }
            _ => (0..2)
                .map(|i| {
                    let own = g[i];
                    let other = g[1 - i];
                    let mut phi = vec![own[1].clone(), -&own[0]];
                    let pairing: Rational = phi.iter().zip(other).map(|(a, b)| a * b).sum();
                    if pairing.is_negative() {
                        phi = phi.into_iter().map(|c| -c).collect();
                    }
                    CurveClass {
                        basis,
                        coeffs: primitive(&phi),
                    }
                })
                .collect(),
        }
    }
}

pub fn nef_cone(model: &VarietyModel) -> ConeDescription {
    let gens: Vec<Vec<i64>> = match model.family() {
        Family::SplitBundle { degrees } => vec![vec![0, 1], vec![1, -degrees[degrees.len() - 1]]],
        Family::Quadric { rank: 4, .. } => vec![vec![1, 0], vec![0, 1]],
        _ => vec![vec![1]],
    };
    cone_from_ints(model, gens)
}

pub fn pseff_cone(model: &VarietyModel) -> ConeDescription {
    let gens: Vec<Vec<i64>> = match model.family() {
        Family::SplitBundle { degrees } => vec![vec![0, 1], vec![1, -degrees[0]]],
        Family::Quadric { rank: 4, .. } => vec![vec![1, 0], vec![0, 1]],
        _ => vec![vec![1]],
    };
    cone_from_ints(model, gens)
}

fn cone_from_ints(model: &VarietyModel, gens: Vec<Vec<i64>>) -> ConeDescription {
    ConeDescription::new(
        gens.iter()
            .map(|g| model.class_from_ints(g).expect("basis rank"))
            .collect(),
    )
}

pub fn is_nef(model: &VarietyModel, class: &DivisorClass) -> Result<bool> {
    nef_cone(model).contains(&model.to_model_basis(class)?)
}

pub fn is_pseff(model: &VarietyModel, class: &DivisorClass) -> Result<bool> {
    pseff_cone(model).contains(&model.to_model_basis(class)?)
}

/// Strict interior of the nef cone.
pub fn is_ample(model: &VarietyModel, class: &DivisorClass) -> Result<bool> {
    let class = model.to_model_basis(class)?;
    for ray in nef_cone(model).dual_rays() {
        if !class.dot(&ray)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn require_ample(model: &VarietyModel, class: &DivisorClass) -> Result<()> {
    if !is_ample(model, class)? {
        return Err(Error::NotAmple(format!("{class} on {model}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NefvalueResult {
    pub value: Rational,
    pub witness_ray: CurveClass,
    pub finite: bool,
}

/// `τ(L) = min { t : K + tL nef }` for ample `L`.
///
/// Each dual ray `C` of the nef cone gives the constraint `t ≥ −K·C / L·C`;
/// the nefvalue is the largest of these, and the witness is the ray that
/// attains it. On quadrics of rank 3 and 4 only multiples of `H` are
/// accepted.
pub fn nefvalue(model: &VarietyModel, l: &DivisorClass) -> Result<NefvalueResult> {
    let l = model.to_model_basis(l)?;
    if let Family::Quadric { rank, .. } = model.family() {
        let h_multiple = match rank {
            4 => l.coeffs[0] == l.coeffs[1],
            _ => true,
        };
        if !h_multiple {
            return Err(Error::Unsupported(format!(
                "nefvalue of non-H class {l} on {model}"
            )));
        }
    }
    require_ample(model, &l)?;
    let k = canonical_class(model);
    let mut best: Option<(Rational, CurveClass)> = None;
    for ray in nef_cone(model).dual_rays() {
        let t = -(k.dot(&ray)? / l.dot(&ray)?);
        if best.as_ref().is_none_or(|(b, _)| t > *b) {
            best = Some((t, ray));
        }
    }
    let (value, witness_ray) = best.expect("nef cone has dual rays");
    Ok(NefvalueResult {
        value,
        witness_ray,
        finite: true,
    })
}

/// `K + (n − 1) L` not pseudo-effective.
pub fn hypothesis_high_nefvalue(model: &VarietyModel, l: &DivisorClass) -> Result<bool> {
    let l = model.to_model_basis(l)?;
    require_ample(model, &l)?;
    let n = Rational::from_integer(model.dim() as i64 - 1);
    let adjoint = canonical_class(model).add_scaled(&n, &l)?;
    Ok(!is_pseff(model, &adjoint)?)
}

/// Curve-enumeration nef test on a split bundle: non-negative on the fiber
/// line and on every coordinate section.
pub fn oracle_nef_curves(model: &VarietyModel, class: &DivisorClass) -> Result<bool> {
    let class = model.to_model_basis(class)?;
    let line = model.fiber_line().ok_or_else(|| {
        Error::Unsupported(format!("curve oracle needs a split bundle, not {model}"))
    })?;
    let mut curves = vec![line];
    curves.extend(model.coordinate_sections());
    for c in &curves {
        if class.dot(c)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degrees of the monomials of `Sym^d(⊕ O(a_i))` for every `d` up to a cap,
/// found by enumerating summand multiplicities.
#[derive(Debug, Clone)]
pub struct SectionOracle {
    min_degree: i64,
    max_degree: i64,
    /// `reachable[d][S − d·min_degree]`: some monomial of `Sym^d` has degree `S`.
    reachable: Vec<Vec<bool>>,
}

impl SectionOracle {
    pub fn new(degrees: &[i64], max_sym: u32) -> Self {
        let min_degree = *degrees.iter().min().expect("non-empty");
        let max_degree = *degrees.iter().max().expect("non-empty");
        let span = (max_degree - min_degree) as usize;
        let mut reachable: Vec<Vec<bool>> = (0..=max_sym as usize)
            .map(|d| vec![false; d * span + 1])
            .collect();
        reachable[0][0] = true;
        for &a in degrees {
            let shift = (a - min_degree) as usize;
            for d in 1..=max_sym as usize {
                let (done, rest) = reachable.split_at_mut(d);
                let prev = &done[d - 1];
                let cur = &mut rest[0];
                for (idx, slot) in prev.iter().enumerate() {
                    if *slot {
                        cur[idx + shift] = true;
                    }
                }
            }
        }
        SectionOracle {
            min_degree,
            max_degree,
            reachable,
        }
    }

    pub fn max_sym(&self) -> u32 {
        (self.reachable.len() - 1) as u32
    }

    /// `h^0(Sym^x V ⊗ O(y)) > 0` on `P^1`.
    pub fn has_sections(&self, x: i64, y: i64) -> bool {
        if x < 0 {
            return false;
        }
        let row = &self.reachable[x as usize];
        let base = x * self.min_degree;
        row.iter()
            .enumerate()
            .any(|(idx, &hit)| hit && base + idx as i64 + y >= 0)
    }

    /// Some multiple `k ≤ k_max` of `x ξ + y f` has a section.
    pub fn some_multiple_effective(&self, x: i64, y: i64, k_max: u32) -> bool {
        (1..=k_max as i64).any(|k| {
            let d = k * x;
            assert!(
                d <= self.max_sym() as i64,
                "oracle built for Sym^{} only",
                self.max_sym()
            );
            self.has_sections(d, k * y)
        })
    }

    pub fn degree_range(&self) -> (i64, i64) {
        (self.min_degree, self.max_degree)
    }
}

/// Section-counting pseudo-effectivity oracle on a split bundle: true iff
/// some `k ≤ k_max` has `h^0(k·class) > 0`.
pub fn oracle_pseff_sections(
    model: &VarietyModel,
    class: &DivisorClass,
    k_max: u32,
) -> Result<bool> {
    let degrees = model.bundle_degrees().ok_or_else(|| {
        Error::Unsupported(format!("section oracle needs a split bundle, not {model}"))
    })?;
    if k_max == 0 {
        return Err(Error::Precondition("k_max must be at least 1".into()));
    }
    let class = model.to_model_basis(class)?;
    if !class.is_integral() {
        return Err(Error::NotIntegral(class.to_string()));
    }
    let x = class.coeffs[0].to_i64().ok_or(Error::Overflow("oracle"))?;
    let y = class.coeffs[1].to_i64().ok_or(Error::Overflow("oracle"))?;
    let oracle = SectionOracle::new(degrees, k_max * x.max(0) as u32);
    Ok(oracle.some_multiple_effective(x, y, k_max))
}

/// One comparison between a closed-form cone test and its oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub class: DivisorClass,
    pub test: &'static str,
    pub closed_form: bool,
    pub oracle: bool,
    pub agree: bool,
}

pub const DEFAULT_K_MAX: u32 = 12;

/// Compares `is_pseff` against the section oracle (for the class and for the
/// class plus one fiber) and `is_nef` against curve enumeration, for every
/// integral `x ξ + y f` with `|x|, |y| ≤ coeff_max`.
pub fn oracle_grid(model: &VarietyModel, coeff_max: i64, k_max: u32) -> Result<Vec<GridRow>> {
    let degrees = model.bundle_degrees().ok_or_else(|| {
        Error::Unsupported(format!("grid oracle needs a split bundle, not {model}"))
    })?;
    let oracle = SectionOracle::new(degrees, k_max * coeff_max.max(0) as u32);
    let mut rows = Vec::new();
    for x in -coeff_max..=coeff_max {
        for y in -coeff_max..=coeff_max {
            let class = model.class_from_ints(&[x, y])?;
            for eps in 0..=1 {
                let shifted = model.class_from_ints(&[x, y + eps])?;
                let closed_form = is_pseff(model, &shifted)?;
                let by_sections = oracle.some_multiple_effective(x, y + eps, k_max);
                rows.push(GridRow {
                    class: shifted,
                    test: if eps == 0 { "pseff" } else { "pseff+f" },
                    closed_form,
                    oracle: by_sections,
                    agree: closed_form == by_sections,
                });
            }
            let closed_form = is_nef(model, &class)?;
            let by_curves = oracle_nef_curves(model, &class)?;
            rows.push(GridRow {
                class,
                test: "nef",
                closed_form,
                oracle: by_curves,
                agree: closed_form == by_curves,
            });
        }
    }
    Ok(rows)
}
