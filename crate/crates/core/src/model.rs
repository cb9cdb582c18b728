//! Variety families, their divisor-class lattices and intersection theory.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chow::BundleChow;
use crate::rational::Rational;
use crate::resolution::cone_pushforward;
use crate::{Error, Result};

/// Base of a generalized cone `C_N(V, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeBase {
    /// `(P^1, O(a))`.
    P1 { a: u32 },
    /// `(P^2, O(2))`.
    P2Conic,
}

impl ConeBase {
    pub fn dim(&self) -> u32 {
        match self {
            ConeBase::P1 { .. } => 1,
            ConeBase::P2Conic => 2,
        }
    }

    /// Degree `d` of the base polarization `O(d)` on `P^{dim}`.
    pub fn degree(&self) -> i64 {
        match self {
            ConeBase::P1 { a } => *a as i64,
            ConeBase::P2Conic => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ProjectiveSpace {
        n: u32,
    },
    /// `P(⊕ O(a_i))` over `P^1`, degrees non-increasing.
    SplitBundle {
        degrees: Vec<i64>,
    },
    Quadric {
        n: u32,
        rank: u32,
    },
    GeneralizedCone {
        dim: u32,
        base: ConeBase,
    },
}

/// A validated member of one of the supported families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarietyModel(Family);

/// Identifies the basis a coefficient vector is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisTag {
    /// `H` on `P^n`.
    #[serde(rename = "H")]
    ProjectiveHyperplane,
    /// `(ξ, f)` on a split bundle over `P^1`.
    #[serde(rename = "xi_f")]
    BundleXiF,
    /// `(C_0, f')` on a Hirzebruch surface, `C_0` the minimal section.
    #[serde(rename = "c0_f")]
    HirzebruchC0F,
    /// `O_Q(1)` on a quadric of rank at least 5.
    #[serde(rename = "Q_H")]
    QuadricHyperplane,
    /// `½ O_Q(1)` on a quadric of rank 3.
    #[serde(rename = "Q_half_H")]
    QuadricHalfHyperplane,
    /// The two ruling classes `(1,0)`, `(0,1)` on a quadric of rank 4.
    #[serde(rename = "Q_rulings")]
    QuadricRulings,
    /// `[L]` on a generalized cone (rational coefficients).
    #[serde(rename = "cone_L")]
    ConeL,
    /// `(ξ, h)` on the resolving bundle of a generalized cone.
    #[serde(rename = "T_xi_h")]
    ResolutionXiH,
}

impl BasisTag {
    pub fn rank(self) -> usize {
        match self {
            BasisTag::BundleXiF
            | BasisTag::HirzebruchC0F
            | BasisTag::QuadricRulings
            | BasisTag::ResolutionXiH => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisTag::ProjectiveHyperplane => "H",
            BasisTag::BundleXiF => "xi_f",
            BasisTag::HirzebruchC0F => "c0_f",
            BasisTag::QuadricHyperplane => "Q_H",
            BasisTag::QuadricHalfHyperplane => "Q_half_H",
            BasisTag::QuadricRulings => "Q_rulings",
            BasisTag::ConeL => "cone_L",
            BasisTag::ResolutionXiH => "T_xi_h",
        }
    }

    fn symbols(self) -> &'static [&'static str] {
        match self {
            BasisTag::ProjectiveHyperplane | BasisTag::QuadricHyperplane => &["H"],
            BasisTag::BundleXiF => &["ξ", "f"],
            BasisTag::HirzebruchC0F => &["C0", "f'"],
            BasisTag::QuadricHalfHyperplane => &["(H/2)"],
            BasisTag::QuadricRulings => &["(1,0)", "(0,1)"],
            BasisTag::ConeL => &["[L]"],
            BasisTag::ResolutionXiH => &["ξ", "h"],
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficient vector of a divisor class in a tagged basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub basis: BasisTag,
    pub coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(basis: BasisTag, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != basis.rank() {
            return Err(Error::Arity {
                expected: basis.rank(),
                got: coeffs.len(),
            });
        }
        Ok(DivisorClass { basis, coeffs })
    }

    pub fn from_ints(basis: BasisTag, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            basis,
            coeffs.iter().map(|&c| Rational::from_integer(c)).collect(),
        )
    }

    fn same_basis(&self, other: &DivisorClass) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_basis(other)?;
        Ok(DivisorClass {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.add(&other.scale(&Rational::from_integer(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> DivisorClass {
        DivisorClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: &Rational, other: &DivisorClass) -> Result<DivisorClass> {
        self.add(&other.scale(factor))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn dot(&self, curve: &CurveClass) -> Result<Rational> {
        if self.basis != curve.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: curve.basis,
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&curve.coeffs)
            .map(|(a, b)| a * b)
            .sum())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, sym) in self.coeffs.iter().zip(self.basis.symbols()) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}·{sym}")?;
            } else if c.is_negative() {
                write!(f, " − {}·{sym}", c.abs())?;
            } else {
                write!(f, " + {c}·{sym}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A curve class, recorded by its coordinates in the basis dual to the
/// divisor basis `basis`: `D · C = Σ D_i C_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub basis: BasisTag,
    pub coeffs: Vec<Rational>,
}

impl CurveClass {
    pub fn from_ints(basis: BasisTag, coeffs: &[i64]) -> Self {
        CurveClass {
            basis,
            coeffs: coeffs.iter().map(|&c| Rational::from_integer(c)).collect(),
        }
    }
}

/// Raw family parameters as they appear in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ModelDescriptor {
    ProjectiveSpace {
        n: i64,
    },
    SplitBundle {
        degrees: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        genus: Option<i64>,
    },
    Quadric {
        n: i64,
        rank: i64,
    },
    GeneralizedCone {
        #[serde(rename = "N")]
        dim: i64,
        base: ConeBaseDescriptor,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeBaseDescriptor {
    P1Degree(i64),
    P2Conic,
}

/// Validates raw parameters into a model.
pub fn make_model(descriptor: &ModelDescriptor) -> Result<VarietyModel> {
    let invalid = |msg: String| Err(Error::InvalidModel(msg));
    let family = match descriptor {
        ModelDescriptor::ProjectiveSpace { n } => {
            if *n < 1 {
                return invalid(format!("projective space needs n ≥ 1, got {n}"));
            }
            Family::ProjectiveSpace { n: *n as u32 }
        }
        ModelDescriptor::SplitBundle { degrees, n, genus } => {
            if let Some(g) = genus {
                if *g != 0 {
                    return invalid(format!(
                        "only P^1 is supported as base curve, got genus {g}"
                    ));
                }
            }
            if degrees.len() < 2 {
                return invalid(format!(
                    "split bundle needs at least two degrees, got {}",
                    degrees.len()
                ));
            }
            if let Some(n) = n {
                if *n != degrees.len() as i64 {
                    return invalid(format!(
                        "dimension {n} does not match {} degrees",
                        degrees.len()
                    ));
                }
            }
            if degrees.windows(2).any(|w| w[0] < w[1]) {
                return invalid(format!("degrees must be non-increasing: {degrees:?}"));
            }
            Family::SplitBundle {
                degrees: degrees.clone(),
            }
        }
        ModelDescriptor::Quadric { n, rank } => {
            if *n < 2 {
                return invalid(format!("quadric needs n ≥ 2, got {n}"));
            }
            if *rank < 3 {
                return invalid(format!(
                    "reducible quadric: rank {rank} form splits into linear factors"
                ));
            }
            if *rank > n + 2 {
                return invalid(format!("quadric rank {rank} exceeds n + 2 = {}", n + 2));
            }
            Family::Quadric {
                n: *n as u32,
                rank: *rank as u32,
            }
        }
        ModelDescriptor::GeneralizedCone { dim, base } => {
            let base = match base {
                ConeBaseDescriptor::P1Degree(a) => {
                    if *a < 1 {
                        return invalid(format!("cone over P^1 needs a ≥ 1, got {a}"));
                    }
                    if *dim < 2 {
                        return invalid(format!("cone over P^1 needs N ≥ 2, got {dim}"));
                    }
                    ConeBase::P1 { a: *a as u32 }
                }
                ConeBaseDescriptor::P2Conic => {
                    if *dim < 3 {
                        return invalid(format!("cone over (P^2, O(2)) needs N ≥ 3, got {dim}"));
                    }
                    ConeBase::P2Conic
                }
            };
            Family::GeneralizedCone {
                dim: *dim as u32,
                base,
            }
        }
    };
    Ok(VarietyModel(family))
}

impl VarietyModel {
    pub fn projective_space(n: u32) -> Result<Self> {
        make_model(&ModelDescriptor::ProjectiveSpace { n: n as i64 })
    }

    pub fn split_bundle(degrees: &[i64]) -> Result<Self> {
        make_model(&ModelDescriptor::SplitBundle {
            degrees: degrees.to_vec(),
            n: None,
            genus: None,
        })
    }

    pub fn quadric(n: u32, rank: u32) -> Result<Self> {
        make_model(&ModelDescriptor::Quadric {
            n: n as i64,
            rank: rank as i64,
        })
    }

    pub fn cone_over_p1(dim: u32, a: u32) -> Result<Self> {
        make_model(&ModelDescriptor::GeneralizedCone {
            dim: dim as i64,
            base: ConeBaseDescriptor::P1Degree(a as i64),
        })
    }

    pub fn cone_over_conic(dim: u32) -> Result<Self> {
        make_model(&ModelDescriptor::GeneralizedCone {
            dim: dim as i64,
            base: ConeBaseDescriptor::P2Conic,
        })
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn descriptor(&self) -> ModelDescriptor {
        match &self.0 {
            Family::ProjectiveSpace { n } => ModelDescriptor::ProjectiveSpace { n: *n as i64 },
            Family::SplitBundle { degrees } => ModelDescriptor::SplitBundle {
                degrees: degrees.clone(),
                n: None,
                genus: None,
            },
            Family::Quadric { n, rank } => ModelDescriptor::Quadric {
                n: *n as i64,
                rank: *rank as i64,
            },
            Family::GeneralizedCone { dim, base } => ModelDescriptor::GeneralizedCone {
                dim: *dim as i64,
                base: match base {
                    ConeBase::P1 { a } => ConeBaseDescriptor::P1Degree(*a as i64),
                    ConeBase::P2Conic => ConeBaseDescriptor::P2Conic,
                },
            },
        }
    }

    pub fn dim(&self) -> usize {
        match &self.0 {
            Family::ProjectiveSpace { n } | Family::Quadric { n, .. } => *n as usize,
            Family::SplitBundle { degrees } => degrees.len(),
            Family::GeneralizedCone { dim, .. } => *dim as usize,
        }
    }

    pub fn basis(&self) -> BasisTag {
        match &self.0 {
            Family::ProjectiveSpace { .. } => BasisTag::ProjectiveHyperplane,
            Family::SplitBundle { .. } => BasisTag::BundleXiF,
            Family::Quadric { rank: 3, .. } => BasisTag::QuadricHalfHyperplane,
            Family::Quadric { rank: 4, .. } => BasisTag::QuadricRulings,
            Family::Quadric { .. } => BasisTag::QuadricHyperplane,
            Family::GeneralizedCone { .. } => BasisTag::ConeL,
        }
    }

    pub fn lattice_rank(&self) -> usize {
        self.basis().rank()
    }

    /// The split-bundle degrees, if this is a split bundle.
    pub fn bundle_degrees(&self) -> Option<&[i64]> {
        match &self.0 {
            Family::SplitBundle { degrees } => Some(degrees),
            _ => None,
        }
    }

    pub(crate) fn bundle_chow(&self) -> Option<BundleChow> {
        self.bundle_degrees()
            .map(|d| BundleChow::new(1, d.to_vec()))
    }

    pub fn class(&self, coeffs: Vec<Rational>) -> Result<DivisorClass> {
        DivisorClass::new(self.basis(), coeffs)
    }

    pub fn class_from_ints(&self, coeffs: &[i64]) -> Result<DivisorClass> {
        DivisorClass::from_ints(self.basis(), coeffs)
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            basis: self.basis(),
            coeffs: vec![Rational::zero(); self.lattice_rank()],
        }
    }

    /// The tautological polarization: `H` on projective spaces and quadrics,
    /// `ξ` on split bundles and `[L]` on generalized cones.
    pub fn tautological(&self) -> DivisorClass {
        let coeffs: &[i64] = match &self.0 {
            Family::ProjectiveSpace { .. } => &[1],
            Family::SplitBundle { .. } => &[1, 0],
            Family::Quadric { rank: 3, .. } => &[2],
            Family::Quadric { rank: 4, .. } => &[1, 1],
            Family::Quadric { .. } => &[1],
            Family::GeneralizedCone { .. } => &[1],
        };
        DivisorClass::from_ints(self.basis(), coeffs).expect("basis rank")
    }

    /// Fails unless `class` is written in this model's basis.
    pub fn check(&self, class: &DivisorClass) -> Result<()> {
        if class.basis != self.basis() {
            return Err(Error::BasisMismatch {
                expected: self.basis(),
                found: class.basis,
            });
        }
        if class.coeffs.len() != self.lattice_rank() {
            return Err(Error::Arity {
                expected: self.lattice_rank(),
                got: class.coeffs.len(),
            });
        }
        Ok(())
    }

    /// Rewrites `class` in this model's basis. Only `(C_0, f')` classes on a
    /// Hirzebruch surface need converting; `C_0 = ξ − a_1 f`, `f' = f`.
    pub fn to_model_basis(&self, class: &DivisorClass) -> Result<DivisorClass> {
        match (&self.0, class.basis) {
            (Family::SplitBundle { degrees }, BasisTag::HirzebruchC0F) if degrees.len() == 2 => {
                let x = &class.coeffs[0];
                let d = &class.coeffs[1];
                self.class(vec![x.clone(), d - &(x * degrees[0])])
            }
            _ => {
                self.check(class)?;
                Ok(class.clone())
            }
        }
    }

    /// `x·C_0 + d'·f'` on a Hirzebruch surface, expressed in `(ξ, f)`.
    pub fn hirzebruch_class(&self, x: i64, d: i64) -> Result<DivisorClass> {
        match &self.0 {
            Family::SplitBundle { degrees } if degrees.len() == 2 => {
                self.to_model_basis(&DivisorClass::from_ints(BasisTag::HirzebruchC0F, &[x, d])?)
            }
            _ => Err(Error::Unsupported(format!(
                "(C0, f') basis exists only on split bundles of dimension 2, not {self}"
            ))),
        }
    }

    /// For a split bundle: the line in a fiber (`ξ·ℓ = 1`, `f·ℓ = 0`).
    pub fn fiber_line(&self) -> Option<CurveClass> {
        self.bundle_degrees()
            .map(|_| CurveClass::from_ints(BasisTag::BundleXiF, &[1, 0]))
    }

    /// For a split bundle: the coordinate section `C_i` cut out by the
    /// quotient onto `O(a_i)` (`ξ·C_i = a_i`, `f·C_i = 1`).
    pub fn coordinate_sections(&self) -> Vec<CurveClass> {
        self.bundle_degrees()
            .map(|d| {
                d.iter()
                    .map(|&a| CurveClass::from_ints(BasisTag::BundleXiF, &[a, 1]))
                    .collect()
            })
            .unwrap_or_default()
    }
}

impl fmt::Display for VarietyModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Family::ProjectiveSpace { n } => write!(f, "P^{n}"),
            Family::SplitBundle { degrees } => {
                let parts: Vec<String> = degrees.iter().map(|d| format!("O({d})")).collect();
                write!(f, "P({}) over P^1", parts.join(" ⊕ "))
            }
            Family::Quadric { n, rank } => write!(f, "Q^{n} of rank {rank}"),
            Family::GeneralizedCone { dim, base } => match base {
                ConeBase::P1 { a } => write!(f, "C_{dim}(P^1, O({a}))"),
                ConeBase::P2Conic => write!(f, "C_{dim}(P^2, O(2))"),
            },
        }
    }
}

/// Canonical class `K_X` in the model's basis.
pub fn canonical_class(model: &VarietyModel) -> DivisorClass {
    let n = model.dim() as i64;
    let ints: Vec<i64> = match model.family() {
        Family::ProjectiveSpace { .. } => vec![-(n + 1)],
        Family::SplitBundle { degrees } => {
            let (xi, f) = BundleChow::new(1, degrees.clone()).canonical();
            return model.class(vec![xi, f]).expect("rank 2");
        }
        Family::Quadric { rank: 3, .. } => vec![-2 * n],
        Family::Quadric { rank: 4, .. } => vec![-n, -n],
        Family::Quadric { .. } => vec![-n],
        Family::GeneralizedCone { .. } => {
            let res = cone_pushforward(model).expect("cone model");
            let kt = res.canonical();
            return res.pushforward(&kt).expect("resolution basis");
        }
    };
    model.class_from_ints(&ints).expect("basis rank")
}

/// `H`-coefficient of a class on a quadric of rank 3 or 4, if it is a
/// rational multiple of `H`.
fn quadric_h_multiple(rank: u32, class: &DivisorClass) -> Option<Rational> {
    match rank {
        3 => Some(&class.coeffs[0] / 2),
        4 => (class.coeffs[0] == class.coeffs[1]).then(|| class.coeffs[0].clone()),
        _ => Some(class.coeffs[0].clone()),
    }
}

/// Top intersection number of `dim(model)` divisor classes.
///
/// On quadrics of rank 3 and 4 at most one factor may be something other
/// than an integral multiple of `H`; products of two or more such classes
/// are rejected.
pub fn intersection_top(model: &VarietyModel, classes: &[DivisorClass]) -> Result<Rational> {
    let n = model.dim();
    if classes.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: classes.len(),
        });
    }
    for c in classes {
        model.check(c)?;
    }
    match model.family() {
        Family::ProjectiveSpace { .. } => Ok(classes.iter().map(|c| c.coeffs[0].clone()).product()),
        Family::SplitBundle { degrees } => {
            let chow = BundleChow::new(1, degrees.clone());
            let pairs: Vec<_> = classes
                .iter()
                .map(|c| (c.coeffs[0].clone(), c.coeffs[1].clone()))
                .collect();
            Ok(chow.top(&pairs))
        }
        Family::Quadric { rank, .. } if *rank >= 5 => Ok(classes
            .iter()
            .map(|c| c.coeffs[0].clone())
            .product::<Rational>()
            * 2),
        Family::Quadric { rank, .. } => {
            let mut product = Rational::one();
            let mut special: Option<&DivisorClass> = None;
            for c in classes {
                match quadric_h_multiple(*rank, c) {
                    Some(h) if h.is_integer() => product = product * h,
                    _ => {
                        if special.is_some() {
                            return Err(Error::Unsupported(format!(
                                "intersections of two or more non-H classes on a rank-{rank} quadric"
                            )));
                        }
                        special = Some(c);
                    }
                }
            }
            let last = match special {
                None => Rational::from_integer(2),
                // H^{n-1} · D: twice the H-multiple on rank 3, p + q on rank 4
                Some(c) if *rank == 3 => c.coeffs[0].clone(),
                Some(c) => &c.coeffs[0] + &c.coeffs[1],
            };
            Ok(product * last)
        }
        Family::GeneralizedCone { .. } => Err(Error::Unsupported(
            "top intersections on generalized cones come from the resolution (cone_pushforward)"
                .into(),
        )),
    }
}

/// Whether the integral structure of the class group is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrality {
    /// The generators span the group of Weil divisor classes over `Z`.
    Lattice,
    /// Only `Cl ⊗ Q` is modelled.
    RationalOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub rank: usize,
    pub generators: Vec<DivisorClass>,
    pub integrality: Integrality,
    /// The tautological polarization written in the generators.
    pub polarization: DivisorClass,
}

pub fn class_group(model: &VarietyModel) -> ClassGroup {
    let basis = model.basis();
    let rank = basis.rank();
    let generators = (0..rank)
        .map(|i| {
            let mut coeffs = vec![0; rank];
            coeffs[i] = 1;
            DivisorClass::from_ints(basis, &coeffs).expect("basis rank")
        })
        .collect();
    let integrality = match model.family() {
        Family::GeneralizedCone { .. } => Integrality::RationalOnly,
        _ => Integrality::Lattice,
    };
    ClassGroup {
        rank,
        generators,
        integrality,
        polarization: model.tautological(),
    }
}

/// Fails on models whose class group is only known rationally.
pub fn require_integral_weil(model: &VarietyModel, class: &DivisorClass) -> Result<()> {
    model.check(class)?;
    if class_group(model).integrality == Integrality::RationalOnly {
        return Err(Error::RationalOnly(format!(
            "integral Weil classes on {model} are not modelled"
        )));
    }
    if !class.is_integral() {
        return Err(Error::NotIntegral(class.to_string()));
    }
    Ok(())
}
