//! Resolution of a generalized cone `C_N(V, L)` by the projective bundle
//! `T = P(O^{⊕ N − dim V} ⊕ L)` over `V = P^b`, and the induced
//! pushforward/pullback between `T`'s classes and the cone's `Q·[L]`.
//!
//! The exceptional divisor is `E = P(O^{⊕ N − dim V}) ≅ V × P^{N − dim V − 1}`
//! with class `ξ − d h`. Its coefficient in `pullback(pushforward(h)) = h + a E`
//! and the slope `m` in `pushforward(h) = m [L]` are solved from two test
//! curves: a line `C_1 ⊂ E` in the base direction (contracted) and a line
//! `C_2` in a fiber of `T → V`.

use serde::Serialize;

use crate::chow::BundleChow;
use crate::model::{BasisTag, ConeBase, CurveClass, DivisorClass, Family, VarietyModel};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeResolution {
    #[serde(skip)]
    bundle: BundleChow,
    pub base_dim: usize,
    pub bundle_degrees: Vec<i64>,
    /// `E` in the `(ξ, h)` basis of `T`.
    pub exceptional: DivisorClass,
    /// `a` with `pullback(pushforward(h)) = h + a E`.
    pub exceptional_coefficient: Rational,
    /// `m` with `pushforward(h) = m [L]`.
    pub base_slope: Rational,
    /// Line in `E` along the base, contracted by `T → C_N(V, L)`.
    pub contracted_curve: CurveClass,
    /// Line in a fiber of `T → V`.
    pub fiber_line: CurveClass,
}

/// Builds the resolution data of a generalized cone.
pub fn cone_pushforward(model: &VarietyModel) -> Result<ConeResolution> {
    let (dim, base) = match model.family() {
        Family::GeneralizedCone { dim, base } => (*dim as usize, *base),
        _ => {
            return Err(Error::Unsupported(format!(
                "{model} is not a generalized cone"
            )))
        }
    };
    let b = base.dim() as usize;
    let d = base.degree();
    let trivial = dim - b;
    let mut degrees = vec![0; trivial];
    degrees.push(d);
    degrees.sort_by(|x, y| y.cmp(x));
    let bundle = BundleChow::new(b, degrees.clone());
    debug_assert_eq!(bundle.dim(), dim);

    let xi = t_class(&Rational::one(), &Rational::zero());
    let h = t_class(&Rational::zero(), &Rational::one());
    let exceptional = t_class(&Rational::one(), &Rational::from_integer(-d));
    let rank = bundle.rank();

    // C_2 = ξ^{R−2} h^b, C_1 = E ξ^{R−2} h^{b−1}
    let mut c2_factors = vec![xi.clone(); rank - 2];
    c2_factors.extend(std::iter::repeat_n(h.clone(), b));
    let mut c1_factors = vec![exceptional.clone()];
    c1_factors.extend(std::iter::repeat_n(xi.clone(), rank - 2));
    c1_factors.extend(std::iter::repeat_n(h.clone(), b - 1));

    let curve = |factors: &[DivisorClass]| -> CurveClass {
        let coords = [&xi, &h]
            .iter()
            .map(|basis_class| {
                let mut all = factors.to_vec();
                all.push((*basis_class).clone());
                top_on(&bundle, &all)
            })
            .collect();
        CurveClass {
            basis: BasisTag::ResolutionXiH,
            coeffs: coords,
        }
    };
    let contracted_curve = curve(&c1_factors);
    let fiber_line = curve(&c2_factors);

    let e_dot_c1 = exceptional.dot(&contracted_curve)?;
    let h_dot_c1 = h.dot(&contracted_curve)?;
    // the pullback of any cone class is a multiple of ξ, and ξ·C_1 = 0
    debug_assert!(xi.dot(&contracted_curve)?.is_zero());
    let exceptional_coefficient = -(&h_dot_c1 / &e_dot_c1);
    let base_slope = (&h.dot(&fiber_line)?
        + &(&exceptional_coefficient * &exceptional.dot(&fiber_line)?))
        / &xi.dot(&fiber_line)?;

    Ok(ConeResolution {
        bundle,
        base_dim: b,
        bundle_degrees: degrees,
        exceptional,
        exceptional_coefficient,
        base_slope,
        contracted_curve,
        fiber_line,
    })
}

fn t_class(x: &Rational, y: &Rational) -> DivisorClass {
    DivisorClass {
        basis: BasisTag::ResolutionXiH,
        coeffs: vec![x.clone(), y.clone()],
    }
}

fn top_on(bundle: &BundleChow, classes: &[DivisorClass]) -> Rational {
    let pairs: Vec<_> = classes
        .iter()
        .map(|c| (c.coeffs[0].clone(), c.coeffs[1].clone()))
        .collect();
    bundle.top(&pairs)
}

impl ConeResolution {
    pub fn class(&self, xi: i64, h: i64) -> DivisorClass {
        t_class(&Rational::from_integer(xi), &Rational::from_integer(h))
    }

    pub fn xi(&self) -> DivisorClass {
        self.class(1, 0)
    }

    pub fn h(&self) -> DivisorClass {
        self.class(0, 1)
    }

    pub fn dim(&self) -> usize {
        self.bundle.dim()
    }

    /// `K_T = −R ξ + (d − b − 1) h`.
    pub fn canonical(&self) -> DivisorClass {
        let (x, y) = self.bundle.canonical();
        t_class(&x, &y)
    }

    fn check(&self, class: &DivisorClass) -> Result<()> {
        if class.basis != BasisTag::ResolutionXiH {
            return Err(Error::BasisMismatch {
                expected: BasisTag::ResolutionXiH,
                found: class.basis,
            });
        }
        Ok(())
    }

    pub fn top(&self, classes: &[DivisorClass]) -> Result<Rational> {
        if classes.len() != self.dim() {
            return Err(Error::Arity {
                expected: self.dim(),
                got: classes.len(),
            });
        }
        for c in classes {
            self.check(c)?;
        }
        Ok(top_on(&self.bundle, classes))
    }

    /// `x ξ + y h ↦ (x + y m) [L]`.
    pub fn pushforward(&self, class: &DivisorClass) -> Result<DivisorClass> {
        self.check(class)?;
        let coeff = &class.coeffs[0] + &(&class.coeffs[1] * &self.base_slope);
        Ok(DivisorClass {
            basis: BasisTag::ConeL,
            coeffs: vec![coeff],
        })
    }

    /// `c [L] ↦ c ξ`.
    pub fn pullback(&self, class: &DivisorClass) -> Result<DivisorClass> {
        if class.basis != BasisTag::ConeL {
            return Err(Error::BasisMismatch {
                expected: BasisTag::ConeL,
                found: class.basis,
            });
        }
        Ok(t_class(&class.coeffs[0], &Rational::zero()))
    }

    /// `[L]^N`, computed as `ξ^N` on `T`.
    pub fn cone_degree(&self) -> Rational {
        let xi = self.xi();
        top_on(&self.bundle, &vec![xi; self.dim()])
    }

    /// `h^0(T, ξ)`, equal to `h^0` of `[L]` on the (normal) cone.
    pub fn h0_of_polarization(&self) -> Option<u64> {
        self.bundle.h0(1, 0)
    }

    pub fn base(&self) -> ConeBase {
        match self.base_dim {
            1 => ConeBase::P1 {
                a: self.bundle_degrees[0] as u32,
            },
            _ => ConeBase::P2Conic,
        }
    }
}
