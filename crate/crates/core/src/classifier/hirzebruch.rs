use serde::Serialize;

use crate::model::{BasisTag, DivisorClass};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HirzebruchCase {
    /// `x = 0, d' = 1`: a fiber.
    #[serde(rename = "i")]
    Fiber,
    /// `x = 1, d' = 0`: the minimal section `C_0`.
    #[serde(rename = "ii")]
    MinimalSection,
    /// `x > 0, d' > xe`.
    #[serde(rename = "iii")]
    Ample,
    /// `e > 0, x > 0, d' = xe`.
    #[serde(rename = "iv")]
    Boundary,
}

impl HirzebruchCase {
    pub fn tag(self) -> &'static str {
        match self {
            HirzebruchCase::Fiber => "i",
            HirzebruchCase::MinimalSection => "ii",
            HirzebruchCase::Ample => "iii",
            HirzebruchCase::Boundary => "iv",
        }
    }
}

/// One prime class `D = x C_0 + d' f'` on `P(O(a) ⊕ O(b))` polarized by
/// `L = ξ`, with `K + L + D = (x − 1) C_0 + (d' + b − 2) f'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HirzebruchRow {
    pub x: i64,
    #[serde(rename = "d_prime")]
    pub d: i64,
    pub case_tag: HirzebruchCase,
    #[serde(rename = "K_plus_L_plus_D")]
    pub k_plus_l_plus_d: DivisorClass,
    pub non_pseff: bool,
}

/// The prime-class table of `P(O(a) ⊕ O(b))`, `a ≥ b ≥ 1`, `e = a − b`.
///
/// Cases (iii) and (iv) list representatives with `x ≤ 3` and
/// `d' ≤ 3e + 3`. Verdicts are the per-case closed forms: (i) never
/// pseudo-effective, (ii) not pseudo-effective iff `b = 1`, (iii) and (iv)
/// always pseudo-effective.
pub fn hirzebruch_case_table(a: i64, b: i64) -> Result<Vec<HirzebruchRow>> {
    if b < 1 {
        return Err(Error::Precondition(format!("need b ≥ 1, got b = {b}")));
    }
    if a < b {
        return Err(Error::Precondition(format!(
            "need a ≥ b, got a = {a}, b = {b}"
        )));
    }
    let e = a - b;
    let row = |x: i64, d: i64, case_tag: HirzebruchCase| -> Result<HirzebruchRow> {
        let k_plus_l_plus_d = DivisorClass::new(
            BasisTag::HirzebruchC0F,
            vec![
                Rational::from_integer(x - 1),
                Rational::from_integer(d + b - 2),
            ],
        )?;
        let non_pseff = match case_tag {
            HirzebruchCase::Fiber => true,
            HirzebruchCase::MinimalSection => b == 1,
            HirzebruchCase::Ample | HirzebruchCase::Boundary => false,
        };
        Ok(HirzebruchRow {
            x,
            d,
            case_tag,
            k_plus_l_plus_d,
            non_pseff,
        })
    };
    let mut rows = vec![
        row(0, 1, HirzebruchCase::Fiber)?,
        row(1, 0, HirzebruchCase::MinimalSection)?,
    ];
    for x in 1..=3 {
        for d in x * e + 1..=3 * e + 3 {
            rows.push(row(x, d, HirzebruchCase::Ample)?);
        }
    }
    if e > 0 {
        for x in 1..=3 {
            rows.push(row(x, x * e, HirzebruchCase::Boundary)?);
        }
    }
    Ok(rows)
}
