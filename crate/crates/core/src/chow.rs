//! Intersection numbers on split projective bundles `P(O(d_1) ⊕ … ⊕ O(d_R))`
//! over a projective space `P^b`, in the basis `(ξ, h)` with `ξ = O(1)` and
//! `h` the pullback of the hyperplane class of the base.
//!
//! The Chow ring is `Z[ξ, h] / (h^{b+1}, Π(ξ − d_i h))`, and the degree map
//! sends `ξ^{R−1+k} h^{b−k}` to the complete homogeneous symmetric polynomial
//! `h_k(d_1, …, d_R)`.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleChow {
    base_dim: usize,
    degrees: Vec<i64>,
}

impl BundleChow {
    pub fn new(base_dim: usize, degrees: Vec<i64>) -> Self {
        assert!(base_dim >= 1 && !degrees.is_empty());
        BundleChow { base_dim, degrees }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Dimension of the total space.
    pub fn dim(&self) -> usize {
        self.base_dim + self.rank() - 1
    }

    /// `ξ^{dim − j} · h^j`.
    pub fn monomial(&self, j: usize) -> Rational {
        if j > self.base_dim {
            return Rational::zero();
        }
        Rational::from_integer(complete_homogeneous(&self.degrees, self.base_dim - j))
    }

    /// Top intersection of `dim` classes given as `(ξ-coefficient, h-coefficient)`.
    pub fn top(&self, classes: &[(Rational, Rational)]) -> Rational {
        assert_eq!(classes.len(), self.dim(), "top intersection arity");
        // poly[j] = coefficient of ξ^{k−j} h^j after k factors, truncated at h^{b+1}
        let mut poly = vec![Rational::zero(); self.base_dim + 1];
        poly[0] = Rational::one();
        for (x, y) in classes {
            let mut next = vec![Rational::zero(); self.base_dim + 1];
            for j in 0..=self.base_dim {
                if poly[j].is_zero() {
                    continue;
                }
                next[j] += &(&poly[j] * x);
                if j < self.base_dim {
                    next[j + 1] += &(&poly[j] * y);
                }
            }
            poly = next;
        }
        poly.iter()
            .enumerate()
            .map(|(j, c)| c * &self.monomial(j))
            .sum()
    }

    /// `K = −R ξ + (Σ d_i − b − 1) h`.
    pub fn canonical(&self) -> (Rational, Rational) {
        let total: i64 = self.degrees.iter().sum();
        (
            Rational::from_integer(-(self.rank() as i64)),
            Rational::from_integer(total - self.base_dim as i64 - 1),
        )
    }

    /// `h^0(x ξ + y h)` for `x ≥ 0`: sum over monomials of `Sym^x` of the
    /// section count of `O_{P^b}(S + y)`, where `S` is the monomial's degree.
    pub fn h0(&self, x: u32, y: i64) -> Option<u64> {
        let mut total: u64 = 0;
        let mut overflow = false;
        for_each_composition(x, self.rank(), &mut |parts| {
            let s: i64 = parts
                .iter()
                .zip(&self.degrees)
                .map(|(&k, &d)| k as i64 * d)
                .sum();
            match projective_h0(self.base_dim as u64, s + y).and_then(|v| total.checked_add(v)) {
                Some(t) => total = t,
                None => overflow = true,
            }
        });
        (!overflow).then_some(total)
    }
}

/// `h_k(d)`: sum of all degree-`k` monomials in the `d_i`.
pub fn complete_homogeneous(degrees: &[i64], k: usize) -> i64 {
    // h_k(d_1..d_m) = Σ_j d_m^j h_{k-j}(d_1..d_{m-1})
    let mut table = vec![0i64; k + 1];
    table[0] = 1;
    for &d in degrees {
        for j in 1..=k {
            table[j] += d * table[j - 1];
        }
    }
    table[k]
}

/// `h^0(P^b, O(t)) = C(t + b, b)`, zero for negative `t`.
pub fn projective_h0(b: u64, t: i64) -> Option<u64> {
    if t < 0 {
        return Some(0);
    }
    binomial(t as u64 + b, b)
}

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Calls `f` on every composition of `total` into `parts` non-negative parts.
pub fn for_each_composition(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(rem: u32, idx: usize, buf: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if idx + 1 == buf.len() {
            buf[idx] = rem;
            f(buf);
            return;
        }
        for k in (0..=rem).rev() {
            buf[idx] = k;
            rec(rem - k, idx + 1, buf, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0; parts];
    rec(total, 0, &mut buf, f);
}
