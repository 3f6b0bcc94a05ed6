//! Truncated power series in `z₁, z₂` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::ratfunc::RatFunc;

/// Power series in `z₁, z₂` truncated per variable: only `z₁ᵃz₂ᵇ` with
/// `a, b ≤ order` are kept. Stored densely, row-major in `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries { order, coeffs: vec![BigRational::zero(); (order + 1) * (order + 1)] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        Self::monomial(order, 0, 0, c)
    }

    /// `c z₁ᵃ z₂ᵇ`, or zero if outside the window.
    pub fn monomial(order: usize, a: usize, b: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if a <= order && b <= order {
            s.coeffs[a * (order + 1) + b] = c;
        }
        s
    }

    /// Expansion of a rational function of `z₁` alone.
    pub fn from_ratfunc_z1(order: usize, r: &RatFunc) -> Result<Self, Error> {
        let mut s = Self::zero(order);
        for (a, c) in r.expand(order)?.into_iter().enumerate() {
            s.coeffs[a * (order + 1)] = c;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.order + 1) + b
    }

    pub fn coeff(&self, a: usize, b: usize) -> &BigRational {
        &self.coeffs[self.idx(a, b)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: BigRational) {
        let i = self.idx(a, b);
        self.coeffs[i] = c;
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: &BigRational) {
        let i = self.idx(a, b);
        self.coeffs[i] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coefficients in `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigRational)> + '_ {
        let w = self.order + 1;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| ((i / w, i % w), c))
    }

    /// Every coefficient of the window, zeros included, in `(a, b)` order.
    pub fn table(&self) -> Vec<(usize, usize, BigRational)> {
        let w = self.order + 1;
        self.coeffs.iter().enumerate().map(|(i, c)| (i / w, i % w, c.clone())).collect()
    }

    pub fn add_assign(&mut self, rhs: &BiSeries) {
        assert_eq!(self.order, rhs.order, "BiSeries orders differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> BiSeries {
        BiSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Truncated product.
    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(self.order, rhs.order, "BiSeries orders differ");
        let d = self.order;
        let w = d + 1;
        let mut out = BiSeries::zero(d);
        let lhs: Vec<(usize, usize, &BigRational)> = self.iter().map(|((a, b), c)| (a, b, c)).collect();
        let rhs: Vec<(usize, usize, &BigRational)> = rhs.iter().map(|((a, b), c)| (a, b, c)).collect();
        for &(a1, b1, c1) in &lhs {
            for &(a2, b2, c2) in &rhs {
                let (a, b) = (a1 + a2, b1 + b2);
                if a <= d && b <= d {
                    out.coeffs[a * w + b] += c1 * c2;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiSeries {
        let mut out = BiSeries::one(self.order);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Swaps the roles of `z₁` and `z₂`.
    pub fn swap_vars(&self) -> BiSeries {
        let mut out = BiSeries::zero(self.order);
        for ((a, b), c) in self.iter() {
            out.set(b, a, c.clone());
        }
        out
    }

    /// Restricts to a smaller window.
    pub fn truncate(&self, order: usize) -> BiSeries {
        assert!(order <= self.order);
        let mut out = BiSeries::zero(order);
        for ((a, b), c) in self.iter() {
            if a <= order && b <= order {
                out.set(a, b, c.clone());
            }
        }
        out
    }

    /// Least total degree `a + b` of a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.iter().map(|((a, b), _)| a + b).min()
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.swap_vars()
    }

    pub fn all_integers(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coordinates of the negative coefficients, if any.
    pub fn negative_coefficients(&self) -> Vec<(usize, usize)> {
        self.iter().filter(|(_, c)| c.is_negative()).map(|(k, _)| k).collect()
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((a, b), c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*z1^{a}*z2^{b}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(order {})", self.order + 1)
    }
}

/// Truncated Laurent series in `z₁, z₂`: sparse, exponents anywhere in
/// `[min, order]` per variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentBiSeries {
    order: i64,
    coeffs: BTreeMap<(i64, i64), BigRational>,
}

impl LaurentBiSeries {
    pub fn zero(order: usize) -> Self {
        LaurentBiSeries { order: order as i64, coeffs: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Adds `c z₁ᵃz₂ᵇ`; exponents above the truncation order are dropped.
    pub fn add_term(&mut self, a: i64, b: i64, c: &BigRational) {
        if a > self.order || b > self.order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((a, b)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn add_assign(&mut self, rhs: &LaurentBiSeries) {
        for (&(a, b), c) in &rhs.coeffs {
            self.add_term(a, b, c);
        }
    }

    /// Adds `z₂ᵇ · r(z₁)`, expanding `r` as a Laurent series in `z₁`.
    pub fn add_z1_ratfunc(&mut self, b: i64, r: &RatFunc) {
        let (v, cs) = r.expand_laurent(self.order);
        for (k, c) in cs.iter().enumerate() {
            self.add_term(v + k as i64, b, c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.coeffs.iter()
    }

    /// Checks that no negative exponent survives and returns the ordinary
    /// series.
    pub fn finalize(&self) -> Result<BiSeries, Error> {
        let mut out = BiSeries::zero(self.order as usize);
        for (&(a, b), c) in &self.coeffs {
            if a < 0 || b < 0 {
                return Err(Error::NegativeExponent { a, b });
            }
            out.set(a as usize, b as usize, c.clone());
        }
        Ok(out)
    }
}

/// Truncated univariate power series coefficients `c_0..=c_order`.
pub type Series1 = Vec<BigRational>;

/// Truncated product of univariate series of equal length.
pub fn series1_mul(a: &[BigRational], b: &[BigRational]) -> Series1 {
    let n = a.len().min(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly_series(order: usize, terms: &[(usize, usize, i64)]) -> BiSeries {
        let mut s = BiSeries::zero(order);
        for &(a, b, c) in terms {
            s.add_at(a, b, &rational(c, 1));
        }
        s
    }

    #[test]
    fn geometric_product() {
        let d = 3;
        let g1 = BiSeries::from_ratfunc_z1(d, &RatFunc::one_minus_z_pow(1).recip().unwrap()).unwrap();
        let g2 = g1.swap_vars();
        let p = g1.mul(&g2);
        for a in 0..=d {
            for b in 0..=d {
                assert_eq!(p.coeff(a, b), &rational(1, 1));
            }
        }
        assert!(p.is_symmetric());
    }

    #[test]
    fn finalize_rejects_negative_exponent() {
        let mut l = LaurentBiSeries::zero(2);
        l.add_term(-1, 1, &rational(1, 1));
        assert_eq!(l.finalize(), Err(Error::NegativeExponent { a: -1, b: 1 }));
        l.add_term(-1, 1, &rational(-1, 1));
        assert!(l.finalize().unwrap().is_zero());
    }

    fn small_poly() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
        prop::collection::vec((0usize..3, 0usize..3, -3i64..4), 0..6)
    }

    proptest! {
        // Polynomials of degree < 3 per variable multiply exactly in an order-5 window.
        #[test]
        fn mul_matches_polynomial_arithmetic(x in small_poly(), y in small_poly(), z in small_poly()) {
            let (a, b, c) = (poly_series(5, &x), poly_series(5, &y), poly_series(5, &z));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            let mut exact = std::collections::BTreeMap::new();
            for &(i, j, u) in &x { for &(k, l, v) in &y {
                *exact.entry((i + k, j + l)).or_insert(0i64) += u * v;
            }}
            let mut expected = BiSeries::zero(5);
            for ((i, j), v) in exact { expected.add_at(i, j, &rational(v, 1)); }
            prop_assert_eq!(a.mul(&b), expected);
        }
    }
}
