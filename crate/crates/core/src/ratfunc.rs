//! Exact univariate rational functions `num(z)/den(z)` over ℤ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::Poly;

/// A rational function in one parameter, always stored in canonical form:
/// numerator and denominator coprime over ℚ[z], jointly primitive over ℤ,
/// denominator with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
            }
        };
        let c = num_integer::Integer::gcd(&num.content(), &den.content());
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::normalized(Poly::constant(c), Poly::one())
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(Poly::constant(q.numer().clone()), Poly::constant(q.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::normalized(p, Poly::one())
    }

    /// The parameter itself.
    pub fn z() -> Self {
        Self::from_poly(Poly::monomial(1, 1))
    }

    /// `z^k` for any integer `k`.
    pub fn z_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(1, k as usize))
        } else {
            RatFunc { num: Poly::one(), den: Poly::monomial(1, (-k) as usize) }
        }
    }

    /// `[k]_z = Π_{j=1..k} (1 - z^j)`.
    pub fn z_factorial(k: u32) -> Self {
        let mut p = Poly::one();
        for j in 1..=k as usize {
            p = &p * &(&Poly::one() - &Poly::monomial(1, j));
        }
        Self::from_poly(p)
    }

    /// `1 - z^k`
    pub fn one_minus_z_pow(k: u32) -> Self {
        Self::from_poly(&Poly::one() - &Poly::monomial(1, k as usize))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// A polynomial (denominator constant).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// A z-free rational number.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    /// Coefficients of the polynomial, if this is one with integer coefficients.
    pub fn as_integer_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, Error> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self, Error> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Substitutes `z ↦ z^k` (the Adams operation on the parameter).
    pub fn adams(&self, k: usize) -> Self {
        Self::normalized(self.num.adams(k), self.den.adams(k))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return RatFunc::zero();
        }
        Self::normalized(self.num.scale(q.numer()), self.den.scale(q.denom()))
    }

    /// Is the function regular at `z = 0`?
    pub fn is_expandable(&self) -> bool {
        !self.den.eval_at_zero().is_zero()
    }

    /// The first `order + 1` Taylor coefficients at `z = 0`.
    pub fn expand(&self, order: usize) -> Result<Vec<BigRational>, Error> {
        if !self.is_expandable() {
            return Err(Error::NotExpandable);
        }
        Ok(series_quotient(&self.num, &self.den, order))
    }

    /// Laurent expansion at `z = 0`: returns the valuation `v` and the
    /// coefficients of `z^v, …, z^order` (empty when `v > order`).
    pub fn expand_laurent(&self, order: i64) -> (i64, Vec<BigRational>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let vn = self.num.valuation();
        let vd = self.den.valuation();
        let v = vn as i64 - vd as i64;
        let num = self.num.shift_down(vn);
        let den = self.den.shift_down(vd);
        if order < v {
            return (v, Vec::new());
        }
        (v, series_quotient(&num, &den, (order - v) as usize))
    }

    /// Renders with the given variable name. The sign is chosen so that the
    /// denominator's constant term is positive when it has one.
    pub fn render(&self, var: &str) -> String {
        let (num, den) = if self.den.eval_at_zero().is_negative() {
            (-&self.num, -&self.den)
        } else {
            (self.num.clone(), self.den.clone())
        };
        if den.is_one() {
            return num.render(var);
        }
        let ns = num.render(var);
        let ds = den.render(var);
        let ns = if num.term_count() > 1 { format!("({ns})") } else { ns };
        let ds =
            if den.term_count() > 1 || !den.is_constant() && !den.leading().is_one() { format!("({ds})") } else { ds };
        format!("{ns}/{ds}")
    }

    /// Whether the rendering needs parentheses when used as a factor.
    pub fn render_is_compound(&self) -> bool {
        !(self.den.is_one() && self.num.term_count() <= 1)
    }
}

fn series_quotient(num: &Poly, den: &Poly, order: usize) -> Vec<BigRational> {
    let d0 = BigRational::from_integer(den.coeff(0));
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = BigRational::from_integer(num.coeff(k));
        for j in 1..=k.min(den.coeffs().len().saturating_sub(1)) {
            let dj = den.coeff(j);
            if !dj.is_zero() {
                acc -= &out[k - j] * BigRational::from_integer(dj);
            }
        }
        out.push(acc / &d0);
    }
    out
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if rhs.den.is_one() && rhs.num.is_one() {
            return self.clone();
        }
        if self.den.is_one() && self.num.is_one() {
            return rhs.clone();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::recip`] for a checked path.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "RatFunc division by zero");
        RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(a, rf(&[1, 1], &[1]));
        let b = rf(&[2], &[4, -4]);
        assert_eq!(b.numer(), &Poly::from_i64(&[-1]));
        assert_eq!(b.denom(), &Poly::from_i64(&[-2, 2]));
        assert_eq!(b.render("z"), "1/(2-2*z)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(Poly::one(), Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn expansion_examples() {
        let g = rf(&[1], &[1, -1]).expand(3).unwrap();
        assert_eq!(g, vec![q(1, 1); 4]);
        let e = rf(&[1, 0, -1], &[1, -1]).expand(3).unwrap();
        assert_eq!(e, vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)]);
        // 1/((1-z)(1-z^2)) by brute-force convolution of two geometric series
        let brute: Vec<BigRational> =
            (0..=4).map(|k| q((0..=k).filter(|j| (k - j) % 2 == 0).count() as i64, 1)).collect();
        let two = (&rf(&[1], &[1, -1]) * &rf(&[1], &[1, 0, -1])).expand(4).unwrap();
        assert_eq!(two, brute);
        assert_eq!(brute, vec![q(1, 1), q(1, 1), q(2, 1), q(2, 1), q(3, 1)]);
    }

    #[test]
    fn not_expandable_at_origin() {
        assert_eq!(rf(&[1], &[0, 1]).expand(2), Err(Error::NotExpandable));
    }

    #[test]
    fn laurent_expansion() {
        let f = rf(&[1], &[0, 1, -1]); // 1/(z(1-z))
        let (v, c) = f.expand_laurent(2);
        assert_eq!(v, -1);
        assert_eq!(c, vec![q(1, 1); 4]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(rf(&[1], &[1, -1]).to_string(), "1/(1-z)");
        assert_eq!(rf(&[2], &[1, 0, -1]).to_string(), "2/(1-z^2)");
        assert_eq!(rf(&[1, -1], &[1]).to_string(), "1-z");
        assert_eq!(RatFunc::z_pow(-2).to_string(), "1/z^2");
    }
}
