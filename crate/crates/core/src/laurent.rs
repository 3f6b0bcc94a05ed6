//! Laurent polynomials in `x₁…xₙ` over an exact coefficient ring, and the
//! constant-term pairings used by the contour formulas.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::ratfunc::RatFunc;
use crate::series::BiSeries;

/// The ring operations `XLaurent` needs from its coefficients.
pub trait Coeff: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for BiSeries {
    fn is_zero(&self) -> bool {
        BiSeries::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        BiSeries::add_assign(self, rhs);
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

/// Sparse Laurent polynomial: exponent vector in ℤⁿ → coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct XLaurent<C> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Coeff> XLaurent<C> {
    pub fn zero(nvars: usize) -> Self {
        XLaurent { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(vec![0; nvars], &c);
        out
    }

    pub fn monomial(exps: Vec<i32>, c: C) -> Self {
        let mut out = Self::zero(exps.len());
        out.add_term(exps, &c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> Option<&C> {
        self.terms.get(exps)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: &C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(e) => {
                e.add_assign_ref(c);
                if e.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        XLaurent { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_filtered(rhs, |_| true)
    }

    /// Product keeping only exponent vectors accepted by `keep`.
    pub fn mul_filtered(&self, rhs: &Self, keep: impl Fn(&[i32]) -> bool) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<i32>, C> = BTreeMap::new();
        let mut key = vec![0i32; self.nvars];
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                for i in 0..self.nvars {
                    key[i] = k1[i] + k2[i];
                }
                if !keep(&key) {
                    continue;
                }
                let p = c1.mul_ref(c2);
                if p.is_zero() {
                    continue;
                }
                match acc.get_mut(&key) {
                    Some(e) => e.add_assign_ref(&p),
                    None => {
                        acc.insert(key.clone(), p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        XLaurent { nvars: self.nvars, terms: acc }
    }

    /// Swaps `x_i ↦ x_i⁻¹`.
    pub fn invert_vars(&self) -> Self {
        XLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.iter().map(|e| -e).collect(), c.clone())).collect(),
        }
    }

    /// Coefficient of `x⁰`.
    pub fn constant_term(&self, zero: C) -> C {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or(zero)
    }

    /// Sum of the coefficients of monomials with every exponent ≥ 0. This is
    /// the constant term of the product with `Π_i Σ_{k≥0} x_i^{-k}`.
    pub fn constant_term_nonneg(&self, zero: C) -> C {
        let mut acc = zero;
        for (k, c) in &self.terms {
            if k.iter().all(|&e| e >= 0) {
                acc.add_assign_ref(c);
            }
        }
        acc
    }

    /// Support minus zero coefficients, for invariants.
    pub fn support(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.terms.keys()
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> XLaurent<D> {
        let mut out = XLaurent::zero(self.nvars);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c));
        }
        out
    }
}
