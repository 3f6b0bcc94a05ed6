//! `Ω` on virtual characters, expanded with `z₂` outermost.

use std::collections::BTreeMap;

use crate::character::VirtualCharacter;
use crate::error::Error;
use crate::ratfunc::RatFunc;
use crate::series::BiSeries;

/// A series in `z₂`, truncated above degree `order`, whose coefficients are
/// exact rational functions of `z₁`.
///
/// Products are exact in every degree `≤ order` as long as both factors have
/// no negative `z₂` degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSeries {
    order: usize,
    coeffs: BTreeMap<i64, RatFunc>,
}

impl WedgeSeries {
    pub fn zero(order: usize) -> Self {
        WedgeSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        Self::term(order, 0, RatFunc::one())
    }

    /// `r(z₁) z₂ᵇ`
    pub fn term(order: usize, b: i64, r: RatFunc) -> Self {
        let mut out = Self::zero(order);
        out.add_term(b, &r);
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, b: i64) -> RatFunc {
        self.coeffs.get(&b).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients by increasing `z₂` degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        self.coeffs.iter().map(|(&b, r)| (b, r))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, b: i64, r: &RatFunc) {
        if b > self.order as i64 || r.is_zero() {
            return;
        }
        let e = self.coeffs.entry(b).or_default();
        *e = &*e + r;
        if e.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn add_assign(&mut self, rhs: &WedgeSeries) {
        for (&b, r) in &rhs.coeffs {
            self.add_term(b, r);
        }
    }

    pub fn mul(&self, rhs: &WedgeSeries) -> WedgeSeries {
        let order = self.order.min(rhs.order);
        let mut out = WedgeSeries::zero(order);
        for (&b1, r1) in &self.coeffs {
            for (&b2, r2) in &rhs.coeffs {
                if b1 + b2 <= order as i64 {
                    out.add_term(b1 + b2, &(r1 * r2));
                }
            }
        }
        out
    }

    /// Drops degrees above `order`.
    pub fn truncate(&self, order: usize) -> WedgeSeries {
        let mut out = WedgeSeries::zero(order);
        for (&b, r) in &self.coeffs {
            out.add_term(b, r);
        }
        out
    }

    /// Expands every coefficient in `z₁`. Fails if some coefficient has a
    /// pole at `z₁ = 0` or a negative `z₂` degree survives.
    pub fn to_biseries(&self) -> Result<BiSeries, Error> {
        let mut out = BiSeries::zero(self.order);
        for (&b, r) in &self.coeffs {
            if b < 0 {
                let (a, _) = r.expand_laurent(0);
                return Err(Error::NegativeExponent { a, b });
            }
            if !r.is_expandable() {
                return Err(Error::NotHolomorphic { z2_degree: b as u32 });
            }
            for (a, c) in r.expand(self.order)?.into_iter().enumerate() {
                out.set(a, b as usize, c);
            }
        }
        Ok(out)
    }
}

/// Is `z₁ᵖz₂^q` expanded as a geometric series in itself (rather than in its
/// inverse)?
pub fn is_small(p: i32, q: i32) -> bool {
    q > 0 || (q == 0 && p > 0)
}

fn z1_pow(p: i64) -> RatFunc {
    RatFunc::z_pow(p)
}

/// `(1 - z₁ᵖz₂^q)⁻¹` under the wedge rule. A `z₂`-free factor stays the
/// exact rational function `1/(1 - z₁ᵖ)`, whichever way it is oriented.
fn geometric(p: i32, q: i32, order: usize) -> WedgeSeries {
    let (p, q) = (p as i64, q as i64);
    if q == 0 {
        let r = (&RatFunc::one() - &z1_pow(p)).recip().expect("p != 0");
        return WedgeSeries::term(order, 0, r);
    }
    let mut out = WedgeSeries::zero(order);
    if q > 0 {
        let mut k = 0;
        while k * q <= order as i64 {
            out.add_term(k * q, &z1_pow(k * p));
            k += 1;
        }
    } else {
        // -Σ_{k≥1} m^{-k}
        let mut k = 1;
        while -k * q <= order as i64 {
            out.add_term(-k * q, &-z1_pow(-k * p));
            k += 1;
        }
    }
    out
}

/// `Ω(A) = Π (1 - m)^{-c}` over the monomials `m` of `A` with multiplicity
/// `c`, truncated at `z₂` degree `order`.
pub fn omega(a: &VirtualCharacter, order: usize) -> Result<WedgeSeries, Error> {
    if a.multiplicity(0, 0) != 0 {
        return Err(Error::OmegaOfOne);
    }
    // polynomial factors with q < 0 lower the z₂ valuation; widen the
    // working window so that truncation stays exact
    let shift: i64 =
        a.weights().filter(|&(&(_, q), &c)| c < 0 && q < 0).map(|(&(_, q), &c)| (c * q as i64).abs()).sum();
    let work = order + shift as usize;
    let mut poly = WedgeSeries::one(work);
    let mut series = WedgeSeries::one(work);
    for (&(p, q), &c) in a.weights() {
        if c > 0 {
            let g = geometric(p, q, work);
            for _ in 0..c {
                series = series.mul(&g);
            }
        } else {
            // (1 - m)^{|c|}
            let mut f = WedgeSeries::one(work);
            f.add_term(q as i64, &-z1_pow(p as i64));
            for _ in 0..-c {
                poly = poly.mul(&f);
            }
        }
    }
    Ok(poly.mul(&series).truncate(order))
}
