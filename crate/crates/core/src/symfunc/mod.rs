//! Symmetric functions with coefficients in ℚ(z).
//!
//! A [`SymFunc`] is a sparse expansion in one of seven bases. All base
//! changes, products and inner products go through the power-sum basis.

mod finite;
mod inner;
pub(crate) mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::Error;
use crate::hall_littlewood;
use crate::partition::Partition;
use crate::ratfunc::RatFunc;

pub use finite::{hl_inner_finite, kostant_z, principal_spec, to_finite_vars};
pub use inner::{hl_inner, hl_inner_weight};

/// Largest homogeneous degree any symmetric-function computation may touch.
pub const DEGREE_BOUND: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// power sums `p`
    Power,
    /// monomial `m`
    Monomial,
    /// complete homogeneous `h`
    Complete,
    /// elementary `e`
    Elementary,
    /// Schur `s`
    Schur,
    /// Hall–Littlewood `P`
    HallLittlewoodP,
    /// Hall–Littlewood `Q`
    HallLittlewoodQ,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::Power => 'p',
            Basis::Monomial => 'm',
            Basis::Complete => 'h',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
            Basis::HallLittlewoodP => 'P',
            Basis::HallLittlewoodQ => 'Q',
        }
    }

    pub fn from_symbol(c: char) -> Option<Basis> {
        Some(match c {
            'p' => Basis::Power,
            'm' => Basis::Monomial,
            'h' => Basis::Complete,
            'e' => Basis::Elementary,
            's' => Basis::Schur,
            'P' => Basis::HallLittlewoodP,
            'Q' => Basis::HallLittlewoodQ,
            _ => return None,
        })
    }

    pub const ALL: [Basis; 7] = [
        Basis::Power,
        Basis::Monomial,
        Basis::Complete,
        Basis::Elementary,
        Basis::Schur,
        Basis::HallLittlewoodP,
        Basis::HallLittlewoodQ,
    ];
}

/// A symmetric function as `Σ c_λ b_λ` in a fixed basis `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatFunc>,
}

pub(crate) fn check_degree(lambda: &Partition) -> Result<(), Error> {
    let degree = lambda.size();
    if degree > DEGREE_BOUND {
        return Err(Error::DegreeBoundExceeded { degree, bound: DEGREE_BOUND });
    }
    Ok(())
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::basis_element(Basis::Power, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, RatFunc::one())
    }

    pub fn term(basis: Basis, lambda: Partition, c: RatFunc) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, &c);
        out
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, RatFunc)>) -> Self {
        let mut out = Self::zero(basis);
        for (l, c) in terms {
            out.add_term(l, &c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c.clone());
            }
        }
    }

    /// Largest `|λ|` in the support (0 for the zero function).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Degrees of the nonzero homogeneous components.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The component of degree `d`.
    pub fn homogeneous(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn scale_rational(&self, c: &BigRational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v.scale(c))))
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect() }
    }

    /// Sum; the result is in `self`'s basis when the bases agree, otherwise
    /// in the power-sum basis.
    pub fn add(&self, rhs: &SymFunc) -> Result<SymFunc, Error> {
        let (mut a, b) =
            if self.basis == rhs.basis { (self.clone(), rhs.clone()) } else { (self.to_power()?, rhs.to_power()?) };
        for (l, c) in b.terms {
            a.add_term(l, &c);
        }
        Ok(a)
    }

    pub fn sub(&self, rhs: &SymFunc) -> Result<SymFunc, Error> {
        self.add(&rhs.neg())
    }

    /// Product in Λ, returned in the power-sum basis.
    pub fn multiply(&self, rhs: &SymFunc) -> Result<SymFunc, Error> {
        let a = self.to_power()?;
        let b = rhs.to_power()?;
        let mut out = SymFunc::zero(Basis::Power);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(lb.parts());
                let rho = Partition::from_unsorted(parts);
                check_degree(&rho)?;
                out.add_term(rho, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn to_power(&self) -> Result<SymFunc, Error> {
        if self.basis == Basis::Power {
            for l in self.terms.keys() {
                check_degree(l)?;
            }
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(Basis::Power);
        for (lambda, c) in &self.terms {
            check_degree(lambda)?;
            match self.basis {
                Basis::HallLittlewoodP | Basis::HallLittlewoodQ => {
                    let e = if self.basis == Basis::HallLittlewoodP {
                        hall_littlewood::hl_p(lambda)?
                    } else {
                        hall_littlewood::hl_q(lambda)?
                    };
                    for (rho, v) in e.terms() {
                        out.add_term(rho.clone(), &(c * v));
                    }
                }
                b => {
                    let t = tables::transition(b, lambda.size());
                    for (rho, v) in &t.to_p[lambda] {
                        out.add_term(rho.clone(), &c.scale(v));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Re-expands in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc, Error> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let p = self.to_power()?;
        if target == Basis::Power {
            return Ok(p);
        }
        let mut out = SymFunc::zero(target);
        match target {
            Basis::HallLittlewoodP | Basis::HallLittlewoodQ => {
                for d in p.degrees() {
                    let comp = p.homogeneous(d);
                    for (lambda, c) in hall_littlewood::expand_in_hl(&comp, target)? {
                        out.add_term(lambda, &c);
                    }
                }
            }
            b => {
                for (rho, c) in &p.terms {
                    let t = tables::transition(b, rho.size());
                    for (lambda, v) in &t.from_p[rho] {
                        out.add_term(lambda.clone(), &c.scale(v));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Substitutes the parameter `z ↦ z^k` in every coefficient.
    pub fn adams_coefficients(&self, k: usize) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), c.adams(k))))
    }

    /// True when every coefficient is a z-free rational number.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.as_constant().is_some())
    }

    /// Renders as `c*b[λ] + …`, largest partitions first, using `var` for the
    /// parameter.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let sym = self.basis.symbol();
        let mut s = String::new();
        for (lambda, c) in self.terms.iter().rev() {
            let atom = format!("{sym}{lambda}");
            let term = if c.is_one() {
                atom
            } else if (-c).is_one() {
                format!("-{atom}")
            } else if c.render_is_compound() {
                format!("({})*{atom}", c.render(var))
            } else {
                format!("{}*{atom}", c.render(var))
            };
            if s.is_empty() {
                s = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(&term);
            }
        }
        s
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::poly::Poly;
    use crate::series::rational;

    fn c(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(&rational(n, d))
    }

    fn el(b: Basis, l: Partition) -> SymFunc {
        SymFunc::basis_element(b, l)
    }

    #[test]
    fn h2_in_power_sums() {
        let h2 = el(Basis::Complete, part![2]).to_power().unwrap();
        assert_eq!(h2.coeff(&part![2]), c(1, 2));
        assert_eq!(h2.coeff(&part![1, 1]), c(1, 2));
        assert_eq!(h2.len(), 2);
    }

    #[test]
    fn s11_is_e2() {
        let s11 = el(Basis::Schur, part![1, 1]).to_power().unwrap();
        let e2 = el(Basis::Elementary, part![2]).to_power().unwrap();
        assert_eq!(s11, e2);
        assert_eq!(s11.coeff(&part![1, 1]), c(1, 2));
        assert_eq!(s11.coeff(&part![2]), c(-1, 2));
    }

    #[test]
    fn products() {
        let p1 = el(Basis::Power, part![1]);
        assert_eq!(p1.multiply(&p1).unwrap(), el(Basis::Power, part![1, 1]));
        let e1 = el(Basis::Elementary, part![1]);
        let sq = e1.multiply(&e1).unwrap().convert(Basis::Monomial).unwrap();
        assert_eq!(sq, SymFunc::from_terms(Basis::Monomial, [(part![2], c(1, 1)), (part![1, 1], c(2, 1))]));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let big = el(Basis::Complete, part![13]);
        assert!(matches!(big.to_power(), Err(Error::DegreeBoundExceeded { degree: 13, bound: 12 })));
        let six = el(Basis::Power, part![7]);
        assert!(six.multiply(&six).is_err());
    }

    #[test]
    fn round_trips_all_classical_bases() {
        for lambda in crate::partition::partitions_up_to(6) {
            for b in [Basis::Monomial, Basis::Complete, Basis::Elementary, Basis::Schur, Basis::Power] {
                let f = el(b, lambda.clone());
                for t in [Basis::Monomial, Basis::Complete, Basis::Elementary, Basis::Schur, Basis::Power] {
                    let back = f.convert(t).unwrap().convert(b).unwrap();
                    assert_eq!(back, f, "{b:?} -> {t:?} -> {b:?} on {lambda}");
                }
            }
        }
    }

    #[test]
    fn render_uses_descending_partitions() {
        let f = SymFunc::from_terms(
            Basis::Monomial,
            [(part![2], RatFunc::one()), (part![1, 1], RatFunc::from_poly(Poly::from_i64(&[1, -1])))],
        );
        assert_eq!(f.render("z"), "m[2] + (1-z)*m[1,1]");
        assert_eq!(SymFunc::term(Basis::Power, part![1], c(-2, 1)).render("z"), "-2*p[1]");
    }
}
