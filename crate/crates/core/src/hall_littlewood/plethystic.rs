//! The half vertex operators `Γ₋(A)` (multiplication by a plethystic
//! exponential) and `Γ₊(A)` (the ring map `p_k ↦ p_k + A_k`).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::partition::Partition;
use crate::ratfunc::RatFunc;
use crate::symfunc::{Basis, SymFunc};

/// A finite sum `Σ_e c_e(z) x^e`, where `x` is the grading variable of the
/// vertex operators and `z` the rational-function parameter. Its Adams
/// evaluation is `A_k = Σ_e c_e(z^k) x^{ek}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethysticArg {
    terms: BTreeMap<i32, RatFunc>,
}

impl PlethysticArg {
    pub fn zero() -> Self {
        PlethysticArg { terms: BTreeMap::new() }
    }

    /// `c(z) x^e`
    pub fn monomial(x_exp: i32, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(x_exp, &c);
        out
    }

    pub fn one() -> Self {
        Self::monomial(0, RatFunc::one())
    }

    /// A z-only argument (no `x`).
    pub fn scalar(c: RatFunc) -> Self {
        Self::monomial(0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, RatFunc::one())
    }

    pub fn x_inv() -> Self {
        Self::monomial(-1, RatFunc::one())
    }

    /// `x(1 - z)`, the argument of Jing's operator.
    pub fn jing() -> Self {
        Self::monomial(1, RatFunc::one_minus_z_pow(1))
    }

    fn add_term(&mut self, e: i32, c: &RatFunc) {
        let v = self.terms.entry(e).or_default();
        *v = &*v + c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        PlethysticArg { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    pub fn scale_int(&self, m: i64) -> Self {
        let c = RatFunc::from_int(m);
        PlethysticArg { terms: self.terms.iter().map(|(&e, v)| (e, v * &c)).collect() }.pruned()
    }

    fn pruned(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    /// `A_k` as `x-exponent → coefficient`.
    pub fn adams(&self, k: u32) -> BTreeMap<i32, RatFunc> {
        self.terms.iter().map(|(&e, c)| (e * k as i32, c.adams(k as usize))).collect()
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }
}

/// A Laurent polynomial in `x` with symmetric-function coefficients (all in
/// the power-sum basis).
pub type XGraded = BTreeMap<i32, SymFunc>;

fn graded_add(acc: &mut XGraded, e: i32, f: &SymFunc) -> Result<(), Error> {
    if f.is_zero() {
        return Ok(());
    }
    let next = match acc.remove(&e) {
        Some(old) => old.add(f)?,
        None => f.clone(),
    };
    if !next.is_zero() {
        acc.insert(e, next);
    }
    Ok(())
}

/// Product of x-graded families, dropping symmetric degree above `max_degree`.
pub fn graded_mul(a: &XGraded, b: &XGraded, max_degree: u32) -> Result<XGraded, Error> {
    let mut out = XGraded::new();
    for (ea, fa) in a {
        for (eb, fb) in b {
            let mut prod = SymFunc::zero(Basis::Power);
            for (la, ca) in fa.terms() {
                for (lb, cb) in fb.terms() {
                    if la.size() + lb.size() > max_degree {
                        continue;
                    }
                    let mut parts = la.parts().to_vec();
                    parts.extend_from_slice(lb.parts());
                    prod.add_term(Partition::from_unsorted(parts), &(ca * cb));
                }
            }
            graded_add(&mut out, ea + eb, &prod)?;
        }
    }
    Ok(out)
}

fn lift(f: &SymFunc) -> Result<XGraded, Error> {
    let mut out = XGraded::new();
    graded_add(&mut out, 0, &f.to_power()?)?;
    Ok(out)
}

/// `Γ₊(A)` applied to an x-graded family.
pub fn gamma_plus_graded(a: &PlethysticArg, family: &XGraded) -> Result<XGraded, Error> {
    let mut out = XGraded::new();
    // cache p_k + A_k per k
    let mut shifted: BTreeMap<u32, XGraded> = BTreeMap::new();
    for (&e0, f) in family {
        for (rho, c) in f.to_power()?.terms() {
            let mut acc: XGraded = [(e0, SymFunc::term(Basis::Power, Partition::empty(), c.clone()))].into();
            for &k in rho.parts() {
                let factor = match shifted.get(&k) {
                    Some(f) => f.clone(),
                    None => {
                        let mut fk = XGraded::new();
                        graded_add(
                            &mut fk,
                            0,
                            &SymFunc::basis_element(Basis::Power, Partition::from_unsorted(vec![k])),
                        )?;
                        for (e, v) in a.adams(k) {
                            graded_add(&mut fk, e, &SymFunc::term(Basis::Power, Partition::empty(), v))?;
                        }
                        shifted.insert(k, fk.clone());
                        fk
                    }
                };
                acc = graded_mul(&acc, &factor, u32::MAX)?;
            }
            for (e, g) in acc {
                graded_add(&mut out, e, &g)?;
            }
        }
    }
    Ok(out)
}

/// `Γ₊(A) f`: substitute `p_k ↦ p_k + A_k`.
pub fn gamma_plus(a: &PlethysticArg, f: &SymFunc) -> Result<XGraded, Error> {
    gamma_plus_graded(a, &lift(f)?)
}

/// `exp(Σ_k A_k p_k / k)` up to symmetric degree `max_degree`.
pub fn plethystic_exp(a: &PlethysticArg, max_degree: u32) -> Result<XGraded, Error> {
    let mut acc: XGraded = [(0, SymFunc::one())].into();
    for k in 1..=max_degree {
        for (e, c) in a.adams(k) {
            // exp(c x^e p_k / k) = Σ_m (c/k)^m x^{em} p_k^m / m!
            let base = &c / &RatFunc::from_int(k);
            let mut factor = XGraded::new();
            let mut coeff = RatFunc::one();
            let mut m = 0u32;
            while m * k <= max_degree {
                let lambda = Partition::from_unsorted(vec![k; m as usize]);
                graded_add(&mut factor, e * m as i32, &SymFunc::term(Basis::Power, lambda, coeff.clone()))?;
                m += 1;
                coeff = &(&coeff * &base) * &RatFunc::from_rational(&BigRational::new(BigInt::one(), m.into()));
            }
            acc = graded_mul(&acc, &factor, max_degree)?;
        }
    }
    Ok(acc)
}

/// `Γ₋(A) f`, exact in every symmetric degree `≤ max_degree`.
pub fn gamma_minus(a: &PlethysticArg, f: &SymFunc, max_degree: u32) -> Result<XGraded, Error> {
    gamma_minus_graded(a, &lift(f)?, max_degree)
}

pub fn gamma_minus_graded(a: &PlethysticArg, family: &XGraded, max_degree: u32) -> Result<XGraded, Error> {
    graded_mul(&plethystic_exp(a, max_degree)?, family, max_degree)
}

/// Normalizes every component to the power-sum basis and drops zeros, for
/// comparisons.
pub fn graded_normalize(family: &XGraded) -> Result<XGraded, Error> {
    let mut out = XGraded::new();
    for (&e, f) in family {
        graded_add(&mut out, e, &f.to_power()?)?;
    }
    Ok(out)
}

/// Drops components of symmetric degree above `max_degree`.
pub fn graded_truncate(family: &XGraded, max_degree: u32) -> XGraded {
    family
        .iter()
        .map(|(&e, f)| {
            (
                e,
                SymFunc::from_terms(
                    f.basis(),
                    f.terms().filter(|(l, _)| l.size() <= max_degree).map(|(l, c)| (l.clone(), c.clone())),
                ),
            )
        })
        .filter(|(_, f)| !f.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::series::rational;

    fn p(l: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Power, l)
    }

    fn cst(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(&rational(n, d))
    }

    #[test]
    fn gamma_minus_x_generates_complete() {
        let g = gamma_minus(&PlethysticArg::x(), &SymFunc::one(), 5).unwrap();
        for k in 0..=5u32 {
            let hk = if k == 0 { SymFunc::one() } else { SymFunc::basis_element(Basis::Complete, part![k]) };
            assert_eq!(g[&(k as i32)], hk.to_power().unwrap(), "k = {k}");
        }
    }

    #[test]
    fn gamma_minus_one_low_degrees() {
        let g = gamma_minus(&PlethysticArg::one(), &SymFunc::one(), 2).unwrap();
        let expect = SymFunc::one()
            .add(&SymFunc::basis_element(Basis::Complete, part![1]))
            .unwrap()
            .add(&SymFunc::basis_element(Basis::Complete, part![2]))
            .unwrap()
            .to_power()
            .unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&0], expect);
    }

    #[test]
    fn gamma_minus_jing_argument_degree_two() {
        let g = gamma_minus(&PlethysticArg::jing(), &SymFunc::one(), 2).unwrap();
        let half = cst(1, 2);
        let one_minus_z = RatFunc::one_minus_z_pow(1);
        let expect = SymFunc::from_terms(
            Basis::Power,
            [(part![2], &half * &RatFunc::one_minus_z_pow(2)), (part![1, 1], &half * &(&one_minus_z * &one_minus_z))],
        );
        assert_eq!(g[&2], expect);
    }

    #[test]
    fn gamma_plus_examples() {
        let inv = PlethysticArg::x_inv().neg();
        let g = gamma_plus(&inv, &p(part![1])).unwrap();
        assert_eq!(g[&0], p(part![1]));
        assert_eq!(g[&-1], SymFunc::term(Basis::Power, part![], cst(-1, 1)));

        let g = gamma_plus(&inv, &p(part![1, 1])).unwrap();
        assert_eq!(g[&0], p(part![1, 1]));
        assert_eq!(g[&-1], SymFunc::term(Basis::Power, part![1], cst(-2, 1)));
        assert_eq!(g[&-2], SymFunc::one());

        let any = PlethysticArg::monomial(3, RatFunc::z());
        let g = gamma_plus(&any, &SymFunc::one()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&0], SymFunc::one());
    }
}
