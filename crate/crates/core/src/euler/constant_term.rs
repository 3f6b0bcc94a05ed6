use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::character::VirtualCharacter;
use crate::error::Error;
use crate::laurent::XLaurent;
use crate::series::BiSeries;
use crate::symfunc::{to_finite_vars, SymFunc};

use super::omega::omega;

type Line = BTreeMap<i32, BiSeries>;

fn line_add(l: &mut Line, s: i32, c: &BiSeries) {
    if c.is_zero() {
        return;
    }
    let e = l.entry(s).or_insert_with(|| BiSeries::zero(c.order()));
    e.add_assign(c);
    if e.is_zero() {
        l.remove(&s);
    }
}

fn line_mul(a: &Line, b: &Line) -> Line {
    let mut out = Line::new();
    for (sa, ca) in a {
        for (sb, cb) in b {
            line_add(&mut out, sa + sb, &ca.mul(cb));
        }
    }
    out
}

fn one(d: usize) -> BiSeries {
    BiSeries::one(d)
}

fn mono(d: usize, a: usize, b: usize, c: i64) -> BiSeries {
    BiSeries::monomial(d, a, b, BigRational::from_integer(c.into()))
}

/// `(1 - r) Ω(z₁r) Ω(z₂r) (1 - z₁z₂r)` as a series in `r` with truncated
/// coefficients.
fn pair_factor(d: usize) -> Line {
    let mut geo = Line::new();
    for a in 0..=d {
        for b in 0..=d {
            line_add(&mut geo, (a + b) as i32, &mono(d, a, b, 1));
        }
    }
    let delta: Line = [(0, one(d)), (1, mono(d, 0, 0, -1))].into();
    let tail: Line = [(0, one(d)), (1, mono(d, 1, 1, -1))].into();
    line_mul(&line_mul(&geo, &delta), &tail)
}

/// Both orientations of one unordered pair, as `r = x_i/x_j` exponents.
fn unordered_pair_factor(d: usize) -> Line {
    let g = pair_factor(d);
    let g_inv: Line = g.iter().map(|(s, c)| (-s, c.clone())).collect();
    line_mul(&g, &g_inv)
}

fn negative_part(v: &[i32]) -> i64 {
    v.iter().filter(|&&x| x < 0).map(|&x| -(x as i64)).sum()
}

/// `[X]₁ F(X) Ω(X̄)` with
/// `F = f(X) Ω(z₁z₂X) Π_{i≠j} (1 - x_i/x_j) Ω(z₁x_i/x_j) Ω(z₂x_i/x_j) (1 - z₁z₂x_i/x_j)`,
/// times `Ω(1 - M)ⁿ / n!`.
pub fn constant_term_series(f: &SymFunc, n: usize, order: usize) -> Result<BiSeries, Error> {
    let d = order;
    let fx = to_finite_vars(f, n, false)?;
    let mut acc: XLaurent<BiSeries> = XLaurent::zero(n);
    for (e, c) in fx.terms() {
        acc.add_term(e.clone(), &BiSeries::from_ratfunc_z1(d, c)?);
    }
    for i in 0..n {
        let mut geo = XLaurent::zero(n);
        for k in 0..=d {
            let mut e = vec![0i32; n];
            e[i] = k as i32;
            geo.add_term(e, &mono(d, k, k, 1));
        }
        acc = acc.mul(&geo);
    }

    let pair = unordered_pair_factor(d);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for (step, &(i, j)) in pairs.iter().enumerate() {
        // Each remaining pair lowers the total negative exponent by at most
        // its z-degree plus 2, and a surviving term has z-degree ≤ 2d.
        let remaining = (pairs.len() - step - 1) as i64;
        let mut next: XLaurent<BiSeries> = XLaurent::zero(n);
        for (e, c) in acc.terms() {
            let Some(w) = c.valuation() else { continue };
            for (&s, p) in &pair {
                let Some(wp) = p.valuation() else { continue };
                let mut v = e.clone();
                v[i] += s;
                v[j] -= s;
                let need = (negative_part(&v) - 2 * remaining).max(0);
                if (w + wp) as i64 + need > 2 * d as i64 {
                    continue;
                }
                let prod = c.mul(p);
                if !prod.is_zero() {
                    next.add_term(v, &prod);
                }
            }
        }
        acc = next;
    }

    let ct = acc.constant_term_nonneg(BiSeries::zero(d));
    let one_minus_m = VirtualCharacter::m_class().neg().add(&VirtualCharacter::monomial(0, 0, 1));
    let pre = omega(&one_minus_m, d)?.to_biseries()?.pow(n as u32);
    let mut nfact = BigInt::one();
    for k in 2..=n {
        nfact *= k;
    }
    Ok(ct.mul(&pre).scale(&BigRational::new(BigInt::one(), nfact)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_factor_low_terms() {
        let d = 3;
        let g = pair_factor(d);
        // r⁰: 1; r¹: z₁ + z₂ - 1 - z₁z₂
        assert_eq!(g[&0], one(d));
        let expect = mono(d, 1, 0, 1).add(&mono(d, 0, 1, 1)).add(&mono(d, 0, 0, -1)).add(&mono(d, 1, 1, -1));
        assert_eq!(g[&1], expect);
    }

    #[test]
    fn one_variable_constant() {
        let d = 4;
        let got = constant_term_series(&SymFunc::one(), 1, d).unwrap();
        let geo = BiSeries::from_ratfunc_z1(d, &crate::ratfunc::RatFunc::one_minus_z_pow(1).recip().unwrap()).unwrap();
        assert_eq!(got, geo.mul(&geo.swap_vars()));
    }
}
