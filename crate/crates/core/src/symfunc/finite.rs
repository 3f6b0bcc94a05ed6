//! Finite-variable realizations: evaluation at `x₁…xₙ`, the finite
//! Hall–Littlewood pairing, and principal specializations.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::laurent::XLaurent;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::series::{series1_mul, Series1};

use super::{Basis, SymFunc};

/// `f(x₁,…,xₙ)`, or `f(x₁⁻¹,…,xₙ⁻¹)` when `inverted`.
pub fn to_finite_vars(f: &SymFunc, n: usize, inverted: bool) -> Result<XLaurent<RatFunc>, Error> {
    let m = f.convert(Basis::Monomial)?;
    let sign = if inverted { -1 } else { 1 };
    let mut out = XLaurent::zero(n);
    for (lambda, c) in m.terms() {
        if lambda.len() > n {
            continue;
        }
        let mut v: Vec<i32> = lambda.parts().iter().map(|&p| sign * p as i32).collect();
        v.resize(n, 0);
        v.sort_unstable();
        loop {
            out.add_term(v.clone(), c);
            if !next_permutation(&mut v) {
                break;
            }
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// z-weighted Kostant partition function of type `A_{n-1}`: the sum of
/// `z^{Σ a_ij}` over all `a_ij ≥ 0` (`i < j`) with `Σ a_ij (e_i - e_j) = γ`.
pub fn kostant_z(gamma: &[i32]) -> Poly {
    let mut memo = HashMap::new();
    kostant_rec(gamma, &mut memo)
}

fn kostant_rec(gamma: &[i32], memo: &mut HashMap<Vec<i32>, Poly>) -> Poly {
    match gamma.len() {
        0 => return Poly::one(),
        1 => return if gamma[0] == 0 { Poly::one() } else { Poly::zero() },
        _ => {}
    }
    if gamma[0] < 0 || gamma.iter().sum::<i32>() != 0 {
        return Poly::zero();
    }
    if let Some(p) = memo.get(gamma) {
        return p.clone();
    }
    let head = gamma[0];
    let rest = &gamma[1..];
    let mut total = Poly::zero();
    let mut split = vec![0i32; rest.len()];
    compositions(head, &mut split, 0, &mut |a| {
        let shifted: Vec<i32> = rest.iter().zip(a).map(|(g, x)| g + x).collect();
        let k = kostant_rec(&shifted, memo);
        if !k.is_zero() {
            total = &total + &k;
        }
    });
    let out = total.shift_up(head as usize);
    memo.insert(gamma.to_vec(), out.clone());
    out
}

fn compositions(rest: i32, slots: &mut Vec<i32>, i: usize, visit: &mut dyn FnMut(&[i32])) {
    if i + 1 == slots.len() {
        slots[i] = rest;
        visit(slots);
        return;
    }
    for a in 0..=rest {
        slots[i] = a;
        compositions(rest - a, slots, i + 1, visit);
    }
}

/// The finite-variable Hall–Littlewood pairing
/// `(f, g)_{z,n} = (1/n!) [x⁰] f(X) g(X̄) Π_{i≠j} (1 - x_i/x_j)/(1 - z x_i/x_j)`.
///
/// Evaluated exactly through the positive-root form: for symmetric
/// integrands the full constant term equals `n!(1-z)ⁿ/[n]_z` times the
/// constant term against `Π_{i<j} (1 - x_i/x_j)/(1 - z x_i/x_j)`, whose
/// geometric expansions contribute only finitely many terms (counted by the
/// z-weighted Kostant partition function).
pub fn hl_inner_finite(f: &SymFunc, g: &SymFunc, n: usize) -> Result<RatFunc, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("hl_inner_finite needs n >= 1".into()));
    }
    let fx = to_finite_vars(f, n, false)?;
    let gx = to_finite_vars(g, n, true)?;
    let mut integrand = fx.mul(&gx);
    for i in 0..n {
        for j in i + 1..n {
            let mut root = vec![0i32; n];
            root[i] = 1;
            root[j] = -1;
            let factor = XLaurent::constant(n, RatFunc::one()).add(&XLaurent::monomial(root, -RatFunc::one()));
            integrand = integrand.mul(&factor);
        }
    }
    let mut memo = HashMap::new();
    let mut acc = RatFunc::zero();
    for (beta, c) in integrand.terms() {
        let target: Vec<i32> = beta.iter().map(|b| -b).collect();
        let k = kostant_rec(&target, &mut memo);
        if !k.is_zero() {
            acc = &acc + &(c * &RatFunc::from_poly(k));
        }
    }
    let one_minus_z = RatFunc::one_minus_z_pow(1);
    let norm = &one_minus_z.pow(n as i32)? / &RatFunc::z_factorial(n as u32);
    Ok(&acc * &norm)
}

/// `f(1, t, t², …)` truncated at `t^order`; `p_k ↦ 1/(1 - t^k)`.
/// Coefficients must be free of the parameter `z`.
pub fn principal_spec(f: &SymFunc, order: usize) -> Result<Series1, Error> {
    let p = f.to_power()?;
    let mut out: Series1 = vec![BigRational::zero(); order + 1];
    for (rho, c) in p.terms() {
        let c = c
            .as_constant()
            .ok_or_else(|| Error::InvalidArgument("principal specialization needs z-free coefficients".into()))?;
        let mut s: Series1 = vec![BigRational::zero(); order + 1];
        s[0] = BigRational::one();
        for &k in rho.parts() {
            let geom: Series1 = (0..=order)
                .map(|i| if i % k as usize == 0 { BigRational::one() } else { BigRational::zero() })
                .collect();
            s = series1_mul(&s, &geom);
        }
        for (o, v) in out.iter_mut().zip(s) {
            *o += v * &c;
        }
    }
    Ok(out)
}
