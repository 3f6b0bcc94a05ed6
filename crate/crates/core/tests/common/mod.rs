//! Independent oracles shared by the integration tests. None of them calls
//! the Jing construction or the production inner products.

#![allow(dead_code)]

use hilbert_chi::laurent::XLaurent;
use hilbert_chi::partition::{partitions_of, Partition};
use hilbert_chi::symfunc::to_finite_vars;
use hilbert_chi::{Basis, BiSeries, RatFunc, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn el(b: Basis, parts: &[u32]) -> SymFunc {
    SymFunc::basis_element(b, Partition::new(parts.to_vec()).expect("partition"))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `⟨p_ρ, p_σ⟩ = δ_{ρσ} z_ρ Π (1 - z^{ρ_i})⁻¹`, summed directly.
pub fn inner(f: &SymFunc, g: &SymFunc) -> RatFunc {
    let (f, g) = (f.to_power().unwrap(), g.to_power().unwrap());
    let mut acc = RatFunc::zero();
    for (rho, c) in f.terms() {
        let d = g.coeff(rho);
        if d.is_zero() {
            continue;
        }
        let mut w = RatFunc::from_int(rho.zee());
        for &k in rho.parts() {
            w = &w / &RatFunc::one_minus_z_pow(k);
        }
        acc = &acc + &(&(c * &d) * &w);
    }
    acc
}

/// Gram–Schmidt on the monomial basis of degree `d`, processed from the
/// bottom of a linear extension of dominance order. Returns `(λ, P_λ)` in
/// the monomial basis.
pub fn gram_schmidt(d: u32) -> Vec<(Partition, SymFunc)> {
    let mut order = partitions_of(d, d as usize);
    order.reverse();
    let mut done: Vec<(Partition, SymFunc, RatFunc)> = Vec::new();
    for lambda in order {
        let m = SymFunc::basis_element(Basis::Monomial, lambda.clone());
        let mut p = m.clone();
        for (_, q, norm) in &done {
            let c = &inner(&m, q) / norm;
            if !c.is_zero() {
                p = p.sub(&q.scale(&c)).unwrap();
            }
        }
        let p = p.convert(Basis::Monomial).unwrap();
        let norm = inner(&p, &p);
        done.push((lambda, p, norm));
    }
    done.into_iter().map(|(l, p, _)| (l, p)).collect()
}

pub fn sym_eq(a: &SymFunc, b: &SymFunc) -> bool {
    a.sub(b).unwrap().to_power().unwrap().is_zero()
}

/// `(f, g)_{z,n}` from the full product
/// `(1/n!) [x⁰] f(X) g(X̄) Π_{i≠j} (1 - x_i/x_j) Σ_k (z x_i/x_j)^k`,
/// expanded as a power series in `z` through `z^order`.
pub fn finite_inner_series(f: &SymFunc, g: &SymFunc, n: usize, order: usize) -> Vec<BigRational> {
    let lift = |x: XLaurent<RatFunc>| {
        let mut out = XLaurent::zero(n + 1);
        for (e, c) in x.terms() {
            for (k, v) in c.expand(order).unwrap().into_iter().enumerate() {
                if !v.is_zero() {
                    let mut e = e.clone();
                    e.push(k as i32);
                    out.add_term(e, &v);
                }
            }
        }
        out
    };
    let keep = |e: &[i32]| e[n] as usize <= order;
    let fx = lift(to_finite_vars(f, n, false).unwrap());
    let gx = lift(to_finite_vars(g, n, true).unwrap());
    let mut acc = fx.mul_filtered(&gx, keep);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut factor = XLaurent::zero(n + 1);
            for k in 0..=order as i32 {
                let mut e = vec![0; n + 1];
                e[i] = k;
                e[j] = -k;
                e[n] = k;
                factor.add_term(e.clone(), &int(1));
                e[i] += 1;
                e[j] -= 1;
                factor.add_term(e, &int(-1));
            }
            acc = acc.mul_filtered(&factor, keep);
        }
    }
    let mut out = vec![BigRational::zero(); order + 1];
    for (e, c) in acc.terms() {
        if e[..n].iter().all(|&x| x == 0) {
            out[e[n] as usize] += c;
        }
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    out.into_iter().map(|c| c / BigRational::from_integer(fact.clone())).collect()
}

/// The `qⁿ` coefficient of `Π_{i,j ≥ 0} (1 - z₁ⁱz₂ʲq)⁻¹` in the window
/// `a, b ≤ order`: multisets of `n` lattice points counted by total weight.
pub fn multisets_of_points(n: usize, order: usize) -> BiSeries {
    let points: Vec<(usize, usize)> = (0..=order).flat_map(|i| (0..=order).map(move |j| (i, j))).collect();
    let mut out = BiSeries::zero(order);
    fn rec(points: &[(usize, usize)], start: usize, left: usize, a: usize, b: usize, order: usize, out: &mut BiSeries) {
        if left == 0 {
            out.add_at(a, b, &BigRational::one());
            return;
        }
        for k in start..points.len() {
            let (i, j) = points[k];
            if a + i <= order && b + j <= order {
                rec(points, k, left - 1, a + i, b + j, order, out);
            }
        }
    }
    rec(&points, 0, n, 0, 0, order, &mut out);
    out
}

/// `Σ_{μ : μ̃ = λ} t^{|μ|}` through `t^order`, where `μ` runs over partitions
/// with at most `|λ|` parts (zeros included in the multiplicity type).
pub fn multiplicity_type_series(lambda: &Partition, order: usize) -> Vec<BigRational> {
    let n = lambda.size() as usize;
    let mut out = vec![BigRational::zero(); order + 1];
    for m in 0..=order as u32 {
        for mu in partitions_of(m, n) {
            if &mu.multiplicity_type(n).unwrap() == lambda {
                out[m as usize] += BigRational::one();
            }
        }
    }
    out
}

/// Power series coefficients of `Π_{i=1..r} (1 - t^i)⁻¹`.
pub fn inverse_t_factorial(r: u32, order: usize) -> Vec<BigRational> {
    let mut s = vec![BigRational::zero(); order + 1];
    s[0] = BigRational::one();
    for i in 1..=r as usize {
        for k in i..=order {
            let prev = s[k - i].clone();
            s[k] += prev;
        }
    }
    s
}

/// Whether `r` is a polynomial in `z` with nonnegative integer coefficients.
pub fn is_nonneg_int_poly(r: &RatFunc) -> bool {
    match r.as_integer_poly() {
        Some(p) => p.coeffs().iter().all(|c| c >= &BigInt::zero()),
        None => false,
    }
}

/// `r(0)` for `r` regular at the origin.
pub fn at_zero(r: &RatFunc) -> BigRational {
    let d = r.denom().eval_at_zero();
    assert!(!d.is_zero(), "pole at z = 0");
    BigRational::new(r.numer().eval_at_zero(), d)
}
