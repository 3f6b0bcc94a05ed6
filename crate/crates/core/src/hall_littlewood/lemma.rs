//! The exponent `k_{μν}` and the quadratic `ψ` identity it governs.

use crate::error::Error;
use crate::partition::{partitions_up_to, Partition};
use crate::ratfunc::RatFunc;

use super::{b_norm, psi};

fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `k_{μν} = Σ_i C(μ'_i, 2) + C(ν'_i, 2) - μ'_i ν'_i`.
pub fn k_exponent(mu: &Partition, nu: &Partition) -> i64 {
    let (mc, nc) = (mu.conjugate(), nu.conjugate());
    (0..mc.len().max(nc.len()))
        .map(|i| {
            let (a, b) = (mc.part(i) as i64, nc.part(i) as i64);
            choose2(a) + choose2(b) - a * b
        })
        .sum()
}

/// `k_{μν}` from its defining recursion: `k_{∅∅} = 0`, symmetry, and
/// `k_{[a,μ]ν} = k_{μν} + |μ| - |ν|` for `a ≥ μ₁, ν₁`.
pub fn k_exponent_recursive(mu: &Partition, nu: &Partition) -> i64 {
    if mu.is_empty() && nu.is_empty() {
        return 0;
    }
    if mu.first() >= nu.first() {
        let rest = mu.tail();
        k_exponent_recursive(&rest, nu) + rest.size() as i64 - nu.size() as i64
    } else {
        k_exponent_recursive(nu, mu)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemmaCheck {
    pub mu: Partition,
    pub nu: Partition,
    /// `Σ_λ z^{-|λ|} b_λ(z) ψ_{μλ}(z) ψ_{νλ}(z)`
    pub lhs: RatFunc,
    /// `z^{k_{μν}}`
    pub rhs: RatFunc,
    pub pass: bool,
}

/// Evaluates both sides of `Σ_λ z^{-|λ|} b_λ ψ_{μλ} ψ_{νλ} = z^{k_{μν}}`.
/// Only `λ` inside both `μ` and `ν` can contribute.
pub fn verify_lemma(mu: &Partition, nu: &Partition) -> Result<LemmaCheck, Error> {
    let mut lhs = RatFunc::zero();
    for lambda in partitions_up_to(mu.size().min(nu.size())) {
        if !(mu.contains(&lambda) && nu.contains(&lambda)) {
            continue;
        }
        let a = psi(mu, &lambda)?;
        if a.is_zero() {
            continue;
        }
        let b = psi(nu, &lambda)?;
        if b.is_zero() {
            continue;
        }
        let weight = &RatFunc::z_pow(-(lambda.size() as i64)) * &b_norm(&lambda);
        lhs = &lhs + &(&weight * &(&a * &b));
    }
    let rhs = RatFunc::z_pow(k_exponent(mu, nu));
    let pass = lhs == rhs;
    Ok(LemmaCheck { mu: mu.clone(), nu: nu.clone(), lhs, rhs, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn k_examples() {
        assert_eq!(k_exponent(&part![], &part![]), 0);
        assert_eq!(k_exponent(&part![2], &part![1]), -1);
        assert_eq!(k_exponent_recursive(&part![2], &part![1]), -1);
        for mu in partitions_up_to(6) {
            assert_eq!(k_exponent(&mu, &mu), -(mu.size() as i64), "{mu}");
        }
    }

    #[test]
    fn k_formula_matches_recursion() {
        let ps = partitions_up_to(5);
        for mu in &ps {
            for nu in &ps {
                assert_eq!(k_exponent(mu, nu), k_exponent_recursive(mu, nu), "{mu} {nu}");
                assert_eq!(k_exponent(mu, nu), k_exponent(nu, mu));
            }
        }
    }

    #[test]
    fn lemma_small_cases() {
        let c = verify_lemma(&part![], &part![]).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, RatFunc::one());
        let c = verify_lemma(&part![1], &part![1]).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, RatFunc::z_pow(-1));
        let c = verify_lemma(&part![2], &part![1]).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, RatFunc::z_pow(-1));
    }
}
