#![allow(clippy::needless_range_loop)]

mod common;

use common::{el, finite_inner_series, int, inverse_t_factorial, multiplicity_type_series, multisets_of_points};
use hilbert_chi::hall_littlewood::{b_norm_finite, hl_p};
use hilbert_chi::partition::{partitions_of, partitions_up_to, Partition};
use hilbert_chi::series::series1_mul;
use hilbert_chi::symfunc::{hl_inner_finite, principal_spec};
use hilbert_chi::{Basis, RatFunc, SymFunc};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const ORDER: usize = 10;

fn partition_strategy(max_size: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max_size);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn basis_strategy() -> impl Strategy<Value = Basis> {
    (0..Basis::ALL.len()).prop_map(|i| Basis::ALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conversion_round_trip(lambda in partition_strategy(6), a in basis_strategy(), b in basis_strategy()) {
        let f = SymFunc::basis_element(a, lambda.clone());
        let back = f.convert(b).unwrap().convert(a).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert!(back.coeff(&lambda).is_one());
    }

    #[test]
    fn finite_pairing_matches_full_product(
        n in 1usize..=3,
        mu in partition_strategy(3),
        nu in partition_strategy(3),
        b1 in basis_strategy(),
        b2 in basis_strategy(),
    ) {
        let (f, g) = (SymFunc::basis_element(b1, mu), SymFunc::basis_element(b2, nu));
        let exact = hl_inner_finite(&f, &g, n).unwrap();
        prop_assert_eq!(exact.expand(8).unwrap(), finite_inner_series(&f, &g, n, 8));
    }
}

#[test]
fn finite_orthogonality() {
    for n in 1..=3 {
        let ps: Vec<Partition> = partitions_up_to(3).into_iter().filter(|p| p.len() <= n).collect();
        for mu in &ps {
            for nu in &ps {
                let got = hl_inner_finite(&hl_p(mu).unwrap(), &hl_p(nu).unwrap(), n).unwrap();
                let expect = if mu == nu {
                    &RatFunc::one_minus_z_pow(1).pow(n as i32).unwrap() / &b_norm_finite(mu, n).unwrap()
                } else {
                    RatFunc::zero()
                };
                assert_eq!(got, expect, "n={n} {mu} {nu}");
                assert_eq!(got.expand(8).unwrap(), finite_inner_series(&hl_p(mu).unwrap(), &hl_p(nu).unwrap(), n, 8));
            }
        }
    }
}

#[test]
fn principal_spec_examples() {
    let h2 = principal_spec(&el(Basis::Complete, &[2]), 5).unwrap();
    assert_eq!(h2, [1, 1, 2, 2, 3, 3].map(int));
    let p1 = principal_spec(&el(Basis::Power, &[1]), 4).unwrap();
    assert_eq!(p1, [1; 5].map(int));
    // e₂ at 1, t, t², …: pairs i < j counted by i + j
    let mut brute = vec![BigRational::zero(); 7];
    for i in 0..7 {
        for j in i + 1..7 {
            if i + j <= 6 {
                brute[i + j] += int(1);
            }
        }
    }
    assert_eq!(principal_spec(&el(Basis::Monomial, &[1, 1]), 6).unwrap(), brute);
}

#[test]
fn multiplicity_type_identity() {
    for lambda in partitions_up_to(5).into_iter().filter(|l| !l.is_empty()) {
        let m = principal_spec(&SymFunc::basis_element(Basis::Monomial, lambda.clone()), ORDER).unwrap();
        assert_eq!(m, multiplicity_type_series(&lambda, ORDER), "m{lambda}");
    }
}

#[test]
fn complete_is_inverse_t_factorial() {
    assert_eq!(principal_spec(&SymFunc::one(), ORDER).unwrap(), inverse_t_factorial(0, ORDER));
    for r in 1..=6 {
        let h = principal_spec(&el(Basis::Complete, &[r]), ORDER).unwrap();
        assert_eq!(h, inverse_t_factorial(r, ORDER), "h{r}");
    }
}

#[test]
fn cauchy_identity_in_two_geometric_alphabets() {
    // Σ_{|λ|=n} m_λ(1,z₂,…) h_λ(1,z₁,…) = qⁿ coefficient of Π (1 - z₁ⁱz₂ʲq)⁻¹
    let d = 6;
    for n in 1..=4u32 {
        let expect = multisets_of_points(n as usize, d);
        let mut got = vec![vec![BigRational::zero(); d + 1]; d + 1];
        for lambda in partitions_of(n, n as usize) {
            let m = principal_spec(&SymFunc::basis_element(Basis::Monomial, lambda.clone()), d).unwrap();
            let h = lambda
                .parts()
                .iter()
                .map(|&k| principal_spec(&el(Basis::Complete, &[k]), d).unwrap())
                .fold(inverse_t_factorial(0, d), |acc, s| series1_mul(&acc, &s));
            for a in 0..=d {
                for b in 0..=d {
                    got[a][b] += &h[a] * &m[b];
                }
            }
        }
        for a in 0..=d {
            for b in 0..=d {
                assert_eq!(&got[a][b], expect.coeff(a, b), "n={n} at z1^{a} z2^{b}");
            }
        }
    }
}
