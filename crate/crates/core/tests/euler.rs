#![allow(clippy::needless_range_loop)]

mod common;

use common::{el, multisets_of_points};
use hilbert_chi::euler::{
    evaluate, fixed_point_data, localization_sum, localization_terms, partition_function, with_threads, Convention,
    EvalOptions, Method,
};
use hilbert_chi::partition::{partitions_up_to, Partition};
use hilbert_chi::{Basis, SymFunc};
use proptest::prelude::*;

fn basket() -> Vec<(&'static str, SymFunc)> {
    vec![
        ("1", SymFunc::one()),
        ("p1", el(Basis::Power, &[1])),
        ("s2", el(Basis::Schur, &[2])),
        ("s11", el(Basis::Schur, &[1, 1])),
        ("s21", el(Basis::Schur, &[2, 1])),
        ("h2", el(Basis::Complete, &[2])),
    ]
}

#[test]
fn partition_function_matches_point_count() {
    let pf = partition_function(4, 6);
    for n in 0..=4 {
        assert_eq!(pf[n], multisets_of_points(n, 6), "q^{n}");
    }
}

#[test]
fn structure_sheaf_against_product_formula() {
    let d = 6;
    let opts = EvalOptions::default();
    for n in 1..=4 {
        let expect = multisets_of_points(n, d);
        for m in Method::ALL.into_iter().filter(|m| m.admits(n)) {
            let r = evaluate(m, &SymFunc::one(), n, d, &opts).unwrap();
            assert_eq!(r.series, expect, "{} n={n}", m.name());
            assert!(r.negative_terms.is_empty());
        }
    }
}

#[test]
fn methods_agree_on_basket() {
    let d = 4;
    let opts = EvalOptions::default();
    for (name, f) in basket() {
        for n in 1..=3 {
            let runs: Vec<_> = Method::ALL.iter().map(|&m| evaluate(m, &f, n, d, &opts).unwrap()).collect();
            for r in &runs[1..] {
                assert_eq!(r.series, runs[0].series, "{name} n={n} {}", r.method.name());
            }
            assert!(runs[0].negative_terms.is_empty(), "{name} n={n}");
            let s = &runs[0].series;
            assert!(s.is_symmetric(), "{name} n={n}");
            assert!(s.all_integers(), "{name} n={n}");
            if name != "p1" {
                assert!(s.negative_coefficients().is_empty(), "{name} n={n}");
            }
        }
    }
}

#[test]
fn conventions_calibrate_on_structure_sheaf() {
    for n in 1..=3 {
        let expect = multisets_of_points(n, 5);
        for conv in [Convention::Row, Convention::Col] {
            let s = localization_sum(&SymFunc::one(), n, 5, conv).unwrap().to_biseries().unwrap();
            assert_eq!(s, expect, "{} n={n}", conv.name());
        }
    }
    assert_eq!(Convention::default(), Convention::Row);
}

#[test]
fn wedge_sums_are_regular_but_summands_are_not() {
    let f = el(Basis::Schur, &[1]);
    for n in 2..=3 {
        let terms = localization_terms(&f, n, 4, Convention::Row).unwrap();
        let singular = terms.iter().any(|(_, t)| t.terms().any(|(_, r)| !r.is_expandable()));
        assert!(singular, "n={n}: every summand already regular");
        let sum = localization_sum(&f, n, 4, Convention::Row).unwrap();
        assert!(sum.terms().all(|(_, r)| r.is_expandable()), "n={n}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let f = el(Basis::Schur, &[2, 1]);
    let opts = EvalOptions::default();
    let run = |t| with_threads(Some(t), || evaluate(Method::Localization, &f, 3, 4, &opts).unwrap().series);
    let one = run(1);
    assert_eq!(one, run(4));
    let run = |t| with_threads(Some(t), || evaluate(Method::Theorem, &f, 3, 4, &opts).unwrap().series);
    assert_eq!(run(1), run(3));
}

#[test]
fn guards_refuse_large_n() {
    let opts = EvalOptions::default();
    assert!(evaluate(Method::ConstantTerm, &SymFunc::one(), 4, 1, &opts).is_err());
    assert!(evaluate(Method::Theorem, &SymFunc::one(), 7, 1, &opts).is_err());
    let forced = EvalOptions { override_guard: true, ..opts };
    assert!(evaluate(Method::Theorem, &SymFunc::one(), 7, 1, &forced).is_ok());
}

fn partition_strategy(max_size: u32) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = partitions_up_to(max_size).into_iter().filter(|p| !p.is_empty()).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn transpose_consistency(mu in partition_strategy(5)) {
        let d = fixed_point_data(&mu, Convention::Row).unwrap();
        let t = fixed_point_data(&mu.conjugate(), Convention::Row).unwrap();
        prop_assert_eq!(d.taut_char.swap_vars(), t.taut_char);
        prop_assert_eq!(d.cotangent_char.swap_vars(), t.cotangent_char);
        prop_assert_eq!(d.taut_char.rank(), mu.size() as i64);
        prop_assert_eq!(d.cotangent_char.rank(), 2 * mu.size() as i64);
    }
}
