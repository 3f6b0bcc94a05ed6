//! Torus-equivariant Euler characteristics `χ_n(f(𝒰))` on the Hilbert scheme
//! of `n` points in the plane, as truncated series in `z₁, z₂`.
//!
//! Three evaluators compute the same series independently:
//! fixed-point localization, constant-term extraction, and the
//! Hall–Littlewood sum over pairs of partitions. Symmetric-function
//! coefficients that depend on the Hall–Littlewood parameter are read with
//! that parameter set to `z₁`.

mod constant_term;
mod cross_check;
mod fixed_point;
mod localization;
mod omega;
mod parallel;
mod partition_function;
mod theorem;

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::series::BiSeries;
use crate::symfunc::SymFunc;

pub use cross_check::{cross_check, CrossCheckReport, Mismatch};
pub use fixed_point::{fixed_point_data, Convention, FixedPointData};
pub use localization::{evaluate_at_character, localization_sum, localization_terms};
pub use omega::{is_small, omega, WedgeSeries};
pub use parallel::with_threads;
pub use partition_function::partition_function;
pub use theorem::{theorem_coefficient, NegativeTerm};

/// Largest `n` the constant-term evaluator accepts without an override.
pub const CONSTANT_TERM_MAX_N: usize = 3;
/// Largest `n` the localization and theorem evaluators accept without an
/// override.
pub const MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Localization,
    ConstantTerm,
    Theorem,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Theorem, Method::Localization, Method::ConstantTerm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Localization => "localization",
            Method::ConstantTerm => "constant-term",
            Method::Theorem => "theorem",
        }
    }

    pub fn from_name(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn limit(self) -> usize {
        match self {
            Method::ConstantTerm => CONSTANT_TERM_MAX_N,
            _ => MAX_N,
        }
    }

    /// Does the default guard admit `n`?
    pub fn admits(self, n: usize) -> bool {
        n <= self.limit()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    pub convention: Convention,
    /// Lifts the complexity guards.
    pub override_guard: bool,
}

#[derive(Clone, Debug)]
pub struct EulerResult {
    pub method: Method,
    pub series: BiSeries,
    pub n: usize,
    pub order: usize,
    /// `f` as rendered in the power-sum basis.
    pub f: String,
    pub elapsed: Duration,
    /// Theorem summands that were not individually regular at `z₁ = 0`.
    pub negative_terms: Vec<NegativeTerm>,
}

fn check(method: Method, n: usize, opts: &EvalOptions) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if !opts.override_guard && !method.admits(n) {
        return Err(Error::ComplexityGuard { method: method.name(), n, limit: method.limit() });
    }
    Ok(())
}

pub fn evaluate(method: Method, f: &SymFunc, n: usize, order: usize, opts: &EvalOptions) -> Result<EulerResult, Error> {
    check(method, n, opts)?;
    let start = Instant::now();
    let mut negative_terms = Vec::new();
    let series = match method {
        Method::Localization => localization_sum(f, n, order, opts.convention)?.to_biseries()?,
        Method::ConstantTerm => constant_term::constant_term_series(f, n, order)?,
        Method::Theorem => {
            let (s, neg) = theorem::theorem_series(f, n, order)?;
            negative_terms = neg;
            s
        }
    };
    Ok(EulerResult { method, series, n, order, f: f.to_power()?.render("z"), elapsed: start.elapsed(), negative_terms })
}

pub fn euler_localization(f: &SymFunc, n: usize, order: usize) -> Result<EulerResult, Error> {
    evaluate(Method::Localization, f, n, order, &EvalOptions::default())
}

pub fn euler_constant_term(f: &SymFunc, n: usize, order: usize) -> Result<EulerResult, Error> {
    evaluate(Method::ConstantTerm, f, n, order, &EvalOptions::default())
}

pub fn euler_theorem(f: &SymFunc, n: usize, order: usize) -> Result<EulerResult, Error> {
    evaluate(Method::Theorem, f, n, order, &EvalOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::ratfunc::RatFunc;
    use crate::symfunc::Basis;

    fn geometric_square(d: usize) -> BiSeries {
        let g = BiSeries::from_ratfunc_z1(d, &RatFunc::one_minus_z_pow(1).recip().unwrap()).unwrap();
        g.mul(&g.swap_vars())
    }

    #[test]
    fn one_point() {
        let d = 4;
        let p1 = SymFunc::basis_element(Basis::Power, part![1]);
        for f in [SymFunc::one(), p1] {
            for m in Method::ALL {
                let r = evaluate(m, &f, 1, d, &EvalOptions::default()).unwrap();
                assert_eq!(r.series, geometric_square(d), "{m:?}");
            }
        }
    }

    #[test]
    fn two_points_match_the_product() {
        let d = 4;
        let expect = partition_function(2, d).remove(2);
        for m in Method::ALL {
            let r = evaluate(m, &SymFunc::one(), 2, d, &EvalOptions::default()).unwrap();
            assert_eq!(r.series, expect, "{m:?}");
        }
    }

    #[test]
    fn e2_in_one_variable_vanishes() {
        let s11 = SymFunc::basis_element(Basis::Schur, part![1, 1]);
        for m in Method::ALL {
            let r = evaluate(m, &s11, 1, 3, &EvalOptions::default()).unwrap();
            assert!(r.series.is_zero(), "{m:?}");
        }
    }

    #[test]
    fn guards() {
        let one = SymFunc::one();
        assert!(matches!(euler_constant_term(&one, 4, 2), Err(Error::ComplexityGuard { limit: 3, .. })));
        assert!(matches!(euler_theorem(&one, 7, 2), Err(Error::ComplexityGuard { limit: 6, .. })));
        assert!(euler_localization(&one, 0, 2).is_err());
    }
}
