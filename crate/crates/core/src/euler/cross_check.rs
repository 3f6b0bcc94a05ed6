use num_rational::BigRational;
use num_traits::Signed;

use crate::error::Error;
use crate::symfunc::{Basis, SymFunc};

use super::{evaluate, EulerResult, EvalOptions, Method};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub left: Method,
    pub right: Method,
    pub a: usize,
    pub b: usize,
    pub left_value: BigRational,
    pub right_value: BigRational,
}

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub results: Vec<EulerResult>,
    pub mismatches: Vec<Mismatch>,
    /// `None` when `f` is not Schur-positive and the check is skipped.
    pub negative: Option<Vec<(Method, usize, usize)>>,
    /// Coordinates of non-integral coefficients.
    pub non_integral: Vec<(Method, usize, usize)>,
    /// `None` when `f` depends on the parameter, which breaks the symmetry.
    pub asymmetric: Option<Vec<Method>>,
}

impl CrossCheckReport {
    pub fn agreement(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn pass(&self) -> bool {
        self.agreement()
            && self.negative.as_ref().is_none_or(Vec::is_empty)
            && self.asymmetric.as_ref().is_none_or(Vec::is_empty)
    }
}

/// Nonzero with nonnegative rational Schur coefficients.
pub fn is_schur_positive(f: &SymFunc) -> Result<bool, Error> {
    let s = f.convert(Basis::Schur)?;
    Ok(!s.is_zero() && s.terms().all(|(_, c)| c.as_constant().is_some_and(|q| !q.is_negative())))
}

pub fn cross_check(
    f: &SymFunc,
    n: usize,
    order: usize,
    methods: &[Method],
    opts: &EvalOptions,
) -> Result<CrossCheckReport, Error> {
    let results = methods.iter().map(|&m| evaluate(m, f, n, order, opts)).collect::<Result<Vec<_>, _>>()?;
    let mut mismatches = Vec::new();
    if let Some(first) = results.first() {
        for other in &results[1..] {
            for (a, b, v) in first.series.table() {
                let w = other.series.coeff(a, b);
                if &v != w {
                    mismatches.push(Mismatch {
                        left: first.method,
                        right: other.method,
                        a,
                        b,
                        left_value: v,
                        right_value: w.clone(),
                    });
                }
            }
        }
    }
    let negative = if is_schur_positive(f)? {
        Some(
            results
                .iter()
                .flat_map(|r| r.series.negative_coefficients().into_iter().map(move |(a, b)| (r.method, a, b)))
                .collect(),
        )
    } else {
        None
    };
    let non_integral = results
        .iter()
        .flat_map(|r| r.series.iter().filter(|(_, c)| !c.is_integer()).map(move |((a, b), _)| (r.method, a, b)))
        .collect();
    let asymmetric = f
        .has_constant_coefficients()
        .then(|| results.iter().filter(|r| !r.series.is_symmetric()).map(|r| r.method).collect());
    Ok(CrossCheckReport { results, mismatches, negative, non_integral, asymmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn schur_positivity_detection() {
        let s2 = SymFunc::basis_element(Basis::Schur, part![2]);
        assert!(is_schur_positive(&s2).unwrap());
        let p2 = SymFunc::basis_element(Basis::Power, part![2]);
        assert!(!is_schur_positive(&p2).unwrap());
        assert!(!is_schur_positive(&SymFunc::zero(Basis::Schur)).unwrap());
    }

    #[test]
    fn not_schur_positive_skips_nonnegativity() {
        let f = SymFunc::basis_element(Basis::Power, part![2])
            .sub(&SymFunc::basis_element(Basis::Power, part![1, 1]))
            .unwrap();
        let r = cross_check(&f, 1, 3, &Method::ALL, &EvalOptions::default()).unwrap();
        assert!(r.agreement());
        assert!(r.negative.is_none());
        assert!(r.pass());
    }
}
