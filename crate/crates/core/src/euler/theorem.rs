use crate::error::Error;
use crate::hall_littlewood::{b_norm_finite, k_exponent, multiplication_column};
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::RatFunc;
use crate::series::{BiSeries, LaurentBiSeries};
use crate::symfunc::SymFunc;

use super::parallel::par_map;

/// A summand `z₁^{m+k} f_{νμ} / b_{ν,n}` whose `z₁`-expansion starts at a
/// negative power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeTerm {
    pub mu: Partition,
    pub nu: Partition,
    pub valuation: i64,
}

/// The `z₂ᵐ` coefficient of the Hall–Littlewood sum as an exact rational
/// function of `z₁`, with the summands that are not individually regular.
pub fn theorem_coefficient(f: &SymFunc, n: usize, m: u32) -> Result<(RatFunc, Vec<NegativeTerm>), Error> {
    let mut acc = RatFunc::zero();
    let mut negative = Vec::new();
    for mu in partitions_of(m, n) {
        for (nu, c) in multiplication_column(f, &mu)? {
            if nu.len() > n {
                continue;
            }
            let e = m as i64 + k_exponent(&mu, &nu);
            let term = &(&RatFunc::z_pow(e) * &c) / &b_norm_finite(&nu, n)?;
            let (valuation, _) = term.expand_laurent(0);
            if valuation < 0 {
                negative.push(NegativeTerm { mu: mu.clone(), nu, valuation });
            }
            acc = &acc + &term;
        }
    }
    Ok((acc, negative))
}

pub fn theorem_series(f: &SymFunc, n: usize, order: usize) -> Result<(BiSeries, Vec<NegativeTerm>), Error> {
    let degrees: Vec<u32> = (0..=order as u32).collect();
    let parts = par_map(&degrees, |&m| theorem_coefficient(f, n, m));
    let mut series = LaurentBiSeries::zero(order);
    let mut negative = Vec::new();
    for (m, part) in degrees.iter().zip(parts) {
        let (r, neg) = part?;
        series.add_z1_ratfunc(*m as i64, &r);
        negative.extend(neg);
    }
    Ok((series.finalize()?, negative))
}
