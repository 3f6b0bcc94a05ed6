use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::character::VirtualCharacter;
use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::symfunc::SymFunc;

use super::fixed_point::{fixed_point_data, Convention};
use super::omega::{omega, WedgeSeries};
use super::parallel::par_map;

type Laurent2 = BTreeMap<(i64, i64), BigInt>;

fn laurent2_mul(a: &Laurent2, b: &Laurent2) -> Laurent2 {
    let mut out = Laurent2::new();
    for (&(p1, q1), c1) in a {
        for (&(p2, q2), c2) in b {
            *out.entry((p1 + p2, q1 + q2)).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `f` evaluated at the alphabet of weights of `chi`, with `f`'s own
/// parameter read as `z₁`.
pub fn evaluate_at_character(f: &SymFunc, chi: &VirtualCharacter, order: usize) -> Result<WedgeSeries, Error> {
    let p = f.to_power()?;
    let mut out = WedgeSeries::zero(order);
    let mut power_sums: BTreeMap<u32, Laurent2> = BTreeMap::new();
    for (rho, c) in p.terms() {
        let mut prod: Laurent2 = [((0, 0), BigInt::from(1))].into();
        for &k in rho.parts() {
            let pk = power_sums.entry(k).or_insert_with(|| {
                chi.weights()
                    .map(|(&(a, b), &m)| ((k as i64 * a as i64, k as i64 * b as i64), BigInt::from(m)))
                    .collect()
            });
            prod = laurent2_mul(&prod, pk);
        }
        // group by z₂ degree into Laurent polynomials in z₁
        let mut rows: BTreeMap<i64, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for ((a, b), v) in &prod {
            rows.entry(*b).or_default().push((*a, v));
        }
        for (b, row) in rows {
            let low = row.iter().map(|(a, _)| *a).min().unwrap_or(0);
            let mut coeffs = vec![BigInt::zero(); (row.iter().map(|(a, _)| *a).max().unwrap_or(0) - low + 1) as usize];
            for (a, v) in row {
                coeffs[(a - low) as usize] += v;
            }
            let r = &RatFunc::from_poly(Poly::from_coeffs(coeffs)) * &RatFunc::z_pow(low);
            out.add_term(b, &(&r * c));
        }
    }
    Ok(out)
}

/// The summand of each fixed point `μ ⊢ n`, before summation.
pub fn localization_terms(
    f: &SymFunc,
    n: usize,
    order: usize,
    convention: Convention,
) -> Result<Vec<(Partition, WedgeSeries)>, Error> {
    let mus = partitions_of(n as u32, n);
    par_map(&mus, |mu| {
        let data = fixed_point_data(mu, convention)?;
        let fiber = evaluate_at_character(f, &data.taut_char, order)?;
        let om = omega(&data.cotangent_char, order)?;
        Ok((mu.clone(), fiber.mul(&om)))
    })
    .into_iter()
    .collect()
}

/// Sum of the fixed-point contributions, still in wedge form.
pub fn localization_sum(f: &SymFunc, n: usize, order: usize, convention: Convention) -> Result<WedgeSeries, Error> {
    let mut total = WedgeSeries::zero(order);
    for (_, t) in localization_terms(f, n, order, convention)? {
        total.add_assign(&t);
    }
    Ok(total)
}
