use num_rational::BigRational;
use num_traits::One;

use crate::series::BiSeries;

/// Coefficients of `q⁰ … q^N` in `Π_{0≤i,j≤D} (1 - z₁ⁱz₂ʲq)⁻¹`. Factors
/// with `i > D` or `j > D` do not reach the window.
pub fn partition_function(max_n: usize, order: usize) -> Vec<BiSeries> {
    let mut c: Vec<BiSeries> = (0..=max_n).map(|_| BiSeries::zero(order)).collect();
    c[0] = BiSeries::one(order);
    for i in 0..=order {
        for j in 0..=order {
            let m = BiSeries::monomial(order, i, j, BigRational::one());
            // multiply by 1/(1 - m q): c'_k = c_k + m c'_{k-1}
            for k in 1..=max_n {
                let shifted = c[k - 1].mul(&m);
                c[k].add_assign(&shifted);
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational;

    #[test]
    fn low_coefficients() {
        let d = 4;
        let c = partition_function(2, d);
        assert_eq!(c[0], BiSeries::one(d));
        for ((a, b), v) in c[1].table().iter().map(|(a, b, v)| ((*a, *b), v)) {
            assert_eq!(v, &rational(1, 1), "({a},{b})");
        }
        assert_eq!(c[2].coeff(0, 0), &rational(1, 1));
    }

    #[test]
    fn second_coefficient_by_brute_force() {
        // q² picks an unordered pair (with repetition) of weights (i,j)
        let d = 3;
        let c = partition_function(2, d);
        let cells: Vec<(usize, usize)> = (0..=d).flat_map(|i| (0..=d).map(move |j| (i, j))).collect();
        let mut brute = BiSeries::zero(d);
        for (x, &(i1, j1)) in cells.iter().enumerate() {
            for &(i2, j2) in &cells[x..] {
                if i1 + i2 <= d && j1 + j2 <= d {
                    brute.add_at(i1 + i2, j1 + j2, &rational(1, 1));
                }
            }
        }
        assert_eq!(c[2], brute);
    }
}
