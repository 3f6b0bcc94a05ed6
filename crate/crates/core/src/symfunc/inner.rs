use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::partition::Partition;
use crate::ratfunc::RatFunc;

use super::SymFunc;

/// `(p_ρ, p_ρ)_z = z_ρ Π_i (1 - z^{ρ_i})⁻¹`.
pub fn hl_inner_weight(rho: &Partition) -> RatFunc {
    static CACHE: OnceLock<Mutex<HashMap<Partition, RatFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(w) = cache.lock().expect("weight cache").get(rho) {
        return w.clone();
    }
    let mut den = RatFunc::one();
    for &k in rho.parts() {
        den = &den * &RatFunc::one_minus_z_pow(k);
    }
    let w = &RatFunc::from_int(rho.zee()) / &den;
    cache.lock().expect("weight cache").insert(rho.clone(), w.clone());
    w
}

/// The Hall–Littlewood inner product in infinitely many variables, extended
/// bilinearly from the power sums. At `z = 0` this is the Hall inner product.
pub fn hl_inner(f: &SymFunc, g: &SymFunc) -> Result<RatFunc, Error> {
    let f = f.to_power()?;
    let g = g.to_power()?;
    let mut acc = RatFunc::zero();
    for (rho, a) in f.terms() {
        let b = g.coeff(rho);
        if b.is_zero() {
            continue;
        }
        acc = &acc + &(&(a * &b) * &hl_inner_weight(rho));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::poly::Poly;
    use crate::symfunc::Basis;

    fn p(l: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Power, l)
    }

    #[test]
    fn power_sum_pairings() {
        let one_minus_z = RatFunc::from_poly(Poly::from_i64(&[1, -1]));
        assert_eq!(hl_inner(&p(part![1]), &p(part![1])).unwrap(), one_minus_z.recip().unwrap());
        assert!(hl_inner(&p(part![2]), &p(part![1, 1])).unwrap().is_zero());
        let two_over = RatFunc::new(Poly::from_i64(&[2]), Poly::from_i64(&[1, 0, -1])).unwrap();
        assert_eq!(hl_inner(&p(part![2]), &p(part![2])).unwrap(), two_over);
    }
}
