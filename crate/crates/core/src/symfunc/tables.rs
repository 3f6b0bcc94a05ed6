//! Rational transition matrices between the classical bases and power sums,
//! one per (basis, degree), built on first use and shared afterwards.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};

use super::Basis;

/// Sparse p-expansion with rational coefficients.
pub(crate) type PExpansion = BTreeMap<Partition, BigRational>;

pub(crate) struct Transition {
    /// Basis element λ → its p-expansion.
    pub to_p: BTreeMap<Partition, PExpansion>,
    /// p_ρ → its expansion in the target basis.
    pub from_p: BTreeMap<Partition, PExpansion>,
}

type Cache = Mutex<HashMap<(Basis, u32), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Transition data for one of `m, h, e, s` in degree `d`.
pub(crate) fn transition(basis: Basis, d: u32) -> Arc<Transition> {
    if let Some(t) = cache().lock().expect("table lock").get(&(basis, d)) {
        return t.clone();
    }
    let built = Arc::new(build(basis, d));
    cache().lock().expect("table lock").entry((basis, d)).or_insert(built).clone()
}

fn build(basis: Basis, d: u32) -> Transition {
    let parts = partitions_of(d, d as usize);
    match basis {
        Basis::Monomial => {
            // p_ρ in m is integral and combinatorial; m in p is its inverse.
            let from_p: BTreeMap<Partition, PExpansion> = parts
                .iter()
                .map(|rho| {
                    let row =
                        power_in_monomial(rho).into_iter().map(|(k, v)| (k, BigRational::from_integer(v))).collect();
                    (rho.clone(), row)
                })
                .collect();
            let to_p = invert(&parts, &from_p);
            Transition { to_p, from_p }
        }
        Basis::Complete | Basis::Elementary | Basis::Schur => {
            let to_p: BTreeMap<Partition, PExpansion> =
                parts.iter().map(|l| (l.clone(), classical_in_p(basis, l))).collect();
            let from_p = invert(&parts, &to_p);
            Transition { to_p, from_p }
        }
        _ => unreachable!("no rational transition table for {basis:?}"),
    }
}

fn classical_in_p(basis: Basis, lambda: &Partition) -> PExpansion {
    match basis {
        Basis::Complete => product_of_rows(lambda, |k| one_row(k, false)),
        Basis::Elementary => product_of_rows(lambda, |k| one_row(k, true)),
        Basis::Schur => {
            let mut out = PExpansion::new();
            for (mu, c) in jacobi_trudi(lambda) {
                for (rho, v) in product_of_rows(&mu, |k| one_row(k, false)) {
                    let e = out.entry(rho).or_insert_with(BigRational::zero);
                    *e += v * BigRational::from_integer(c.clone());
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        }
        _ => unreachable!(),
    }
}

/// `h_k = Σ_{ρ⊢k} p_ρ / z_ρ`, and `e_k` with the sign `(-1)^{k-ℓ(ρ)}`.
fn one_row(k: u32, signed: bool) -> PExpansion {
    partitions_of(k, k as usize)
        .into_iter()
        .map(|rho| {
            let mut c = BigRational::new(BigInt::one(), rho.zee());
            if signed && (k as usize - rho.len()) % 2 == 1 {
                c = -c;
            }
            (rho, c)
        })
        .collect()
}

fn product_of_rows(lambda: &Partition, row: impl Fn(u32) -> PExpansion) -> PExpansion {
    let mut acc: PExpansion = [(Partition::empty(), BigRational::one())].into_iter().collect();
    for &k in lambda.parts() {
        let r = row(k);
        let mut next = PExpansion::new();
        for (a, ca) in &acc {
            for (b, cb) in &r {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                let e = next.entry(Partition::from_unsorted(parts)).or_insert_with(BigRational::zero);
                *e += ca * cb;
            }
        }
        acc = next;
    }
    acc
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`, as an integer combination of
/// `h_μ` (μ the multiset of row indices).
pub(crate) fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let l = lambda.len();
    // state: columns used so far (bitmask) → h-monomial → signed count
    let mut states: BTreeMap<u32, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
    states.insert(0, [(Vec::new(), BigInt::one())].into_iter().collect());
    for i in 0..l {
        let mut next: BTreeMap<u32, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
        for (mask, polys) in &states {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let k = lambda.part(i) as i64 - i as i64 + j as i64;
                if k < 0 {
                    continue;
                }
                // sign of inserting column j after the already-used columns
                let larger_used = (j + 1..l).filter(|&c| mask & (1 << c) != 0).count();
                let sign = if larger_used % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let target = next.entry(mask | (1 << j)).or_default();
                for (mono, c) in polys {
                    let mut m = mono.clone();
                    if k > 0 {
                        m.push(k as u32);
                    }
                    m.sort_unstable_by(|a, b| b.cmp(a));
                    *target.entry(m).or_insert_with(BigInt::zero) += c * &sign;
                }
            }
        }
        states = next;
    }
    let full = if l == 0 { 0 } else { (1u32 << l) - 1 };
    states
        .remove(&full)
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (Partition::from_unsorted(m), c))
        .collect()
}

/// Coefficient of `m_λ` in `p_ρ`: the number of ways to distribute the parts
/// of ρ into rows whose sums are `λ₁, λ₂, …`.
pub(crate) fn power_in_monomial(rho: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(rho.size(), rho.len()) {
        let mut memo = HashMap::new();
        let c = distribute(rho.parts(), 0, &mut lambda.parts().to_vec(), &mut memo);
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    out
}

fn distribute(
    parts: &[u32],
    i: usize,
    remaining: &mut Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
) -> BigInt {
    if i == parts.len() {
        return if remaining.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
    }
    let key = (i, remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for row in 0..remaining.len() {
        if remaining[row] >= parts[i] {
            remaining[row] -= parts[i];
            total += distribute(parts, i + 1, remaining, memo);
            remaining[row] += parts[i];
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Inverts a square transition given as rows `basis element → p-expansion`
/// over the same index set of partitions.
fn invert(parts: &[Partition], rows: &BTreeMap<Partition, PExpansion>) -> BTreeMap<Partition, PExpansion> {
    let n = parts.len();
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // augmented [A | I]
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 2 * n]; n];
    for (i, lam) in parts.iter().enumerate() {
        for (rho, c) in &rows[lam] {
            a[i][index[rho]] = c.clone();
        }
        a[i][n + i] = BigRational::one();
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
    }
    // A^{-1}: row ρ (p-index) gives p_ρ in the basis
    let mut out = BTreeMap::new();
    for (i, rho) in parts.iter().enumerate() {
        let mut row = PExpansion::new();
        for (j, lam) in parts.iter().enumerate() {
            let v = &a[i][n + j];
            if !v.is_zero() {
                row.insert(lam.clone(), v.clone());
            }
        }
        out.insert(rho.clone(), row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn power_sums_in_monomials() {
        let p11 = power_in_monomial(&part![1, 1]);
        assert_eq!(p11[&part![2]], 1.into());
        assert_eq!(p11[&part![1, 1]], 2.into());
        let p21 = power_in_monomial(&part![2, 1]);
        assert_eq!(p21[&part![3]], 1.into());
        assert_eq!(p21[&part![2, 1]], 1.into());
        assert!(!p21.contains_key(&part![1, 1, 1]));
    }

    #[test]
    fn jacobi_trudi_small() {
        // s_{1,1} = h_1^2 - h_2
        let s11 = jacobi_trudi(&part![1, 1]);
        assert_eq!(s11[&part![1, 1]], 1.into());
        assert_eq!(s11[&part![2]], (-1).into());
        // s_{2,1} = h_2 h_1 - h_3
        let s21 = jacobi_trudi(&part![2, 1]);
        assert_eq!(s21.len(), 2);
        assert_eq!(s21[&part![2, 1]], 1.into());
        assert_eq!(s21[&part![3]], (-1).into());
    }
}
