//! Hall–Littlewood structure: Jing's vertex operator, the `P`/`Q` bases,
//! norms, matrix elements of multiplication operators, the `h`-Pieri
//! coefficients `ψ`, and the exponent `k_{μν}`.

mod lemma;
pub mod plethystic;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::RatFunc;
use crate::symfunc::{check_degree, hl_inner, Basis, SymFunc};

pub use lemma::{k_exponent, k_exponent_recursive, verify_lemma, LemmaCheck};
pub use plethystic::{gamma_minus, gamma_plus, PlethysticArg, XGraded};

/// `q_m = [x^m] Γ₋(x(1-z))·1 = Σ_{ρ⊢m} Π_i (1 - z^{ρ_i}) p_ρ / z_ρ`.
pub fn q_generator(m: i64) -> SymFunc {
    if m < 0 {
        return SymFunc::zero(Basis::Power);
    }
    let m = m as u32;
    SymFunc::from_terms(
        Basis::Power,
        partitions_of(m, m as usize).into_iter().map(|rho| {
            let mut c = RatFunc::from_rational(&BigRational::new(BigInt::one(), rho.zee()));
            for &k in rho.parts() {
                c = &c * &RatFunc::one_minus_z_pow(k);
            }
            (rho, c)
        }),
    )
}

/// Jing's operator `J_k = [x^k] Γ₋(x(1-z)) Γ₊⁻¹(x⁻¹)` applied to `f`.
pub fn jing(k: i64, f: &SymFunc) -> Result<SymFunc, Error> {
    // Γ₊(-x⁻¹) f = Σ_i x^{-i} g_i
    let lowered = gamma_plus(&PlethysticArg::x_inv().neg(), f)?;
    let mut out = SymFunc::zero(Basis::Power);
    for (e, g) in &lowered {
        let q = q_generator(k - *e as i64);
        if q.is_zero() {
            continue;
        }
        out = out.add(&q.multiply(g)?)?;
    }
    Ok(out)
}

/// Shared cache of Hall–Littlewood expansions in the power-sum basis.
pub struct HlTable {
    q: Mutex<HashMap<Partition, Arc<SymFunc>>>,
    p: Mutex<HashMap<Partition, Arc<SymFunc>>>,
    psi: Mutex<HashMap<(Partition, Partition), RatFunc>>,
}

impl HlTable {
    pub fn global() -> &'static HlTable {
        static TABLE: OnceLock<HlTable> = OnceLock::new();
        TABLE.get_or_init(|| HlTable {
            q: Mutex::new(HashMap::new()),
            p: Mutex::new(HashMap::new()),
            psi: Mutex::new(HashMap::new()),
        })
    }

    /// `Q_λ = J_{λ₁} ⋯ J_{λ_ℓ} · 1`.
    pub fn q(&self, lambda: &Partition) -> Result<Arc<SymFunc>, Error> {
        check_degree(lambda)?;
        if let Some(v) = self.q.lock().expect("hl cache").get(lambda) {
            return Ok(v.clone());
        }
        let value = if lambda.is_empty() {
            SymFunc::one()
        } else {
            // J_{λ₁} applied to Q of the remaining parts
            let inner = self.q(&lambda.tail())?;
            jing(lambda.first() as i64, &inner)?
        };
        let value = Arc::new(value);
        Ok(self.q.lock().expect("hl cache").entry(lambda.clone()).or_insert(value).clone())
    }

    /// `P_λ = Q_λ / b_λ(z)`.
    pub fn p(&self, lambda: &Partition) -> Result<Arc<SymFunc>, Error> {
        if let Some(v) = self.p.lock().expect("hl cache").get(lambda) {
            return Ok(v.clone());
        }
        let q = self.q(lambda)?;
        let inv = b_norm(lambda).recip()?;
        let value = Arc::new(q.scale(&inv));
        Ok(self.p.lock().expect("hl cache").entry(lambda.clone()).or_insert(value).clone())
    }
}

pub fn hl_q(lambda: &Partition) -> Result<Arc<SymFunc>, Error> {
    HlTable::global().q(lambda)
}

pub fn hl_p(lambda: &Partition) -> Result<Arc<SymFunc>, Error> {
    HlTable::global().p(lambda)
}

/// `b_λ(z) = Π_{i≥1} [m_i(λ)]_z`.
pub fn b_norm(lambda: &Partition) -> RatFunc {
    lambda.positive_multiplicities().into_iter().fold(RatFunc::one(), |acc, (_, m)| &acc * &RatFunc::z_factorial(m))
}

/// `b_{λ,n}(z) = Π_{i≥0} [m_i(λ)]_z` with `m_0 = n - ℓ(λ)`.
pub fn b_norm_finite(lambda: &Partition, n: usize) -> Result<RatFunc, Error> {
    let ms = lambda.multiplicities(n)?;
    Ok(ms.into_iter().fold(RatFunc::one(), |acc, (_, m)| &acc * &RatFunc::z_factorial(m)))
}

/// Expansion of a homogeneous `f` in the `P` (or `Q`) basis, using the
/// duality `⟨P_λ, Q_μ⟩_z = δ_{λμ}`.
pub(crate) fn expand_in_hl(f: &SymFunc, target: Basis) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    let mut out = BTreeMap::new();
    for d in f.degrees() {
        let comp = f.homogeneous(d);
        for lambda in partitions_of(d, d as usize) {
            let dual = match target {
                Basis::HallLittlewoodP => hl_q(&lambda)?,
                Basis::HallLittlewoodQ => hl_p(&lambda)?,
                _ => unreachable!("expand_in_hl target"),
            };
            let c = hl_inner(&comp, &dual)?;
            if !c.is_zero() {
                out.insert(lambda, c);
            }
        }
    }
    Ok(out)
}

/// Coefficients `c_λ` with `f = Σ c_λ P_λ`.
pub fn expand_in_p(f: &SymFunc) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    expand_in_hl(&f.to_power()?, Basis::HallLittlewoodP)
}

/// All matrix elements `f_{νμ}` for fixed `μ`: the `P`-expansion of `f·P_μ`.
pub fn multiplication_column(f: &SymFunc, mu: &Partition) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    let prod = f.multiply(&*hl_p(mu)?)?;
    expand_in_p(&prod)
}

/// `f_{νμ}(z)`: the coefficient of `P_ν` in `f · P_μ`.
pub fn matrix_element(f: &SymFunc, nu: &Partition, mu: &Partition) -> Result<RatFunc, Error> {
    let prod = f.multiply(&*hl_p(mu)?)?.homogeneous(nu.size());
    hl_inner(&prod, &*hl_q(nu)?)
}

/// `ψ_{μλ}(z)`: the coefficient of `P_μ` in `h_{|μ|-|λ|} · P_λ`; zero when
/// `|μ| < |λ|`. Panics if a nonzero value appears for `λ ⊄ μ`.
pub fn psi(mu: &Partition, lambda: &Partition) -> Result<RatFunc, Error> {
    if mu.size() < lambda.size() {
        return Ok(RatFunc::zero());
    }
    let key = (mu.clone(), lambda.clone());
    let table = HlTable::global();
    if let Some(v) = table.psi.lock().expect("psi cache").get(&key) {
        return Ok(v.clone());
    }
    let k = mu.size() - lambda.size();
    let hk = if k == 0 {
        SymFunc::one()
    } else {
        SymFunc::basis_element(Basis::Complete, Partition::from_unsorted(vec![k]))
    };
    let v = matrix_element(&hk, mu, lambda)?;
    assert!(
        v.is_zero() || mu.contains(lambda),
        "psi({mu},{lambda}) = {v} but the diagram of {lambda} is not inside {mu}"
    );
    table.psi.lock().expect("psi cache").insert(key, v.clone());
    Ok(v)
}
