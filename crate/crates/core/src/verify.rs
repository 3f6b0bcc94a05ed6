//! Identity checks that can be run on demand; each returns one case per
//! instance checked.

use crate::error::Error;
use crate::euler::{evaluate, partition_function, EvalOptions, Method};
use crate::hall_littlewood::{b_norm, b_norm_finite, hl_p, k_exponent, k_exponent_recursive, verify_lemma};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::ratfunc::RatFunc;
use crate::symfunc::{hl_inner, hl_inner_finite, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Case {
    fn new(name: String, pass: bool, detail: String) -> Case {
        Case { name, pass, detail }
    }
}

pub fn all_pass(cases: &[Case]) -> bool {
    cases.iter().all(|c| c.pass)
}

/// `Σ_λ z^{-|λ|} b_λ ψ_{μλ} ψ_{νλ} = z^{k_{μν}}` for `|μ|, |ν| ≤ max_size`.
pub fn lemma_cases(max_size: u32) -> Result<Vec<Case>, Error> {
    let ps = partitions_up_to(max_size);
    let mut out = Vec::new();
    for mu in &ps {
        for nu in &ps {
            let c = verify_lemma(mu, nu)?;
            out.push(Case::new(
                format!("lemma {mu} {nu}"),
                c.pass,
                format!("lhs = {}, z^k = {}", c.lhs.render("z"), c.rhs.render("z")),
            ));
        }
    }
    Ok(out)
}

/// The closed form of `k_{μν}` against its recursion, and `k_{μμ} = -|μ|`.
pub fn kprop_cases(max_size: u32) -> Vec<Case> {
    let ps = partitions_up_to(max_size);
    let mut out = Vec::new();
    for mu in &ps {
        for nu in &ps {
            let (k, r) = (k_exponent(mu, nu), k_exponent_recursive(mu, nu));
            out.push(Case::new(format!("kprop {mu} {nu}"), k == r, format!("formula {k}, recursion {r}")));
        }
        let k = k_exponent(mu, mu);
        out.push(Case::new(format!("kdiag {mu}"), k == -(mu.size() as i64), format!("k = {k}")));
    }
    out
}

/// `(P_μ, P_ν)_{z,n} = δ_{μν} (1-z)ⁿ / b_{μ,n}` over `ℓ ≤ n`, `|μ|, |ν| ≤ max_size`.
pub fn orthogonality_finite_cases(n: usize, max_size: u32) -> Result<Vec<Case>, Error> {
    let ps: Vec<Partition> = partitions_up_to(max_size).into_iter().filter(|p| p.len() <= n).collect();
    let mut out = Vec::new();
    for mu in &ps {
        for nu in &ps {
            let got = hl_inner_finite(&*hl_p(mu)?, &*hl_p(nu)?, n)?;
            let expect = if mu == nu {
                &RatFunc::one_minus_z_pow(1).pow(n as i32)? / &b_norm_finite(mu, n)?
            } else {
                RatFunc::zero()
            };
            out.push(Case::new(format!("orthogonality n={n} {mu} {nu}"), got == expect, got.render("z")));
        }
    }
    Ok(out)
}

/// `(P_μ, P_ν)_z = δ_{μν} / b_μ` for `|μ|, |ν| ≤ max_size`.
pub fn orthogonality_cases(max_size: u32) -> Result<Vec<Case>, Error> {
    let mut out = Vec::new();
    for d in 0..=max_size {
        let ps = partitions_of(d, d as usize);
        for mu in &ps {
            for nu in &ps {
                let got = hl_inner(&*hl_p(mu)?, &*hl_p(nu)?)?;
                let expect = if mu == nu { b_norm(mu).recip()? } else { RatFunc::zero() };
                out.push(Case::new(format!("orthogonality {mu} {nu}"), got == expect, got.render("z")));
            }
        }
    }
    Ok(out)
}

/// Degree `d` part of `Σ_λ b_λ P_λ(X) P_λ(Y) = Π (1 - z x_i y_j)/(1 - x_i y_j)`,
/// compared in `p_ρ(X) p_σ(Y)` coordinates: the right side is diagonal with
/// entries `Π (1 - z^{ρ_i}) / z_ρ`.
pub fn cauchy_cases(max_size: u32) -> Result<Vec<Case>, Error> {
    let mut out = Vec::new();
    for d in 0..=max_size {
        let ps = partitions_of(d, d as usize);
        let expansions: Vec<(RatFunc, SymFunc)> =
            ps.iter().map(|l| Ok((b_norm(l), hl_p(l)?.to_power()?))).collect::<Result<_, Error>>()?;
        let mut ok = true;
        let mut bad = Vec::new();
        for rho in &ps {
            for sigma in &ps {
                let mut lhs = RatFunc::zero();
                for (b, p) in &expansions {
                    let c = &p.coeff(rho) * &p.coeff(sigma);
                    if !c.is_zero() {
                        lhs = &lhs + &(b * &c);
                    }
                }
                let rhs = if rho == sigma {
                    let z = RatFunc::from_rational(&num_rational::BigRational::new(1.into(), rho.zee()));
                    rho.parts().iter().fold(z, |acc, &k| &acc * &RatFunc::one_minus_z_pow(k))
                } else {
                    RatFunc::zero()
                };
                if lhs != rhs {
                    ok = false;
                    bad.push(format!("{rho}x{sigma}"));
                }
            }
        }
        let detail = if ok { format!("{} coordinates", ps.len() * ps.len()) } else { bad.join(" ") };
        out.push(Case::new(format!("cauchy degree {d}"), ok, detail));
    }
    Ok(out)
}

/// `χ_k(𝒪)` against the `q^k` coefficient of `Π (1 - z₁ⁱz₂ʲq)⁻¹`, for
/// `k = 1..=n` and every evaluator whose guard admits `k`.
pub fn corollary_cases(n: usize, max_deg: usize, opts: &EvalOptions) -> Result<Vec<Case>, Error> {
    let pf = partition_function(n, max_deg);
    let mut out = Vec::new();
    for (k, expect) in pf.iter().enumerate().skip(1) {
        for m in Method::ALL {
            if !opts.override_guard && !m.admits(k) {
                continue;
            }
            let r = evaluate(m, &SymFunc::one(), k, max_deg, opts)?;
            let diff = r.series.sub(expect);
            let detail = match diff.iter().next() {
                None => "equal".to_string(),
                Some(((a, b), _)) => format!("first difference at z1^{a} z2^{b}"),
            };
            out.push(Case::new(format!("corollary n={k} {}", m.name()), diff.is_zero(), detail));
        }
    }
    Ok(out)
}
