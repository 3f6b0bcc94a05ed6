//! Browser bindings. Every export returns a JSON string: either the result
//! or `{"error": {"code": …, "message": …}}`.

use hilbert_chi::euler::{cross_check, evaluate, EvalOptions, Method};
use hilbert_chi::hall_littlewood::{hl_p, k_exponent, verify_lemma};
use hilbert_chi::partition::partitions_up_to;
use hilbert_chi::{parse_fexpr, Basis, Error, Partition};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest window the page will request.
pub const MAX_DEG: usize = 8;

fn error_json(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

fn finish(r: Result<Value, Error>) -> String {
    r.unwrap_or_else(|e| error_json(&e)).to_string()
}

fn chi_value(f: &str, n: usize, max_deg: usize, method: &str) -> Result<Value, Error> {
    if max_deg > MAX_DEG {
        return Err(Error::InvalidArgument(format!("max_deg is limited to {MAX_DEG} here")));
    }
    let expr = parse_fexpr(f)?;
    let sym = expr.elaborate()?;
    let opts = EvalOptions::default();
    let (series, agreement) = if method == "all" {
        let methods: Vec<Method> = Method::ALL.into_iter().filter(|m| m.admits(n)).collect();
        let report = cross_check(&sym, n, max_deg, &methods, &opts)?;
        (report.results[0].series.clone(), Some(report.agreement()))
    } else {
        let m =
            Method::from_name(method).ok_or_else(|| Error::InvalidArgument(format!("unknown method '{method}'")))?;
        (evaluate(m, &sym, n, max_deg, &opts)?.series, None)
    };
    let grid: Vec<Vec<String>> =
        (0..=max_deg).map(|a| (0..=max_deg).map(|b| series.coeff(a, b).to_string()).collect()).collect();
    let mut out = json!({ "f": expr.render(), "n": n, "max_deg": max_deg, "method": method, "grid": grid });
    if let Some(a) = agreement {
        out["agreement"] = json!(a);
    }
    Ok(out)
}

/// Coefficient grid of `χ_n(f)`: `grid[a][b]` is the coefficient of `z₁ᵃz₂ᵇ`.
#[wasm_bindgen]
pub fn chi_table(f: &str, n: usize, max_deg: usize, method: &str) -> String {
    finish(chi_value(f, n, max_deg, method))
}

fn hl_value(lambda: &str, basis: &str) -> Result<Value, Error> {
    let parts = lambda
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| Error::InvalidPartition(format!("not a part: '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    let lambda = Partition::new(parts)?;
    let target = match basis {
        "m" => Basis::Monomial,
        "p" => Basis::Power,
        "s" => Basis::Schur,
        other => return Err(Error::InvalidArgument(format!("unknown basis '{other}'"))),
    };
    let text = hl_p(&lambda)?.convert(target)?.render("z");
    Ok(json!({ "lambda": lambda.to_string(), "basis": basis, "expansion": text }))
}

/// `P_λ` expanded in `m`, `p` or `s`; `lambda` is a comma-separated list.
#[wasm_bindgen]
pub fn hl_poly(lambda: &str, basis: &str) -> String {
    finish(hl_value(lambda, basis))
}

fn lemma_value(max_size: u32) -> Result<Value, Error> {
    if max_size > 4 {
        return Err(Error::InvalidArgument("max_size is limited to 4 here".into()));
    }
    let ps = partitions_up_to(max_size);
    let mut rows = Vec::new();
    for mu in &ps {
        let mut row = Vec::new();
        for nu in &ps {
            let c = verify_lemma(mu, nu)?;
            row.push(json!({ "k": k_exponent(mu, nu), "pass": c.pass }));
        }
        rows.push(row);
    }
    let labels: Vec<String> = ps.iter().map(Partition::to_string).collect();
    Ok(json!({ "partitions": labels, "cells": rows }))
}

/// The exponents `k_{μν}` for all `|μ|, |ν| ≤ max_size`, each with the result
/// of checking the quadratic ψ identity at that pair.
#[wasm_bindgen]
pub fn lemma_grid(max_size: u32) -> String {
    finish(lemma_value(max_size))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_grid_for_a_point() {
        let v: Value = serde_json::from_str(&chi_table("1", 1, 2, "theorem")).unwrap();
        assert_eq!(v["grid"][2][1], "1");
    }

    #[test]
    fn errors_are_reported_as_json() {
        let v: Value = serde_json::from_str(&chi_table("s[1,2]", 1, 2, "theorem")).unwrap();
        assert_eq!(v["error"]["code"], "parse");
        let v: Value = serde_json::from_str(&hl_poly("2", "q")).unwrap();
        assert_eq!(v["error"]["code"], "invalid-argument");
    }

    #[test]
    fn hl_and_lemma() {
        let v: Value = serde_json::from_str(&hl_poly("2", "m")).unwrap();
        assert_eq!(v["expansion"], "m[2] + (1-z)*m[1,1]");
        let v: Value = serde_json::from_str(&lemma_grid(2)).unwrap();
        assert_eq!(v["partitions"].as_array().unwrap().len(), 4);
        assert_eq!(v["cells"][1][1]["k"], -1);
    }
}
