//! Exact cross-checks of the series expansions: Laurent jet against Fourier
//! jet, product through brackets against product of raw jets, and special
//! values of Dirichlet L-functions.

use crate::dirichlet::DirichletCharacter;
use crate::error::Result;
use crate::kronecker::{kron_fourier, kron_laurent, product_b, product_b_from_jets};
use crate::numeric::special::{factorial_f64, hurwitz_zeta};
use crate::report::{CheckRecord, SuiteReport};
use num_complex::Complex64;
use serde_json::json;
use std::f64::consts::PI;

/// Laurent and Fourier jets entry by entry, and with `kmax` the two product
/// routes slice by slice.
pub fn expansions(chi: &DirichletCharacter, prec: usize, degree: usize, kmax: Option<u32>) -> Result<SuiteReport> {
    let n = chi.modulus();
    let lj = kron_laurent(chi, prec, degree);
    let fj = kron_fourier(chi, prec, degree);
    let mut checks = Vec::new();
    let mut mismatched = Vec::new();
    for t in 0..=degree {
        for s in 0..=t {
            if lj.entry(t - s, s) != fj.entry(t - s, s) {
                mismatched.push((t - s, s));
            }
        }
    }
    checks.push(CheckRecord::exact(
        "Laurent jet equals Fourier jet",
        format!("N={n} P={prec} D={degree}"),
        format!("{} entries", (degree + 1) * (degree + 2) / 2),
        format!("{} mismatched", mismatched.len()),
        mismatched.is_empty() && lj.polar() == fj.polar(),
    ));
    if let Some(kmax) = kmax {
        let a = product_b(chi, kmax, prec, true)?;
        let b = product_b_from_jets(chi, kmax, prec)?;
        checks.push(CheckRecord::exact(
            "bracket product equals jet product",
            format!("N={n} P={prec} kmax={kmax}"),
            "closed form".into(),
            "jet product".into(),
            a.agrees_with(&b, kmax as i32),
        ));
    }
    let details = json!({ "level": n, "prec": prec, "degree": degree, "mismatched": mismatched });
    Ok(SuiteReport::new("expansions", checks, details))
}

/// L(chi, 1-k) from Hurwitz zeta values against -B_{k,chi}/k, and
/// L(conj chi, k) against (-1)^{1+k/2} (W(conj chi)/2) (2 pi/N)^k B_{k,chi}/k!.
pub fn l_values(chi: &DirichletCharacter, weights: &[u32], tol: f64) -> Result<SuiteReport> {
    let n = chi.modulus() as f64;
    let cb = chi.conj();
    let mut checks = Vec::new();
    for &k in weights {
        let s = Complex64::new(1.0 - k as f64, 0.0);
        let mut num = Complex64::new(0.0, 0.0);
        for a in 1..=chi.modulus() as i64 {
            num += chi.value_complex(a) * hurwitz_zeta(s, a as f64 / n);
        }
        num *= (-s * n.ln()).exp();
        let exact = chi.l_value_negative(k as usize)?.to_complex();
        checks.push(CheckRecord::numeric("L at a negative integer", format!("N={} k={k}", chi.modulus()), num, exact, tol));
        let lhs = cb.l_value_numeric(Complex64::new(k as f64, 0.0))?;
        let sign = if (1 + k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = cb.gauss_sum().to_complex() / 2.0
            * sign
            * (2.0 * PI / n).powi(k as i32)
            * chi.twisted_bernoulli(k as usize).to_complex()
            / factorial_f64(k as u64);
        checks.push(CheckRecord::numeric("Gauss sum relation", format!("N={} k={k}", chi.modulus()), lhs, rhs, tol));
    }
    Ok(SuiteReport::new("l-values", checks, json!({ "level": chi.modulus(), "weights": weights })))
}
