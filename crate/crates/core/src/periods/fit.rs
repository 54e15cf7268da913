//! Fitting the Petersson norm and snapping floats to rationals.

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::series::Poly2;
use num_complex::Complex64;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct PeterssonFit {
    pub re: f64,
    pub im: f64,
    /// max |n/e - lambda| / |lambda| over the monomials with e != 0
    pub residual: f64,
    /// largest |n| / (|lambda| max|e|) where the exact side vanishes
    pub leakage: f64,
    pub monomials: usize,
}

impl PeterssonFit {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Least-squares lambda with `numeric ~ lambda * exact` monomial by monomial.
///
/// `numeric` is R assembled with unit norm, so lambda is <f, f>; it has to
/// come out real and positive, and every monomial has to agree within `tol`.
pub fn petersson_fit(exact: &Poly2<Cyclotomic>, numeric: &Poly2<Complex64>, tol: f64) -> Result<PeterssonFit> {
    let mut keys: Vec<(i32, i32)> = exact.terms().map(|(k, _)| *k).collect();
    keys.extend(numeric.terms().map(|(k, _)| *k));
    keys.sort_unstable();
    keys.dedup();
    let pairs: Vec<(Complex64, Complex64)> = keys
        .iter()
        .map(|&(a, b)| {
            let e = exact.get(a, b).map(|c| c.to_complex()).unwrap_or_default();
            let n = numeric.get(a, b).copied().unwrap_or_default();
            (e, n)
        })
        .collect();
    let den: f64 = pairs.iter().map(|(e, _)| e.norm_sqr()).sum();
    if den == 0.0 {
        return Err(Error::NonPositiveNorm("exact side is zero".into()));
    }
    let lambda: Complex64 = pairs.iter().map(|(e, n)| e.conj() * n).sum::<Complex64>() / den;
    let emax = pairs.iter().map(|(e, _)| e.norm()).fold(0.0, f64::max);
    let mut residual = 0.0f64;
    let mut leakage = 0.0f64;
    let mut monomials = 0;
    for (e, n) in &pairs {
        if e.norm() > 1e-300 {
            monomials += 1;
            residual = residual.max((n / e - lambda).norm() / lambda.norm());
        } else {
            leakage = leakage.max(n.norm() / (lambda.norm() * emax));
        }
    }
    let fit = PeterssonFit { re: lambda.re, im: lambda.im, residual, leakage, monomials };
    if residual.max(leakage) > tol || !residual.is_finite() {
        return Err(Error::FitResidual { residual: residual.max(leakage), tolerance: tol });
    }
    if lambda.re <= 0.0 || lambda.im.abs() > tol * lambda.norm() {
        return Err(Error::NonPositiveNorm(format!("{lambda}")));
    }
    Ok(fit)
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq)]
pub struct Snap {
    pub num: i64,
    pub den: i64,
    pub error: f64,
}

/// The continued-fraction convergent p/q of x with q <= max_den and
/// |x - p/q| <= tol that is most unlikely by chance, i.e. minimises
/// q^2 |x - p/q|. A genuine rational shows up as a convergent followed by
/// noise, far below the generic 1/q^2 spacing.
pub fn snap_rational(x: f64, max_den: u64, tol: f64) -> Result<Snap> {
    let fail = || Error::SnapFailed { value: x, max_den, tol };
    if !x.is_finite() {
        return Err(fail());
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    let mut best: Option<(f64, Snap)> = None;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e18 {
            break;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den as i128 {
            break;
        }
        let err = (x - p2 as f64 / q2 as f64).abs();
        if err <= tol {
            let score = err * (q2 * q2) as f64;
            if best.as_ref().map_or(true, |(s, _)| score < *s) {
                best = Some((score, Snap { num: p2 as i64, den: q2 as i64, error: err }));
            }
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a;
        if frac == 0.0 || err == 0.0 {
            break;
        }
        r = 1.0 / frac;
    }
    best.map(|(_, s)| s).ok_or_else(fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn snaps_simple_fractions() {
        assert_eq!(snap_rational(0.75, 10, 1e-12).unwrap().den, 4);
        assert_eq!(snap_rational(-691.0 / 2730.0, 10_000, 1e-12).unwrap().num, -691);
        assert!(snap_rational(std::f64::consts::PI, 100, 1e-9).is_err());
    }

    #[test]
    fn fit_recovers_scale() {
        let mut e = Poly2::new();
        let mut n = Poly2::new();
        for (i, v) in [(0, 3i64), (1, -5), (2, 7)] {
            e.add_term(i, 2 - i, Cyclotomic::from_int(v));
            n.add_term(i, 2 - i, Complex64::new(v as f64 * 0.25, 0.0));
        }
        let f = petersson_fit(&e, &n, 1e-12).unwrap();
        assert!((f.re - 0.25).abs() < 1e-15);
        let neg = n.map(|c| -c);
        assert!(petersson_fit(&e, &neg, 1e-12).is_err());
    }

    proptest! {
        #[test]
        fn snap_recovers_small_rationals(p in -5000i64..5000, q in 1i64..5000) {
            let s = snap_rational(p as f64 / q as f64, 10_000, 1e-12).unwrap();
            prop_assert_eq!(s.num * q, p * s.den);
        }
    }
}
