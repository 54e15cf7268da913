//! The Kronecker function F_tau(u, v) and its character sum, in floating
//! point, via the Jacobi theta product.

use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Distance from u to the period lattice 2 pi i (Z + tau Z).
pub fn lattice_distance(tau: Complex64, u: Complex64) -> f64 {
    let w = u / (2.0 * PI * I);
    let b = (w.im / tau.im).round();
    let w1 = w - b * tau;
    let w2 = w1 - w1.re.round();
    (w2 * 2.0 * PI).norm()
}

/// theta(u) / q^{1/8}: (xi^{1/2} - xi^{-1/2}) prod (1 - q^n)(1 - q^n xi)(1 - q^n / xi).
pub fn theta_reduced(tau: Complex64, u: Complex64) -> Complex64 {
    let q = (2.0 * PI * I * tau).exp();
    let xi = u.exp();
    let xinv = (-u).exp();
    let mut acc = (u / 2.0).exp() - (-u / 2.0).exp();
    let mut qn = q;
    let big = xi.norm().max(xinv.norm()).max(1.0);
    for _ in 0..100_000 {
        acc *= (1.0 - qn) * (1.0 - qn * xi) * (1.0 - qn * xinv);
        if qn.norm() * big < 1e-18 {
            break;
        }
        qn *= q;
    }
    acc
}

/// theta'(0) / q^{1/8} = prod (1 - q^n)^3.
pub fn theta_prime_reduced(tau: Complex64) -> Complex64 {
    let q = (2.0 * PI * I * tau).exp();
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qn = q;
    while qn.norm() > 1e-18 {
        let f = 1.0 - qn;
        acc *= f * f * f;
        qn *= q;
    }
    acc
}

/// F_tau(u, v) = theta'(0) theta(u + v) / (theta(u) theta(v)).
pub fn eval_f(tau: Complex64, u: Complex64, v: Complex64, pole_tol: f64) -> Result<Complex64> {
    for w in [u, v] {
        let d = lattice_distance(tau, w);
        if d < pole_tol {
            return Err(Error::PoleProximity { distance: d });
        }
    }
    Ok(theta_prime_reduced(tau) * theta_reduced(tau, u + v) / (theta_reduced(tau, u) * theta_reduced(tau, v)))
}

/// F^chi(u, v) = 1/(2 W(conj chi)) sum_h conj chi(h) (F(u + 2 pi i h/N, v) + F(u, v + 2 pi i h/N)).
pub fn eval_f_chi(chi: &DirichletCharacter, tau: Complex64, u: Complex64, v: Complex64, pole_tol: f64) -> Result<Complex64> {
    let n = chi.modulus() as i64;
    let cb = chi.conj();
    let w = cb.gauss_sum().to_complex();
    let mut acc = Complex64::new(0.0, 0.0);
    for h in 0..n {
        let c = cb.value_complex(h);
        if c.norm() == 0.0 {
            continue;
        }
        let shift = 2.0 * PI * I * h as f64 / n as f64;
        acc += c * (eval_f(tau, u + shift, v, pole_tol)? + eval_f(tau, u, v + shift, pole_tol)?);
    }
    Ok(acc / (2.0 * w))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sum_n eta^n / (q^n xi - 1), valid for |q| < |eta| < 1.
    fn double_sum(tau: Complex64, u: Complex64, v: Complex64) -> Complex64 {
        let q = (2.0 * PI * I * tau).exp();
        let (xi, eta) = (u.exp(), v.exp());
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 0..400 {
            acc += eta.powi(n) / (q.powi(n) * xi - 1.0);
        }
        for n in 1..400 {
            acc += (q / eta).powi(n) / (xi - q.powi(n));
        }
        acc
    }

    #[test]
    fn theta_quotient_matches_double_sum() {
        let tau = Complex64::new(0.1, 1.3);
        for (u, v) in [(Complex64::new(0.3, 0.2), Complex64::new(-0.4, 0.3)), (Complex64::new(-0.2, 1.0), Complex64::new(-1.1, -0.5))] {
            let a = eval_f(tau, u, v, 1e-9).unwrap();
            let b = double_sum(tau, u, v);
            assert!((a - b).norm() < 1e-11 * b.norm(), "{a} vs {b}");
        }
    }

    #[test]
    fn pole_guard() {
        let tau = Complex64::new(0.0, 1.0);
        let near = 2.0 * PI * I * tau + Complex64::new(1e-12, 0.0);
        assert!(matches!(eval_f(tau, near, Complex64::new(0.3, 0.1), 1e-9), Err(Error::PoleProximity { .. })));
    }
}
