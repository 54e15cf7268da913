//! Period integrals of cusp forms and of their twists.
//!
//! I_n(f) = int_0^inf f(it) t^n dt is split at t1 and the lower piece is
//! folded back with the Atkin-Lehner relation, giving two rapidly converging
//! sums of incomplete gamma functions. r_n = i^{n+1} I_n.

use super::real::Real;
use crate::arith::Cyclotomic;
use crate::dirichlet::DirichletCharacter;
use crate::exec;
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct PeriodOptions {
    /// Split point as a multiple of the symmetric one, 1/sqrt(M).
    pub split: f64,
    /// Relative tolerance for the eigen-relation and the truncation tail.
    pub tol: f64,
    /// Evaluate the kernels in double-double arithmetic.
    pub bigfloat: bool,
}

impl Default for PeriodOptions {
    fn default() -> Self {
        PeriodOptions { split: 1.0, tol: 1e-10, bigfloat: false }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PeriodValue {
    pub n: u32,
    pub re: f64,
    pub im: f64,
    /// Estimated truncation error of the q-series sums.
    pub tail: f64,
    /// |I_n(t1) - I_n(t1')| for two split points.
    pub eigen_residual: f64,
}

impl PeriodValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// U_j(a; t) = sum_m a_m Gamma(j+1, 2 pi m t) / (2 pi m)^{j+1}, returned as
/// (real, imaginary) parts plus a tail estimate.
fn upper_sum<T: Real>(coeffs: &[(T, T)], j: u32, t: T) -> (T, T, f64) {
    let two_pi = T::pi() + T::pi();
    let mut re = T::zero();
    let mut im = T::zero();
    let mut last = 0.0f64;
    let mut amax = 0.0f64;
    for (m, &(ar, ai)) in coeffs.iter().enumerate().skip(1) {
        let w = two_pi * T::from_f64(m as f64);
        let x = w * t;
        // Gamma(j+1, x) / w^{j+1} = j! e^{-x} sum_{i<=j} x^i / i! / w^{j+1}
        let mut term = T::one();
        let mut s = T::one();
        for i in 1..=j {
            term = (term * x).div_acc(T::from_f64(i as f64));
            s = s + term;
        }
        let mut fact = T::one();
        for i in 2..=j {
            fact = fact * T::from_f64(i as f64);
        }
        let kern = (fact * (-x).exp() * s).div_acc(w.powi(j as i32 + 1));
        re = re + ar * kern;
        im = im + ai * kern;
        let mag = (ar.to_f64().hypot(ai.to_f64())) * kern.to_f64();
        amax = amax.max(ar.to_f64().hypot(ai.to_f64()) / (m as f64).powi(7));
        last = mag;
    }
    // tail: assume |a_m| <= amax m^7 (ample for the weights used) and
    // geometric decay e^{-2 pi t} of the kernel
    let p = coeffs.len() as f64;
    let tf = t.to_f64();
    let ratio = (-2.0 * std::f64::consts::PI * tf).exp() * ((p + 1.0) / p).powi(7 + j as i32);
    let tail_kernel = last.max(amax * p.powi(7) * (-2.0 * std::f64::consts::PI * p * tf).exp() * p.powi(j as i32)
        / (2.0 * std::f64::consts::PI * p).powi(j as i32 + 1));
    let tail = if ratio < 1.0 { tail_kernel * ratio / (1.0 - ratio) } else { f64::INFINITY };
    (re, im, tail)
}

struct SplitInput<'a, T> {
    upper: &'a [(T, T)],
    lower: &'a [(T, T)],
    /// f |_k W_M = lambda f_lower
    lambda: (T, T),
    m: u64,
    k: u32,
}

/// I_n = U_n(upper; t1) + lambda i^k M^{k/2-n-1} U_{k-2-n}(lower; 1/(M t1)).
fn split_integral<T: Real>(inp: &SplitInput<T>, n: u32, t1: f64) -> (Complex64, f64) {
    let t = T::from_f64(t1);
    let (ur, ui, tail1) = upper_sum(inp.upper, n, t);
    let s = T::one().div_acc(T::from_f64(inp.m as f64) * t);
    let (lr, li, tail2) = upper_sum(inp.lower, inp.k - 2 - n, s);
    let ik = if inp.k % 4 == 0 { T::one() } else { -T::one() };
    let e = inp.k as i32 / 2 - n as i32 - 1;
    let mp = if e >= 0 {
        T::from_f64(inp.m as f64).powi(e)
    } else {
        T::one().div_acc(T::from_f64(inp.m as f64).powi(-e))
    };
    let (lar, lai) = inp.lambda;
    let cr = ik * mp * (lar * lr - lai * li);
    let ci = ik * mp * (lar * li + lai * lr);
    let v = Complex64::new((ur + cr).to_f64(), (ui + ci).to_f64());
    let lam = lar.to_f64().hypot(lai.to_f64());
    (v, tail1 + lam * mp.to_f64() * tail2)
}

fn periods_generic<T: Real + Send + Sync>(
    upper: &[Cyclotomic],
    lower: &[Cyclotomic],
    lambda: &Cyclotomic,
    m: u64,
    k: u32,
    ns: &[u32],
    opts: &PeriodOptions,
) -> Result<Vec<PeriodValue>> {
    let up: Vec<(T, T)> = upper.iter().map(T::from_cyclotomic).collect();
    let lo: Vec<(T, T)> = lower.iter().map(T::from_cyclotomic).collect();
    let inp = SplitInput { upper: &up, lower: &lo, lambda: T::from_cyclotomic(lambda), m, k };
    let t0 = opts.split / (m as f64).sqrt();
    if let Some(&n) = ns.iter().find(|&&n| n > k - 2) {
        return Err(Error::Config(format!("period index {n} outside 0..={}", k - 2)));
    }
    // each index is an independent pair of integrals
    exec::map(ns, |&n| {
        let (v, tail) = split_integral(&inp, n, t0);
        let (v2, _) = split_integral(&inp, n, t0 * 1.17);
        let resid = (v - v2).norm();
        let scale = v.norm().max(1e-300);
        if tail > opts.tol * scale {
            return Err(Error::InsufficientPrecision { needed: upper.len() * 2, have: upper.len() });
        }
        if resid > (opts.tol * scale).max(10.0 * tail) {
            return Err(Error::NotEigenform(resid / scale));
        }
        let r = Complex64::new(0.0, 1.0).powi(n as i32 + 1) * v;
        Ok(PeriodValue { n, re: r.re, im: r.im, tail, eigen_residual: resid })
    })
    .into_iter()
    .collect()
}

fn run(
    upper: &[Cyclotomic],
    lower: &[Cyclotomic],
    lambda: &Cyclotomic,
    m: u64,
    k: u32,
    ns: &[u32],
    opts: &PeriodOptions,
) -> Result<Vec<PeriodValue>> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::BadWeight(k as i64));
    }
    if opts.bigfloat {
        periods_generic::<twofloat::TwoFloat>(upper, lower, lambda, m, k, ns, opts)
    } else {
        periods_generic::<f64>(upper, lower, lambda, m, k, ns, opts)
    }
}

/// r_n(f) for a cusp form f of level N with f |_k W_N = eps f.
pub fn cusp_period(f: &[Cyclotomic], k: u32, level: u64, eps: i64, n: u32, opts: &PeriodOptions) -> Result<PeriodValue> {
    Ok(cusp_periods(f, k, level, eps, &[n], opts)?[0])
}

pub fn cusp_periods(f: &[Cyclotomic], k: u32, level: u64, eps: i64, ns: &[u32], opts: &PeriodOptions) -> Result<Vec<PeriodValue>> {
    run(f, f, &Cyclotomic::from_int(eps), level, k, ns, opts)
}

/// Coefficients of the twist f_chi = sum chi(m) a_m q^m.
pub fn twist(f: &[Cyclotomic], chi: &DirichletCharacter) -> Vec<Cyclotomic> {
    f.iter().enumerate().map(|(m, a)| if m == 0 { Cyclotomic::zero() } else { a * &chi.value(m as i64) }).collect()
}

/// The pseudo-eigenvalue chi(-1) W(chi) / W(conj chi) of f_chi under W_{N^2}.
pub fn twist_sign(chi: &DirichletCharacter) -> Cyclotomic {
    let s = chi.value(-1);
    &(&s * &chi.gauss_sum()) / &chi.conj().gauss_sum()
}

/// r_n(f_chi), using f_chi |_k W_{N^2} = chi(-1) W(chi)/W(conj chi) f_{conj chi}.
pub fn twisted_cusp_period(f: &[Cyclotomic], k: u32, chi: &DirichletCharacter, n: u32, opts: &PeriodOptions) -> Result<PeriodValue> {
    Ok(twisted_cusp_periods(f, k, chi, &[n], opts)?[0])
}

pub fn twisted_cusp_periods(f: &[Cyclotomic], k: u32, chi: &DirichletCharacter, ns: &[u32], opts: &PeriodOptions) -> Result<Vec<PeriodValue>> {
    let n = chi.modulus();
    let up = twist(f, chi);
    let lo = twist(f, &chi.conj());
    run(&up, &lo, &twist_sign(chi), n * n, k, ns, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Delta from the product formula, as exact integers.
    pub(crate) fn delta(n: usize) -> Vec<Cyclotomic> {
        let mut c = vec![0i128; n];
        c[1] = 1;
        for m in 1..n {
            for _ in 0..24 {
                for j in (m..n).rev() {
                    c[j] -= c[j - m];
                }
            }
        }
        c.into_iter().map(|x| Cyclotomic::from_rational(crate::arith::Rational::from_integer(x.into()))).collect()
    }

    #[test]
    fn delta_functional_equation() {
        let f = delta(60);
        let opts = PeriodOptions::default();
        let ps = cusp_periods(&f, 12, 1, 1, &(0..=10).collect::<Vec<_>>(), &opts).unwrap();
        for n in 0..=10usize {
            let a = ps[n].value();
            let b = ps[10 - n].value();
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            assert!((b - a * sign).norm() < 1e-12 * a.norm(), "n={n}");
        }
        let dd = cusp_periods(&f, 12, 1, 1, &[3], &PeriodOptions { bigfloat: true, ..opts }).unwrap();
        assert!((dd[0].value() - ps[3].value()).norm() < 1e-13 * ps[3].value().norm());
    }

    #[test]
    fn wrong_sign_is_detected() {
        let f = delta(60);
        let r = cusp_periods(&f, 12, 1, -1, &[2], &PeriodOptions::default());
        assert!(matches!(r, Err(Error::NotEigenform(_))));
    }
}
