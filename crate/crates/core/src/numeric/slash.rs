//! Numeric evaluation of q-expansions and their slashes by matrices.

use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::modforms::{cusp_limit, EisKind};
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// sum a_n q^n at tau together with a tail estimate assuming |a_n| <= C n^growth.
pub fn eval_series(coeffs: &[Complex64], tau: Complex64, growth: f64) -> (Complex64, f64) {
    let q = (2.0 * PI * I * tau).exp();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for a in coeffs {
        acc += a * qn;
        qn *= q;
    }
    let p = coeffs.len() as f64;
    let c = coeffs.iter().enumerate().skip(1).map(|(n, a)| a.norm() / (n as f64).powf(growth)).fold(0.0, f64::max);
    let r = q.norm() * ((p + 1.0) / p).powf(growth);
    let tail = if r < 1.0 { c * p.powf(growth) * q.norm().powf(p) / (1.0 - r) } else { f64::INFINITY };
    (acc, tail)
}

/// det^{k/2} (c tau + d)^{-k} f(gamma tau) for gamma = [a, b; c, d] with det > 0.
pub fn slash_eval(
    f: impl Fn(Complex64) -> Result<Complex64>,
    k: i32,
    gamma: [f64; 4],
    tau: Complex64,
) -> Result<Complex64> {
    let [a, b, c, d] = gamma;
    let det = a * d - b * c;
    if det <= 0.0 {
        return Err(Error::Config("slash matrix must have positive determinant".into()));
    }
    let j = c * tau + d;
    let gt = (a * tau + b) / j;
    Ok(f(gt)? * det.powf(k as f64 / 2.0) * j.powi(-k))
}

/// Coefficients a_0 .. a_{n-1} of G_{r,chi} or H_{r,chi} in floating point.
pub fn eisenstein_coeffs_numeric(kind: EisKind, r: u32, chi: &DirichletCharacter, n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    if n == 0 {
        return out;
    }
    let cb = chi.conj();
    let nn = chi.modulus() as usize;
    let vals: Vec<Complex64> = (0..nn).map(|a| chi.value_complex(a as i64)).collect();
    let cvals: Vec<Complex64> = (0..nn).map(|a| cb.value_complex(a as i64)).collect();
    for d in 1..n {
        let dp = (d as f64).powi(r as i32 - 1);
        for e in 1..=(n - 1) / d {
            let w = match kind {
                EisKind::G => cvals[d % nn],
                EisKind::H => vals[e % nn],
            };
            out[d * e] += w * dp;
        }
    }
    out[0] = cusp_limit(kind, r, chi, 1).map(|c| c.to_complex()).unwrap_or_default();
    out
}

/// (E |_r W_M)(tau) for E = G_{r,chi} or H_{r,chi}, evaluated from the
/// q-expansion at -1/(M tau).
pub fn eval_slashed_eisenstein(kind: EisKind, r: u32, chi: &DirichletCharacter, m: u64, tau: Complex64) -> Result<(Complex64, f64)> {
    let n = chi.modulus();
    if n % m != 0 {
        return Err(Error::NotDivisor(m, n));
    }
    let target = if m == 1 { tau } else { -1.0 / (m as f64 * tau) };
    let qabs = (-2.0 * PI * target.im).exp();
    if qabs >= 1.0 {
        return Err(Error::Convergence("point is not in the upper half-plane".into()));
    }
    // enough terms for n^{r} |q|^n < 1e-20
    let mut terms = 16usize;
    while (terms as f64).powi(r as i32) * qabs.powi(terms as i32) > 1e-20 {
        terms = terms * 5 / 4 + 1;
        if terms > 2_000_000 {
            return Err(Error::Convergence("too many terms needed".into()));
        }
    }
    let coeffs = eisenstein_coeffs_numeric(kind, r, chi, terms);
    let (_, tail) = eval_series(&coeffs, target, r as f64);
    if m == 1 {
        let (v, _) = eval_series(&coeffs, tau, r as f64);
        return Ok((v, tail));
    }
    let f = |t: Complex64| Ok(eval_series(&coeffs, t, r as f64).0);
    let v = slash_eval(f, r as i32, [0.0, -1.0, m as f64, 0.0], tau)?;
    let scale = (m as f64).powf(r as f64 / 2.0) * (m as f64 * tau).norm().powi(-(r as i32));
    Ok((v, tail * scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclotomic;

    #[test]
    fn g4_is_modular_at_level_one() {
        let one = DirichletCharacter::trivial(1);
        let coeffs = eisenstein_coeffs_numeric(EisKind::G, 4, &one, 200);
        let tau = Complex64::new(0.2, 0.9);
        let direct = eval_series(&coeffs, tau, 4.0).0;
        let slashed = slash_eval(|t| Ok(eval_series(&coeffs, t, 4.0).0), 4, [0.0, -1.0, 1.0, 0.0], tau).unwrap();
        assert!((direct - slashed).norm() < 1e-12 * direct.norm());
    }

    #[test]
    fn g_at_w5_maps_to_h() {
        // G_{r,chi} |_r W_N = (N^{r/2} / W(chi)) H_{r,chi} in our normalisation
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let w = chi.gauss_sum().to_complex();
        let tau = Complex64::new(0.05, 0.4);
        for r in [2u32, 4] {
            let (lhs, _) = eval_slashed_eisenstein(EisKind::G, r, &chi, 5, tau).unwrap();
            let h = eisenstein_coeffs_numeric(EisKind::H, r, &chi, 400);
            let rhs = eval_series(&h, tau, r as f64).0 * 5f64.powf(r as f64 / 2.0) / w;
            assert!((lhs - rhs).norm() < 1e-10 * rhs.norm(), "r={r}: {lhs} vs {rhs}");
        }
        let _ = Cyclotomic::one();
    }
}
