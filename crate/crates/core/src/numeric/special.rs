//! Special functions in double precision.

use crate::arith::{bernoulli, rat_to_f64};
use num_complex::Complex64;

/// Hurwitz zeta(s, a) for a in (0, 1] and s != 1, by Euler-Maclaurin.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    // fewer direct terms for small Re(s), where the summands grow; at
    // non-positive integers the correction series terminates, so none at all
    let nonpositive_integer = s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0;
    let m_direct: usize = if s.re > 0.5 {
        40
    } else if nonpositive_integer {
        0
    } else {
        1
    };
    let terms: usize = if s.re > 0.5 { 14 } else { ((2.0 - s.re) / 2.0).ceil().clamp(1.0, 14.0) as usize };
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..m_direct {
        acc += (-s * (a + j as f64).ln()).exp();
    }
    let x = a + m_direct as f64;
    let lx = x.ln();
    acc += ((Complex64::new(1.0, 0.0) - s) * lx).exp() / (s - 1.0);
    acc += 0.5 * (-s * lx).exp();
    // rising factorial s (s+1) ... (s+2i-2) times x^{-s-2i+1}
    let mut rising = s;
    let mut fact = 2.0;
    for i in 1..=terms {
        let b = rat_to_f64(&bernoulli(2 * i));
        acc += b / fact * rising * ((-s - (2 * i - 1) as f64) * lx).exp();
        rising *= (s + (2 * i - 1) as f64) * (s + (2 * i) as f64);
        fact *= ((2 * i + 1) * (2 * i + 2)) as f64;
    }
    acc
}

/// Riemann zeta for real s != 1.
pub fn zeta(s: f64) -> f64 {
    hurwitz_zeta(Complex64::new(s, 0.0), 1.0).re
}

pub fn factorial_f64(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
