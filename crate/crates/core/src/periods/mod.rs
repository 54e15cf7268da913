//! Period polynomials and the period side of the generating function.
//!
//! Eisenstein periods are exact Laurent polynomials carrying the
//! transcendental constant w+ as a formal symbol; cusp periods come from the
//! numeric integrals and are glued to the exact side by a fitted Petersson
//! norm.

mod assemble;
mod eisenstein;
mod fit;

pub use assemble::{assemble_r, c_hat_to_r, eisenstein_r, generating_c_eisenstein, paired_numerator, EisensteinR};
pub use eisenstein::{omega_minus, period_eisenstein, period_eisenstein_parts, period_eisenstein_twisted};
pub use fit::{petersson_fit, snap_rational, PeterssonFit, Snap};

use crate::arith::intmath::binomial;
use crate::arith::Ring;
use crate::series::LaurentPoly;
use serde::Serialize;

/// A period polynomial split by the parity of the exponent of X.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodPoly<C: Ring> {
    pub k: u32,
    pub even: LaurentPoly<C>,
    pub odd: LaurentPoly<C>,
}

impl<C: Ring> PeriodPoly<C> {
    pub fn from_poly(k: u32, p: &LaurentPoly<C>) -> Self {
        let (even, odd) = p.split_parity();
        PeriodPoly { k, even, odd }
    }

    /// r(X) = sum_n (-1)^n C(k-2, n) r_n X^{k-2-n}.
    pub fn from_values(k: u32, r: &[C]) -> Self {
        let w = k as i64 - 2;
        let p = LaurentPoly::from_terms(r.iter().enumerate().map(|(n, v)| {
            let c = binomial(w, n as i64);
            let c = if n % 2 == 1 { -c } else { c };
            ((w - n as i64) as i32, v.scale_rational(&crate::arith::Rational::from_integer(c)))
        }));
        Self::from_poly(k, &p)
    }

    pub fn full(&self) -> LaurentPoly<C> {
        self.even.add(&self.odd)
    }
}

/// Serializable view of complex periods for reports.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodEntry {
    pub n: u32,
    pub re: f64,
    pub im: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn values_round_trip() {
        let r: Vec<_> = (0..5).map(|n| rat(n + 1, 1)).collect();
        let p = PeriodPoly::from_values(6, &r);
        let full = p.full();
        // X^{4-n} carries (-1)^n C(4,n) r_n
        assert_eq!(full.coeff(4), rat(1, 1));
        assert_eq!(full.coeff(3), rat(-8, 1));
        assert_eq!(full.coeff(0), rat(5, 1));
        assert!(p.even.terms().all(|(e, _)| e % 2 == 0));
    }
}
