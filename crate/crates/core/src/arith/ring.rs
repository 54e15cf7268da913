use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // very large numerator/denominator: scale by bit length
            let nb = q.numer().bits() as i64;
            let db = q.denom().bits() as i64;
            let shift = (nb.max(db) - 60).max(0) as usize;
            let n = (q.numer().abs() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            let v = if d == 0.0 { f64::INFINITY } else { n / d };
            if q.is_negative() { -v } else { v }
        }
    }
}

/// Coefficient ring used by series, jets and polynomials.
///
/// Zero and one come from `num_traits`; the arithmetic methods take references
/// and are named so they never clash with `std::ops`.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + Zero + One + 'static {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }

    fn scale_rational(&self, q: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(q))
    }

    fn pow_u(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Ring for Complex64 {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(rat_to_f64(q), 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_rational_to_f64() {
        let big = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((rat_to_f64(&big) - 3.0).abs() < 1e-12);
        assert_eq!(rat_to_f64(&rat(-1, 4)), -0.25);
    }
}
