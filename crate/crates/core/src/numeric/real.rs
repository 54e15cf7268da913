//! Scalar types for the period kernels: f64, or a double-double when more
//! headroom is wanted.

use crate::arith::Cyclotomic;
use num_traits::Float;
use twofloat::TwoFloat;

pub trait Real: Float + Send + Sync + std::fmt::Debug {
    fn pi() -> Self;
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;

    /// a / b to full working precision.
    fn div_acc(self, b: Self) -> Self {
        self / b
    }

    /// Real and imaginary parts. Rational values convert through their
    /// numerator and denominator; others go through f64.
    fn from_cyclotomic(c: &Cyclotomic) -> (Self, Self) {
        match c.to_rational() {
            Some(q) => {
                let split = |b: &num_bigint::BigInt| -> Self {
                    // exact for |b| < 2^106
                    let hi = crate::arith::rat_to_f64(&crate::arith::Rational::from_integer(b.clone()));
                    let rest = b - num_bigint::BigInt::from(hi as i128);
                    Self::from_f64(hi) + Self::from_f64(crate::arith::rat_to_f64(&crate::arith::Rational::from_integer(rest)))
                };
                (split(q.numer()).div_acc(split(q.denom())), Self::zero())
            }
            None => {
                let z = c.to_complex();
                (Self::from_f64(z.re), Self::from_f64(z.im))
            }
        }
    }
}

impl Real for f64 {
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for TwoFloat {
    fn pi() -> Self {
        twofloat::consts::PI
    }
    fn from_f64(x: f64) -> Self {
        TwoFloat::from(x)
    }
    fn to_f64(self) -> f64 {
        self.hi() + self.lo()
    }

    // The crate's TwoFloat / TwoFloat forms the residual 1 - b*(1/b) without
    // an fma and so only keeps double precision; refine 1/b by one Newton step.
    fn div_acc(self, b: Self) -> Self {
        let y = TwoFloat::from(b.hi().recip());
        let y = y + y * (TwoFloat::from(1.0) - b * y);
        self * y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn double_double_keeps_more_digits() {
        let third = <TwoFloat as Real>::from_cyclotomic(&Cyclotomic::from_rational(rat(1, 3))).0;
        let err = (third * TwoFloat::from(3.0) - TwoFloat::from(1.0)).abs();
        assert!(err.to_f64() < 1e-30);
        let x = <TwoFloat as Real>::from_f64(7.0);
        let r = TwoFloat::from(2.0).div_acc(x) * x - TwoFloat::from(2.0);
        assert!(r.abs().to_f64() < 1e-30);
        let e = <TwoFloat as Real>::from_f64(1.0).exp();
        assert!((e.to_f64() - std::f64::consts::E).abs() < 1e-15);
    }
}
