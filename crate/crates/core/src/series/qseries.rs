use crate::arith::{Rational, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// sum_{n < prec} a_n q^n, known modulo q^prec.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> QSeries<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        QSeries { coeffs }
    }

    pub fn zero(prec: usize) -> Self {
        QSeries { coeffs: vec![R::zero(); prec] }
    }

    pub fn constant(c: R, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if prec > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn from_fn(prec: usize, f: impl Fn(usize) -> R) -> Self {
        QSeries { coeffs: (0..prec).map(f).collect() }
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [R] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of q^n; asking beyond the known precision is an error.
    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::PrecisionExceeded { index: n, prec: self.prec() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        QSeries { coeffs: self.coeffs[..prec.min(self.prec())].to_vec() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        QSeries { coeffs: (0..p).map(|n| self.coeffs[n].add_ref(&o.coeffs[n])).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        QSeries { coeffs: (0..p).map(|n| self.coeffs[n].sub_ref(&o.coeffs[n])).collect() }
    }

    pub fn neg(&self) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    /// Product truncated at the smaller precision.
    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        let mut out = vec![R::zero(); p];
        for (i, a) in self.coeffs.iter().take(p).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(p - i).enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        QSeries { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a.scale_rational(c)).collect() }
    }

    /// theta^m = (q d/dq)^m, i.e. a_n -> n^m a_n.
    pub fn theta(&self, m: u32) -> Self {
        if m == 0 {
            return self.clone();
        }
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| {
                    if n == 0 || a.is_zero() {
                        R::zero()
                    } else {
                        a.scale_rational(&Rational::from_integer(BigInt::from(n).pow(m)))
                    }
                })
                .collect(),
        }
    }

    /// f(q) -> f(q^d). The result is known modulo q^(d*prec).
    pub fn rescale(&self, d: usize) -> Self {
        assert!(d >= 1);
        let mut out = vec![R::zero(); self.prec() * d];
        for (n, a) in self.coeffs.iter().enumerate() {
            out[n * d] = a.clone();
        }
        QSeries { coeffs: out }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// If `self = c * other` for a scalar c (given a way to divide), return c.
    pub fn ratio_to(&self, other: &Self, div: impl Fn(&R, &R) -> R) -> Option<R> {
        let p = self.prec().min(other.prec());
        let n0 = (0..p).find(|&n| !other.coeffs[n].is_zero())?;
        let c = div(&self.coeffs[n0], &other.coeffs[n0]);
        (0..p).all(|n| self.coeffs[n] == other.coeffs[n].mul_ref(&c)).then_some(c)
    }
}

impl<R: Serialize> Serialize for QSeries<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QSeries", 2)?;
        st.serialize_field("prec", &self.coeffs.len())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Cyclotomic};
    use proptest::prelude::*;

    fn qs(v: &[i64]) -> QSeries<Rational> {
        QSeries::new(v.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn basic_ops() {
        let a = qs(&[1, 1, 0, 0]);
        let b = qs(&[1, -1, 0]);
        assert_eq!(a.mul(&b), qs(&[1, 0, -1]));
        assert_eq!(a.theta(2), qs(&[0, 1, 0, 0]));
        assert_eq!(qs(&[1, 2]).rescale(3), qs(&[1, 0, 0, 2, 0, 0]));
        assert!(a.coeff(4).is_err());
        assert_eq!(a.coeff(1).unwrap(), &rat(1, 1));
    }

    #[test]
    fn cyclotomic_coefficients() {
        let z = Cyclotomic::root_of_unity(5, 1);
        let a = QSeries::new(vec![Cyclotomic::one(), z.clone()]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs()[1], z.add_ref(&z));
    }

    fn arb(p: usize) -> impl Strategy<Value = QSeries<Rational>> {
        proptest::collection::vec(-9i64..9, p).prop_map(|v| qs(&v))
    }

    proptest! {
        #[test]
        fn ring_laws_and_precision(a in arb(12), b in arb(9), c in arb(10)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).prec(), 9);
            prop_assert_eq!(a.mul(&c).prec(), 10);
            // theta is a derivation
            prop_assert_eq!(a.mul(&b).theta(1), a.theta(1).mul(&b).add(&a.mul(&b.theta(1))));
            prop_assert_eq!(a.rescale(3).prec(), 36);
        }
    }
}
