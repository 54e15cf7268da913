//! Laurent polynomials in a transcendental period symbol w with cyclotomic
//! coefficients. Eisenstein period data and Petersson norms carry w, and
//! every quotient that should be algebraic is checked to be w-free.

use super::ring::{Rational, Ring};
use super::Cyclotomic;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

#[derive(Clone, Debug, PartialEq, Default)]
pub struct OmegaExpr {
    terms: BTreeMap<i32, Cyclotomic>,
}

impl OmegaExpr {
    pub fn scalar(c: Cyclotomic) -> Self {
        Self::monomial(c, 0)
    }

    /// c * w^e
    pub fn monomial(c: Cyclotomic, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        OmegaExpr { terms }
    }

    pub fn omega() -> Self {
        Self::monomial(Cyclotomic::one(), 1)
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    /// The coefficient if this is a single monomial c * w^e.
    pub fn as_monomial(&self) -> Option<(&Cyclotomic, i32)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((e, c)), None) => Some((c, *e)),
            _ => None,
        }
    }

    /// The value if no power of w survives.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        if self.terms.is_empty() {
            return Some(Cyclotomic::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Divide by a monomial; fails on zero or a non-monomial divisor.
    pub fn div_monomial(&self, d: &OmegaExpr) -> Option<OmegaExpr> {
        let (c, e) = d.as_monomial()?;
        let inv = c.inv()?;
        Some(OmegaExpr { terms: self.terms.iter().map(|(k, v)| (k - e, v * &inv)).collect() })
    }

    pub fn eval(&self, omega: Complex64) -> Complex64 {
        self.terms.iter().map(|(e, c)| c.to_complex() * omega.powi(*e)).sum()
    }
}

impl serde::Serialize for OmegaExpr {
    /// A map from "w^e" to the cyclotomic coefficient.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&format!("w^{e}"), c)?;
        }
        m.end()
    }
}

impl Add for OmegaExpr {
    type Output = OmegaExpr;
    fn add(self, o: OmegaExpr) -> OmegaExpr {
        self.add_ref(&o)
    }
}

impl Mul for OmegaExpr {
    type Output = OmegaExpr;
    fn mul(self, o: OmegaExpr) -> OmegaExpr {
        self.mul_ref(&o)
    }
}

impl Zero for OmegaExpr {
    fn zero() -> Self {
        OmegaExpr::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }
}

impl One for OmegaExpr {
    fn one() -> Self {
        OmegaExpr::scalar(Cyclotomic::one())
    }
}

impl Ring for OmegaExpr {
    fn add_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            let v = out.terms.entry(*e).or_insert_with(Cyclotomic::zero);
            *v += c;
        }
        out.normalized()
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let mut out = OmegaExpr::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let v = out.terms.entry(e1 + e2).or_insert_with(Cyclotomic::zero);
                *v += &(c1 * c2);
            }
        }
        out.normalized()
    }
    fn neg_ref(&self) -> Self {
        OmegaExpr { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn from_int(n: i64) -> Self {
        OmegaExpr::scalar(Cyclotomic::from_int(n))
    }
    fn from_rational(q: &Rational) -> Self {
        OmegaExpr::scalar(Cyclotomic::from_rational(q.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let w = OmegaExpr::omega();
        let a = w.mul_ref(&OmegaExpr::from_int(3));
        let q = a.div_monomial(&w).unwrap();
        assert_eq!(q.as_scalar(), Some(Cyclotomic::from_int(3)));
        assert!(a.as_scalar().is_none());
        assert!(a.sub_ref(&a).is_zero());
    }
}
