use crate::arith::{Rational, Ring};
use crate::series::QSeries;
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Anything that can sit in a polynomial coefficient slot: ring elements and
/// truncated q-series alike.
pub trait Algebra: Clone + Debug + PartialEq + Send + Sync {
    fn is_zero_el(&self) -> bool;
    fn add_el(&self, o: &Self) -> Self;
    fn sub_el(&self, o: &Self) -> Self;
    fn mul_el(&self, o: &Self) -> Self;
    fn neg_el(&self) -> Self;
    fn scale_rat(&self, q: &Rational) -> Self;
}

impl<R: Ring> Algebra for R {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_el(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn sub_el(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn mul_el(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn neg_el(&self) -> Self {
        self.neg_ref()
    }
    fn scale_rat(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
}

impl<R: Ring> Algebra for QSeries<R> {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_el(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_el(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_el(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_el(&self) -> Self {
        self.neg()
    }
    fn scale_rat(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
}

/// Sparse Laurent polynomial in X and Y.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2<C> {
    terms: BTreeMap<(i32, i32), C>,
}

impl<C: Algebra> Default for Poly2<C> {
    fn default() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }
}

impl<C: Algebra> Poly2<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(a: i32, b: i32, c: C) -> Self {
        let mut p = Self::new();
        p.add_term(a, b, c);
        p
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: C) {
        match self.terms.get_mut(&(a, b)) {
            Some(v) => *v = v.add_el(&c),
            None => {
                self.terms.insert((a, b), c);
            }
        }
    }

    pub fn get(&self, a: i32, b: i32) -> Option<&C> {
        self.terms.get(&(a, b))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drop zero coefficients.
    pub fn pruned(&self) -> Self {
        Poly2 { terms: self.terms.iter().filter(|(_, c)| !c.is_zero_el()).map(|(k, c)| (*k, c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero_el())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &o.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_el())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                out.add_term(a1 + a2, b1 + b2, c1.mul_el(c2));
            }
        }
        out
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        self.map(|c| c.scale_rat(q))
    }

    pub fn map<D: Algebra>(&self, f: impl Fn(&C) -> D) -> Poly2<D> {
        Poly2 { terms: self.terms.iter().map(|(k, c)| (*k, f(c))).collect() }
    }

    /// Apply a monomial transformation (a, b) -> (a', b', sign).
    pub fn remap(&self, f: impl Fn(i32, i32) -> (i32, i32, bool)) -> Self {
        let mut out = Self::new();
        for (&(a, b), c) in &self.terms {
            let (a2, b2, negate) = f(a, b);
            out.add_term(a2, b2, if negate { c.neg_el() } else { c.clone() });
        }
        out
    }

    /// P(Y, X).
    pub fn swap_xy(&self) -> Self {
        self.remap(|a, b| (b, a, false))
    }

    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let a = self.terms.keys().map(|k| k.0).min()?;
        let b = self.terms.keys().map(|k| k.1).min()?;
        Some((a, b))
    }

    pub fn max_exponents(&self) -> Option<(i32, i32)> {
        let a = self.terms.keys().map(|k| k.0).max()?;
        let b = self.terms.keys().map(|k| k.1).max()?;
        Some((a, b))
    }
}

impl<C: Algebra> Poly2<C> {
    /// Multiply every coefficient by a scalar element.
    pub fn scale_el(&self, s: &C) -> Self {
        self.map(|c| c.mul_el(s))
    }
}

impl<R: Ring> Poly2<QSeries<R>> {
    /// Multiply each series coefficient by a polynomial with scalar coefficients.
    pub fn times_scalar_poly(&self, p: &Poly2<R>) -> Self {
        let mut out = Self::new();
        for (&(a1, b1), s) in &self.terms {
            for (&(a2, b2), c) in &p.terms {
                out.add_term(a1 + a2, b1 + b2, s.scale(c));
            }
        }
        out
    }

    /// Scalar polynomial times a single q-series.
    pub fn from_poly_series(p: &Poly2<R>, f: &QSeries<R>) -> Self {
        p.terms.iter().fold(Self::new(), |mut acc, (&(a, b), c)| {
            acc.add_term(a, b, f.scale(c));
            acc
        })
    }

    /// Coefficient of q^n in every monomial.
    pub fn q_coeff(&self, n: usize) -> Poly2<R> {
        Poly2 { terms: self.terms.iter().map(|(k, s)| (*k, s.coeffs()[n].clone())).collect() }
    }

    pub fn prec(&self) -> usize {
        self.terms.values().map(|s| s.prec()).min().unwrap_or(usize::MAX)
    }
}

impl<C: Algebra + serde::Serialize> serde::Serialize for Poly2<C> {
    /// A map from "Xa_Yb" to the coefficient.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (&(a, b), c) in &self.terms {
            m.serialize_entry(&super::trigen::monomial_key(a, b), c)?;
        }
        m.end()
    }
}

/// Laurent polynomial in one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Ring> Default for LaurentPoly<C> {
    fn default() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
}

impl<C: Ring + serde::Serialize> serde::Serialize for LaurentPoly<C> {
    /// A map from "X^e" to the coefficient.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&format!("X^{e}"), c)?;
        }
        m.end()
    }
}

impl<C: Ring> LaurentPoly<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::new();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: C) {
        let v = self.terms.entry(e).or_insert_with(C::zero);
        *v = v.add_ref(&c);
    }

    pub fn coeff(&self, e: i32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &C)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.mul_ref(s))).collect() }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, f(c))).collect() }
    }

    /// Parts with even and odd exponents.
    pub fn split_parity(&self) -> (Self, Self) {
        let pick = |odd: bool| LaurentPoly {
            terms: self.terms.iter().filter(|(e, _)| (e.rem_euclid(2) == 1) == odd).map(|(e, c)| (*e, c.clone())).collect(),
        };
        (pick(false), pick(true))
    }

    /// P(X / n): the X^e coefficient is divided by n^e.
    pub fn rescale_arg(&self, n: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| {
                    let f = Rational::from_integer(n.into()).pow(-e);
                    (e, c.scale_rational(&f))
                })
                .collect(),
        }
    }

    /// A(X) * B(Y) as a bivariate polynomial.
    pub fn outer(&self, other: &Self) -> Poly2<C> {
        let mut out = Poly2::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                out.add_term(a, b, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }
}
