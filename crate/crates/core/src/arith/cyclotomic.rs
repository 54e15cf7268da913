//! Elements of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1).
//!
//! Values of different orders can be mixed freely: both operands are lifted
//! into the field of order lcm(m1, m2) first.

use super::intmath::{euler_phi, gcd, lcm};
use super::ring::{rat_to_f64, Rational, Ring};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::rc::Rc;

struct FieldData {
    phi: usize,
    /// `pow[e]` is z^e reduced modulo the m-th cyclotomic polynomial, e < m.
    pow: Vec<Vec<i64>>,
}

fn poly_divexact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both monic-ish integer polynomials, lowest degree first
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclotomic_poly(m: u32) -> Vec<i64> {
    thread_local! {
        static POLYS: RefCell<HashMap<u32, Vec<i64>>> = RefCell::new(HashMap::new());
    }
    if let Some(p) = POLYS.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = poly_divexact(&num, &cyclotomic_poly(d));
        }
    }
    POLYS.with(|c| c.borrow_mut().insert(m, num.clone()));
    num
}

fn field(m: u32) -> Rc<FieldData> {
    thread_local! {
        static FIELDS: RefCell<HashMap<u32, Rc<FieldData>>> = RefCell::new(HashMap::new());
    }
    if let Some(f) = FIELDS.with(|c| c.borrow().get(&m).cloned()) {
        return f;
    }
    let phi = euler_phi(m as u64) as usize;
    let cp = cyclotomic_poly(m);
    let mut pow = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        pow.push(cur.clone());
        // multiply by z and reduce with the monic cyclotomic polynomial
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * cp[j];
            }
        }
    }
    let fd = Rc::new(FieldData { phi, pow });
    FIELDS.with(|c| c.borrow_mut().insert(m, fd.clone()));
    fd
}

#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![q] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// zeta_m^e, stored in the smallest field that contains it.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1);
        let e = e.rem_euclid(m as i64) as u32;
        let g = gcd(e as u64, m as u64).max(1) as u32;
        let (mut m, mut e) = if e == 0 { (1, 0) } else { (m / g, e / g) };
        let mut sign = 1i64;
        if m % 4 == 2 {
            // zeta_{2n} = -zeta_n^{(n+1)/2} for odd n
            let n = m / 2;
            if e % 2 == 1 {
                sign = -1;
            }
            e = ((e as u64 * ((n as u64 + 1) / 2)) % n as u64) as u32;
            m = n;
        }
        let f = field(m);
        let coeffs = f.pow[e as usize]
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c * sign)))
            .collect();
        Cyclotomic { order: m, coeffs }
    }

    /// The primitive 4th root of unity.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_parts(order: u32, coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(order as u64) as usize;
        assert_eq!(coeffs.len(), phi, "coefficient vector must have length phi(order)");
        Cyclotomic { order, coeffs }
    }

    /// Express in the field of order `m`, which must be a multiple of ours.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        let f = field(m);
        let step = m / self.order;
        let mut out = vec![Rational::zero(); f.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j as u32 * step) % m;
            for (k, &t) in f.pow[e as usize].iter().enumerate() {
                if t != 0 {
                    out[k] += c * Rational::from_integer(BigInt::from(t));
                }
            }
        }
        Cyclotomic { order: m, coeffs: out }
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        if self.order == o.order {
            return (self.clone(), o.clone());
        }
        let m = lcm(self.order as u64, o.order as u64) as u32;
        (self.lift(m), o.lift(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Galois action z -> z^j for j coprime to the order.
    pub fn galois(&self, j: i64) -> Self {
        let m = self.order;
        let j = j.rem_euclid(m as i64) as u32;
        assert!(gcd(j as u64, m as u64) == 1 || m == 1);
        if m <= 2 {
            return self.clone();
        }
        let f = field(m);
        let mut out = vec![Rational::zero(); f.phi];
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ee = (e as u64 * j as u64 % m as u64) as usize;
            for (k, &t) in f.pow[ee].iter().enumerate() {
                if t != 0 {
                    out[k] += c * Rational::from_integer(BigInt::from(t));
                }
            }
        }
        Cyclotomic { order: m, coeffs: out }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let m = self.order;
        let mut acc = Cyclotomic::from_int(1);
        for j in 1..m.max(2) {
            if gcd(j as u64, m as u64) == 1 {
                acc = &acc * &self.galois(j as i64);
            }
        }
        acc.to_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.order;
        let mut acc = Cyclotomic::from_int(1);
        for j in 2..m.max(2) {
            if gcd(j as u64, m as u64) == 1 {
                acc = &acc * &self.galois(j as i64);
            }
        }
        let n = (&acc * self).to_rational().expect("norm is rational");
        Some(acc.scale(&(Rational::one() / n)))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let m = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let ang = 2.0 * std::f64::consts::PI * e as f64 / m;
                Complex64::from_polar(rat_to_f64(c), ang)
            })
            .sum()
    }

    fn mul_same(&self, o: &Self) -> Self {
        let m = self.order;
        if m <= 2 {
            return Cyclotomic { order: m, coeffs: vec![&self.coeffs[0] * &o.coeffs[0]] };
        }
        let f = field(m);
        let phi = f.phi;
        let mut wide = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rational> = wide.drain(..phi).collect();
        for (k, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (phi + k) % m as usize;
            for (j, &t) in f.pow[e].iter().enumerate() {
                if t != 0 {
                    out[j] += &c * Rational::from_integer(BigInt::from(t));
                }
            }
        }
        Cyclotomic { order: m, coeffs: out }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        if self.order == o.order {
            return self.coeffs == o.coeffs;
        }
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match e {
                0 => parts.push(format!("{c}")),
                1 => parts.push(format!("({c})*z{}", self.order)),
                _ => parts.push(format!("({c})*z{}^{e}", self.order)),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("order", &self.order)?;
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &cs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u32,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if raw.order == 0 || coeffs.len() != euler_phi(raw.order as u64) as usize {
            return Err(serde::de::Error::custom("coefficient count must equal phi(order)"));
        }
        Ok(Cyclotomic { order: raw.order, coeffs })
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        if self.order == o.order {
            let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
            return Cyclotomic { order: self.order, coeffs };
        }
        let (a, b) = self.common(o);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if self.order == o.order {
            return self.mul_same(o);
        }
        // a rational factor needs no lift
        if self.order == 1 {
            return o.scale(&self.coeffs[0]);
        }
        if o.order == 1 {
            return self.scale(&o.coeffs[0]);
        }
        let (a, b) = self.common(o);
        a.mul_same(&b)
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, o: &Cyclotomic) -> Cyclotomic {
        self * &o.inv().expect("division by zero cyclotomic")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, o: &Cyclotomic) {
        if self.order == o.order {
            for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + o;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, o: &Cyclotomic) {
        *self = &*self - o;
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_int(1)
    }
}

impl Ring for Cyclotomic {
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
        Cyclotomic::from_int(n)
    }
    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(q.clone())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn z(m: u32, e: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(m, e)
    }

    #[test]
    fn sqrt5_from_gauss_sum() {
        let s = &(&z(5, 1) + &z(5, 4)) - &(&z(5, 2) + &z(5, 3));
        assert_eq!(&s * &s, Cyclotomic::from_int(5));
    }

    #[test]
    fn i_squared_and_mixed_orders() {
        let i = Cyclotomic::i();
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
        let w = &z(5, 1) * &i;
        assert_eq!(w.order(), 20);
        assert_eq!(&w * &w.inv().unwrap(), Cyclotomic::from_int(1));
        assert!((w.to_complex() - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (0.2 + 0.25))).norm() < 1e-14);
    }

    #[test]
    fn order_two_mod_four_is_reduced() {
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(10, 1).order(), 5);
        assert!((z(10, 3).to_complex() - Complex64::from_polar(1.0, 0.6 * std::f64::consts::PI)).norm() < 1e-14);
    }

    #[test]
    fn norm_and_conj() {
        let a = &z(5, 1) + &Cyclotomic::from_int(2);
        let n = a.norm();
        let prod = (0..4).fold(Complex64::new(1.0, 0.0), |acc, j| {
            acc * (Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j + 1) as f64 / 5.0) + 2.0)
        });
        assert!((rat_to_f64(&n) - prod.re).abs() < 1e-9);
        assert_eq!(z(5, 1).conj(), z(5, 4));
    }

    #[test]
    fn serde_roundtrip() {
        let a = z(5, 2).scale(&rat(3, 7));
        let s = serde_json::to_string(&a).unwrap();
        let b: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    fn arb(m: u32) -> impl Strategy<Value = Cyclotomic> {
        let phi = euler_phi(m as u64) as usize;
        proptest::collection::vec((-20i64..20, 1i64..6), phi).prop_map(move |v| {
            Cyclotomic::from_parts(m, v.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(12), b in arb(12), c in arb(5)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &a), &Cyclotomic::from_int(0));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::from_int(1));
            }
            let ab = (&a * &c).to_complex();
            prop_assert!((ab - a.to_complex() * c.to_complex()).norm() < 1e-6 * (1.0 + ab.norm()));
        }
    }
}
