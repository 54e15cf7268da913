use crate::arith::intmath::{binomial, factorial};
use crate::arith::{Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use crate::modforms::{eisenstein_g_chi, eisenstein_h_chi};
use crate::series::QSeries;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// The Eisenstein combinations that feed both Kronecker factors:
/// `a[k] = G_{k,conj chi} + H_{k,chi}` and `b[k] = G_{k,chi} + H_{k,conj chi}`.
#[derive(Clone, Debug)]
pub struct Families {
    pub prec: usize,
    pub chi0: Cyclotomic,
    pub a: BTreeMap<u32, QSeries<Cyclotomic>>,
    pub b: BTreeMap<u32, QSeries<Cyclotomic>>,
}

impl Families {
    pub fn new(chi: &DirichletCharacter, kmax: u32, prec: usize) -> Self {
        let cb = chi.conj();
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        for k in (2..=kmax).step_by(2) {
            a.insert(k, eisenstein_g_chi(k, &cb, prec).add(&eisenstein_h_chi(k, chi, prec)));
            b.insert(k, eisenstein_g_chi(k, chi, prec).add(&eisenstein_h_chi(k, &cb, prec)));
        }
        Families { prec, chi0: chi.value(0), a, b }
    }

    fn get(&self, k: u32, conj: bool) -> &QSeries<Cyclotomic> {
        let m = if conj { &self.b } else { &self.a };
        m.get(&k).unwrap_or_else(|| panic!("weight {k} outside the prepared range"))
    }
}

fn rat_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// [f, g]_m = sum_{m1+m2=m} (-1)^{m2} C(k1+m-1, m2) C(k2+m-1, m1) theta^{m1} f theta^{m2} g.
pub fn rc_bracket(f: &QSeries<Cyclotomic>, k1: u32, g: &QSeries<Cyclotomic>, k2: u32, m: i32) -> QSeries<Cyclotomic> {
    let prec = f.prec().min(g.prec());
    let mut acc = QSeries::zero(prec);
    if m < 0 {
        return acc;
    }
    for m1 in 0..=m {
        let m2 = m - m1;
        let c = binomial((k1 as i32 + m - 1) as i64, m2 as i64) * binomial((k2 as i32 + m - 1) as i64, m1 as i64);
        let c = if m2 % 2 == 1 { -c } else { c };
        let t = f.theta(m1 as u32).mul(&g.theta(m2 as u32)).scale_rational(&rat_int(c));
        acc = acc.add(&t);
    }
    acc
}

/// The bracket with the weight-2 correction terms
/// chi0 [delta_{k2,2} theta^{m+1} f/(m+k1) + (-1)^m delta_{k1,2} theta^{m+1} g/(m+k2)].
pub fn rc_bracket_modified(
    f: &QSeries<Cyclotomic>,
    k1: u32,
    g: &QSeries<Cyclotomic>,
    k2: u32,
    m: i32,
    chi0: &Cyclotomic,
) -> QSeries<Cyclotomic> {
    let mut acc = rc_bracket(f, k1, g, k2, m);
    if chi0.is_zero() {
        return acc;
    }
    if k2 == 2 {
        let t = f.theta((m + 1) as u32).scale_rational(&Rational::new(1.into(), BigInt::from(m + k1 as i32)));
        acc = acc.add(&t.scale(chi0));
    }
    if k1 == 2 {
        let sign = if m.rem_euclid(2) == 1 { -1 } else { 1 };
        let t = g.theta((m + 1) as u32).scale_rational(&Rational::new(sign.into(), BigInt::from(m + k2 as i32)));
        acc = acc.add(&t.scale(chi0));
    }
    acc
}

/// g_{k,m} of F^chi (or of F^{conj chi} when `conj`): the coefficient of
/// (u^{k-1} + v^{k-1}) (uv)^m.
pub fn jet_coefficient(fam: &Families, k: u32, m: i32, conj: bool) -> QSeries<Cyclotomic> {
    if m == -1 {
        return if k == 2 { QSeries::constant(fam.chi0.clone(), fam.prec) } else { QSeries::zero(fam.prec) };
    }
    let d = factorial(m as u64) * factorial((m + k as i32 - 1) as u64);
    fam.get(k, conj).theta(m as u32).scale_rational(&Rational::new((-1).into(), d))
}

/// g_{k1,k2,m} through the modified bracket of the two families.
pub fn g_coefficient(fam: &Families, k1: u32, k2: u32, m: i32) -> QSeries<Cyclotomic> {
    let br = rc_bracket_modified(fam.get(k1, false), k1, fam.get(k2, true), k2, m, &fam.chi0);
    let d = factorial((k1 as i32 + m - 1) as u64) * factorial((k2 as i32 + m - 1) as u64);
    br.scale_rational(&Rational::new(1.into(), d))
}

/// g_{k1,k2,m} = sum_{m1+m2=m, m_i >= -1} (-1)^{m2} g_{k1,m1,chi} g_{k2,m2,conj chi}.
pub fn g_coefficient_convolution(fam: &Families, k1: u32, k2: u32, m: i32) -> QSeries<Cyclotomic> {
    let mut acc = QSeries::zero(fam.prec);
    for m1 in -1..=m + 1 {
        let m2 = m - m1;
        if m2 < -1 {
            continue;
        }
        let t = jet_coefficient(fam, k1, m1, false).mul(&jet_coefficient(fam, k2, m2, true));
        acc = if m2.rem_euclid(2) == 1 { acc.sub(&t) } else { acc.add(&t) };
    }
    acc
}
