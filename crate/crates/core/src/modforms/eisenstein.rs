use super::sign::SignCharacter;
use crate::arith::intmath::divisors;
use crate::arith::{bernoulli, Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::series::QSeries;
use num_bigint::BigInt;

fn int_pow(d: usize, e: u32) -> Rational {
    Rational::from_integer(BigInt::from(d).pow(e))
}

/// Series with zero constant term and q^n coefficient sum_{d e = n} f(d, e).
pub fn divisor_sum_series(prec: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> QSeries<Cyclotomic> {
    let mut coeffs = vec![Cyclotomic::zero(); prec];
    for d in 1..prec {
        for e in 1..=(prec - 1) / d {
            let v = f(d, e);
            if !v.is_zero() {
                coeffs[d * e] += &v;
            }
        }
    }
    QSeries::new(coeffs)
}

/// Whether chi(-1) = (-1)^k; otherwise the twisted families vanish.
pub fn parity_matches(k: u32, chi: &DirichletCharacter) -> bool {
    chi.is_even() == (k % 2 == 0)
}

/// G_k = -B_k/2k + sum sigma_{k-1}(n) q^n.
pub fn eisenstein_g(k: u32, prec: usize) -> QSeries<Cyclotomic> {
    let mut s = divisor_sum_series(prec, |d, _| Cyclotomic::from_rational(int_pow(d, k - 1)));
    if prec > 0 {
        s.coeffs_mut()[0] = Cyclotomic::from_rational(-bernoulli(k as usize) / Rational::from_integer((2 * k).into()));
    }
    s
}

/// G_{k,chi} = -B_{k,conj chi}/2k + sum_n sum_{d|n} conj chi(d) d^{k-1} q^n.
///
/// Returns the zero series when the parity of k does not match chi.
pub fn eisenstein_g_chi(k: u32, chi: &DirichletCharacter, prec: usize) -> QSeries<Cyclotomic> {
    if !parity_matches(k, chi) {
        return QSeries::zero(prec);
    }
    let cb = chi.conj();
    let mut s = divisor_sum_series(prec, |d, _| cb.value(d as i64).scale(&int_pow(d, k - 1)));
    if prec > 0 {
        s.coeffs_mut()[0] = cb.twisted_bernoulli(k as usize).scale(&(-Rational::from_integer(1.into()) / Rational::from_integer((2 * k).into())));
    }
    s
}

/// H_{k,chi} = chi(0)(-B_k/2k) + sum_n sum_{d|n} chi(n/d) d^{k-1} q^n.
///
/// The constant term only survives for the trivial character mod 1, where
/// H_{k,1} = G_k.
pub fn eisenstein_h_chi(k: u32, chi: &DirichletCharacter, prec: usize) -> QSeries<Cyclotomic> {
    if !parity_matches(k, chi) {
        return QSeries::zero(prec);
    }
    let mut s = divisor_sum_series(prec, |d, e| chi.value(e as i64).scale(&int_pow(d, k - 1)));
    if prec > 0 {
        let c0 = chi.value(0);
        s.coeffs_mut()[0] = c0.scale(&(-bernoulli(k as usize) / Rational::from_integer((2 * k).into())));
    }
    s
}

/// sum_{d | N} eps(d) d^{k/2} f(q^d), truncated at the precision of f.
pub fn level_raise(f: &QSeries<Cyclotomic>, k: u32, eps: &SignCharacter) -> QSeries<Cyclotomic> {
    assert!(k % 2 == 0, "level raising needs even weight");
    let prec = f.prec();
    let mut acc = QSeries::zero(prec);
    for d in divisors(eps.level()) {
        let c = Rational::from_integer(BigInt::from(eps.eval(d)) * BigInt::from(d).pow(k / 2));
        acc = acc.add(&f.rescale(d as usize).truncate(prec).scale_rational(&c));
    }
    acc
}

/// The level-N Eisenstein series G_k raised with sign character eps.
pub fn eisenstein_level(k: u32, eps: &SignCharacter, prec: usize) -> Result<QSeries<Cyclotomic>> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::BadWeight(k as i64));
    }
    if k == 2 && eps.is_trivial() {
        return Err(Error::ExcludedEisenstein);
    }
    Ok(level_raise(&eisenstein_g(k, prec), k, eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn ints(s: &QSeries<Cyclotomic>) -> Vec<Rational> {
        s.coeffs().iter().map(|c| c.to_rational().unwrap()).collect()
    }

    #[test]
    fn g4_and_g2() {
        let g4 = ints(&eisenstein_g(4, 5));
        assert_eq!(g4, vec![rat(1, 240), rat(1, 1), rat(9, 1), rat(28, 1), rat(73, 1)]);
        let g2 = ints(&eisenstein_g(2, 3));
        assert_eq!(g2, vec![rat(-1, 24), rat(1, 1), rat(3, 1)]);
    }

    #[test]
    fn trivial_modulus_one_gives_g() {
        let one = DirichletCharacter::trivial(1);
        for k in [2, 4, 6] {
            assert_eq!(eisenstein_g_chi(k, &one, 10), eisenstein_g(k, 10));
            assert_eq!(eisenstein_h_chi(k, &one, 10), eisenstein_g(k, 10));
        }
    }

    #[test]
    fn quadratic_mod_five() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let g = ints(&eisenstein_g_chi(2, &chi, 4));
        // -B_{2,chi}/4 = -1/5; a(2) = 1 - 2 = -1; a(3) = 1 - 3 = -2
        assert_eq!(g, vec![rat(-1, 5), rat(1, 1), rat(-1, 1), rat(-2, 1)]);
        let h = ints(&eisenstein_h_chi(2, &chi, 4));
        // a(2) = chi(2) + 2 = 1; a(3) = chi(3) + 3 = 2
        assert_eq!(h, vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(2, 1)]);
        assert!(eisenstein_g_chi(3, &chi, 4).is_zero());
    }

    #[test]
    fn excluded_case() {
        let e = SignCharacter::trivial(5).unwrap();
        assert!(matches!(eisenstein_level(2, &e, 5), Err(Error::ExcludedEisenstein)));
        let m = SignCharacter::enumerate(5).unwrap()[1].clone();
        let g = ints(&eisenstein_level(2, &m, 6).unwrap());
        // G_2(q) - 5 G_2(q^5): constant -1/24 + 5/24 = 1/6
        assert_eq!(g[0], rat(1, 6));
        assert_eq!(g[5], rat(6, 1) - rat(5, 1));
    }

    proptest! {
        #[test]
        fn level_raise_is_multiplicative_in_the_sign(k in prop::sample::select(vec![4u32, 6, 8])) {
            let f = eisenstein_g(k, 40);
            for a in SignCharacter::enumerate(6).unwrap() {
                // raising to level 2 and then by 3 equals raising to level 6
                let split2 = SignCharacter::new(2, [(2, a.sign_at(2))].into()).unwrap();
                let split3 = SignCharacter::new(3, [(3, a.sign_at(3))].into()).unwrap();
                let lhs = level_raise(&level_raise(&f, k, &split2), k, &split3);
                prop_assert_eq!(&lhs, &level_raise(&f, k, &a));
            }
        }
    }
}
