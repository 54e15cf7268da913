//! Exact period polynomials of Eisenstein series, in units of w+.

use super::PeriodPoly;
use crate::arith::intmath::{divisors, factorial, primes_dividing};
use crate::arith::{Cyclotomic, OmegaExpr, Rational, Ring};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::modforms::SignCharacter;
use crate::series::LaurentPoly;
use num_bigint::BigInt;

fn ipow(n: u64, e: i32) -> Rational {
    Rational::from_integer(BigInt::from(n)).pow(e)
}

/// w- = -(k-2)!/2
pub fn omega_minus(k: u32) -> Rational {
    Rational::new(-factorial(k as u64 - 2), BigInt::from(2))
}

fn even_unit(lead: Cyclotomic, k: u32) -> LaurentPoly<OmegaExpr> {
    LaurentPoly::from_terms([
        (k as i32 - 2, OmegaExpr::monomial(lead, 1)),
        (0, OmegaExpr::monomial(-Cyclotomic::one(), 1)),
    ])
}

/// Periods of the twist of a level-N Eisenstein series by an even primitive
/// character chi mod N. They do not depend on the sign character.
pub fn period_eisenstein_twisted(k: u32, chi: &DirichletCharacter) -> Result<PeriodPoly<OmegaExpr>> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::BadWeight(k as i64));
    }
    if !chi.is_even() || !chi.is_primitive() {
        return Err(Error::InvalidCharacter("need an even primitive character".into()));
    }
    let n = chi.modulus();
    let chi0 = chi.value(0);
    // chi(0) w+ (X^{k-2} - 1); chi(0) is 1 at N = 1 and 0 otherwise
    let even = if chi0.is_zero() { LaurentPoly::new() } else { even_unit(Cyclotomic::one(), k) };
    let cb = chi.conj();
    let pre = chi.gauss_sum().scale(&(omega_minus(k) * ipow(n, 1 - k as i32)));
    let mut odd = LaurentPoly::new();
    for r in (0..=k).step_by(2) {
        let s = k - r;
        let br = chi.twisted_bernoulli(r as usize).scale(&Rational::new(1.into(), factorial(r as u64)));
        let bs = cb.twisted_bernoulli(s as usize).scale(&Rational::new(1.into(), factorial(s as u64)));
        let c = (&(&pre * &br) * &bs).scale(&ipow(n, r as i32 - 1));
        odd.add_term(r as i32 - 1, OmegaExpr::scalar(c));
    }
    Ok(PeriodPoly { k, even, odd })
}

/// Periods of the level-N Eisenstein series with Atkin-Lehner signs eps,
/// returned as `(common, p)` where the true even part is `common` times
/// `p.even`. The common factor prod_{p|N} (1 + eps(p) p^{1-k/2}) also
/// divides the Petersson norm and vanishes for some weight-2 signs.
pub fn period_eisenstein_parts(k: u32, eps: &SignCharacter) -> Result<(Rational, PeriodPoly<OmegaExpr>)> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::BadWeight(k as i64));
    }
    if k == 2 && eps.is_trivial() {
        return Err(Error::ExcludedEisenstein);
    }
    let n = eps.level();
    let mut common = Rational::from_integer(1.into());
    for p in primes_dividing(n) {
        common *= Rational::from_integer(1.into()) + Rational::from_integer(eps.eval(p).into()) * ipow(p, 1 - k as i32 / 2);
    }
    let lead = Cyclotomic::from_rational(Rational::from_integer(eps.eval(n).into()) * ipow(n, k as i32 / 2 - 1));
    let even = even_unit(lead, k);
    let base = period_eisenstein_twisted(k, &DirichletCharacter::trivial(1))?.odd;
    let mut odd = LaurentPoly::new();
    for d in divisors(n) {
        let w = Rational::from_integer(eps.eval(d).into()) * ipow(d, 1 - k as i32 / 2);
        for (&e, c) in base.terms() {
            odd.add_term(e, c.scale_rational(&(&w * ipow(d, e))));
        }
    }
    Ok((common, PeriodPoly { k, even, odd }))
}

pub fn period_eisenstein(k: u32, eps: &SignCharacter) -> Result<PeriodPoly<OmegaExpr>> {
    let (common, mut p) = period_eisenstein_parts(k, eps)?;
    p.even = p.even.map(|c| c.scale_rational(&common));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::Zero;

    fn scalar(q: Rational) -> OmegaExpr {
        OmegaExpr::from_rational(&q)
    }

    #[test]
    fn level_one_weight_four_odd_part() {
        let p = period_eisenstein_twisted(4, &DirichletCharacter::trivial(1)).unwrap();
        assert_eq!(p.odd.coeff(-1), scalar(rat(1, 720)));
        assert_eq!(p.odd.coeff(1), scalar(rat(-1, 144)));
        assert_eq!(p.odd.coeff(3), scalar(rat(1, 720)));
        assert_eq!(p.even.coeff(2), OmegaExpr::omega());
        assert_eq!(p.even.coeff(0), OmegaExpr::omega().neg_ref());
    }

    #[test]
    fn level_one_untwisted_matches_twisted() {
        let one = SignCharacter::trivial(1).unwrap();
        for k in [4, 6, 12] {
            let a = period_eisenstein(k, &one).unwrap();
            let b = period_eisenstein_twisted(k, &DirichletCharacter::trivial(1)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn twisted_boundary_terms_vanish() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        for k in [2, 4, 6] {
            let p = period_eisenstein_twisted(k, &chi).unwrap();
            assert!(p.even.is_zero());
            assert!(p.odd.coeff(-1).is_zero());
            assert!(p.odd.coeff(k as i32 - 1).is_zero());
        }
        // X^1 at k=4: w- W(chi) 5^{-3} (B_{2,chi}/2)^2 5
        let p = period_eisenstein_twisted(4, &chi).unwrap();
        let w = chi.gauss_sum();
        let want = w.scale(&(rat(-1, 1) * rat(1, 125) * rat(4, 25) * rat(5, 1)));
        assert_eq!(p.odd.coeff(1), OmegaExpr::scalar(want));
    }

    #[test]
    fn two_divisor_sum() {
        let minus = SignCharacter::enumerate(5).unwrap()[1].clone();
        let p = period_eisenstein(4, &minus).unwrap();
        let base = period_eisenstein_twisted(4, &DirichletCharacter::trivial(1)).unwrap().odd;
        for (&e, c) in base.terms() {
            let want = c.scale_rational(&(rat(1, 1) - rat(1, 5) * ipow(5, e)));
            assert_eq!(p.odd.coeff(e), want);
        }
        assert!(period_eisenstein(2, &SignCharacter::trivial(5).unwrap()).is_err());
    }
}
