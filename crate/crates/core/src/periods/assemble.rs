//! From pairs of period polynomials to the two-variable polynomials R.

use super::eisenstein::{period_eisenstein_parts, period_eisenstein_twisted};
use super::PeriodPoly;
use crate::arith::intmath::factorial;
use crate::arith::{Cyclotomic, OmegaExpr, Rational, Ring};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::modforms::{eisenstein_selfnorm_parts, SignCharacter};
use crate::series::{LaurentPoly, Poly2};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

/// r_f^ev(Y/N) r_{f_chi}^od(X/N) + r_{f_chi}^ev(Y/N) r_f^od(X/N)
pub fn paired_numerator<C: Ring>(n: u64, f: &PeriodPoly<C>, fchi: &PeriodPoly<C>) -> Poly2<C> {
    let s = |p: &LaurentPoly<C>| p.rescale_arg(n as i64);
    let a = s(&fchi.odd).outer(&s(&f.even));
    let b = s(&f.odd).outer(&s(&fchi.even));
    a.add(&b)
}

/// R = R^(X,Y) + R^(Y,X) with R^ = (C^(X,Y) + (XY)^{k-2} C^(-1/X,-1/Y)) / 2.
pub fn c_hat_to_r<C: Ring>(c_hat: &Poly2<C>, k: u32) -> Poly2<C> {
    let w = k as i32 - 2;
    let flipped = c_hat.remap(|a, b| (w - a, w - b, (a + b).rem_euclid(2) == 1));
    let r_hat = c_hat.add(&flipped).scale_rat(&Rational::new(1.into(), 2.into()));
    r_hat.add(&r_hat.swap_xy()).pruned()
}

/// N^{1-k} W(chi) 2 (2i)^{k-3}, the algebraic part of the denominator of C^.
fn denominator_constant(k: u32, chi: &DirichletCharacter) -> Cyclotomic {
    let e = k as i32 - 3;
    let i_pow = Cyclotomic::root_of_unity(4, e.rem_euclid(4) as i64);
    let q = Rational::from_integer(BigInt::from(chi.modulus())).pow(1 - k as i32)
        * Rational::from_integer(BigInt::from(2)).pow(e + 1);
    (&chi.gauss_sum() * &i_pow).scale(&q)
}

/// Numeric R_{f_chi} for a cusp form from its periods r_0..r_{k-2}, those of
/// the twist, and a value for <f, f>. With `norm = 1` the result is
/// <f, f> R_{f_chi}.
pub fn assemble_r(k: u32, chi: &DirichletCharacter, rf: &[Complex64], rfchi: &[Complex64], norm: Complex64) -> Result<Poly2<Complex64>> {
    let len = k as usize - 1;
    if rf.len() != len || rfchi.len() != len {
        return Err(Error::MissingPeriods(format!("need {len} values of r_n")));
    }
    if norm.is_zero() {
        return Err(Error::DivisionByZero("Petersson norm".into()));
    }
    let f = PeriodPoly::from_values(k, rf);
    let fx = PeriodPoly::from_values(k, rfchi);
    let num = paired_numerator(chi.modulus(), &f, &fx);
    let den = denominator_constant(k, chi).to_complex() * norm;
    let c_hat = num.map(|c| c / den);
    Ok(c_hat_to_r(&c_hat, k))
}

/// Exact R of the twisted level-N Eisenstein series with signs eps.
#[derive(Clone, Debug)]
pub struct EisensteinR {
    pub sign: SignCharacter,
    pub r: Poly2<Cyclotomic>,
}

/// R_{(G^eps)_chi}, exact and free of w+. The factor shared by the even
/// periods and the Petersson norm is cancelled symbolically, which keeps the
/// weight-2 signs where it vanishes well defined.
pub fn eisenstein_r(k: u32, eps: &SignCharacter, chi: &DirichletCharacter) -> Result<EisensteinR> {
    if eps.level() != chi.modulus() {
        return Err(Error::Config(format!("sign level {} differs from conductor {}", eps.level(), chi.modulus())));
    }
    let (common, f) = period_eisenstein_parts(k, eps)?;
    let fchi = period_eisenstein_twisted(k, chi)?;
    let (common_norm, rest) = eisenstein_selfnorm_parts(k, eps);
    debug_assert_eq!(common, common_norm);
    let n = chi.modulus();
    let s = |p: &LaurentPoly<OmegaExpr>| p.rescale_arg(n as i64);
    // first product carries the common factor through f.even, the second
    // through the norm; the latter only survives at N = 1 where it is 1
    let mut num = s(&fchi.odd).outer(&s(&f.even));
    let second = s(&f.odd).outer(&s(&fchi.even));
    if !second.is_zero() {
        if common.is_zero() {
            return Err(Error::DivisionByZero("shared even-period factor".into()));
        }
        num = num.add(&second.scale_rat(&(Rational::from_integer(1.into()) / &common)));
    }
    let den = rest.mul_ref(&OmegaExpr::scalar(denominator_constant(k, chi)));
    let mut c_hat = Poly2::new();
    for (&(a, b), c) in num.terms() {
        let q = c.div_monomial(&den).ok_or_else(|| Error::DivisionByZero("Eisenstein self-norm".into()))?;
        c_hat.add_term(a, b, q);
    }
    let r = c_hat_to_r(&c_hat, k);
    let mut out = Poly2::new();
    for (&(a, b), c) in r.terms() {
        let v = c.as_scalar().ok_or(Error::InconsistentEisenstein)?;
        out.add_term(a, b, v);
    }
    Ok(EisensteinR { sign: eps.clone(), r: out.pruned() })
}

/// Eisenstein part of the weight-k coefficient of the generating function:
/// the multiplier R_{(G^eps)_chi}/(k-2)! of every admissible basis vector.
pub fn generating_c_eisenstein(k: u32, chi: &DirichletCharacter) -> Result<Vec<EisensteinR>> {
    let inv = Rational::new(1.into(), factorial(k as u64 - 2));
    SignCharacter::enumerate(chi.modulus())?
        .into_iter()
        .filter(|e| !(k == 2 && e.is_trivial()))
        .map(|e| {
            let mut r = eisenstein_r(k, &e, chi)?;
            r.r = r.r.scale_rat(&inv);
            Ok(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn symmetric_by_construction() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        for k in [2, 4, 6] {
            for e in generating_c_eisenstein(k, &chi).unwrap() {
                assert_eq!(e.r, e.r.swap_xy());
            }
        }
    }

    #[test]
    fn level_one_flip_invariant() {
        // at N = 1 the flip leaves C^ unchanged, so R^ = C^
        let one = DirichletCharacter::trivial(1);
        let f = period_eisenstein_twisted(8, &one).unwrap();
        let num = paired_numerator(1, &f, &f);
        let w = 6;
        let flipped = num.remap(|a, b| (w - a, w - b, (a + b).rem_euclid(2) == 1));
        assert_eq!(num, flipped);
    }

    #[test]
    fn level_five_weight_four_multipliers() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let c = generating_c_eisenstein(4, &chi).unwrap();
        assert_eq!(c.len(), 2);
        for e in &c {
            assert!(e.r.terms().all(|(_, v)| v.is_rational()));
        }
        let _ = rat(0, 1);
    }
}
