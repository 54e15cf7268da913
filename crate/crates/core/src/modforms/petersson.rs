use super::sign::SignCharacter;
use crate::arith::intmath::primes_dividing;
use crate::arith::{bernoulli, Cyclotomic, OmegaExpr, Rational, Ring};
use num_bigint::BigInt;

fn rpow(p: u64, e: i32) -> Rational {
    Rational::from_integer(BigInt::from(p)).pow(e)
}

/// <f_raised, f_raised> / <f, f> = prod_{p | N} 2 (p + eps(p) a_f(p) p^{1-k/2} + 1)
/// for an eigenform f of level 1 raised to level N with signs eps.
pub fn petersson_ratio(a_f: impl Fn(u64) -> Cyclotomic, k: u32, eps: &SignCharacter) -> Cyclotomic {
    let mut acc = Cyclotomic::one();
    for p in primes_dividing(eps.level()) {
        let s = Rational::from_integer(BigInt::from(eps.eval(p))) * rpow(p, 1 - k as i32 / 2);
        let term = &a_f(p).scale(&s) + &Cyclotomic::from_int(p as i64 + 1);
        acc = &acc * &term.scale(&Rational::from_integer(2.into()));
    }
    acc
}

/// <G_k, G_k> = -(i^{k-1} / 2^{k-1}) (B_k / k) w
pub fn g_selfnorm(k: u32) -> OmegaExpr {
    let c = bernoulli(k as usize) / Rational::from_integer(BigInt::from(k)) / rpow(2, k as i32 - 1);
    let ik = Cyclotomic::root_of_unity(4, k as i64 - 1);
    OmegaExpr::monomial((-ik).scale(&c), 1)
}

/// The self-norm of the raised Eisenstein series, split as
/// `common * rest` with common = prod_{p|N} (1 + eps(p) p^{1-k/2}).
///
/// The common factor also multiplies the even period polynomial, and at
/// weight 2 it can vanish; callers cancel it before dividing.
pub fn eisenstein_selfnorm_parts(k: u32, eps: &SignCharacter) -> (Rational, OmegaExpr) {
    let ps = primes_dividing(eps.level());
    let mut common = Rational::from_integer(1.into());
    let mut rest = Rational::from_integer(BigInt::from(2).pow(ps.len() as u32));
    for p in ps {
        let e = Rational::from_integer(BigInt::from(eps.eval(p)));
        common *= Rational::from_integer(1.into()) + &e * rpow(p, 1 - k as i32 / 2);
        rest *= Rational::from_integer(1.into()) + &e * rpow(p, k as i32 / 2);
    }
    (common, g_selfnorm(k).mul_ref(&OmegaExpr::from_rational(&rest)))
}

pub fn eisenstein_selfnorm(k: u32, eps: &SignCharacter) -> OmegaExpr {
    let (c, r) = eisenstein_selfnorm_parts(k, eps);
    r.mul_ref(&OmegaExpr::from_rational(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn ratio_for_g4_at_five() {
        let minus = SignCharacter::enumerate(5).unwrap()[1].clone();
        let r = petersson_ratio(|p| Cyclotomic::from_int(1 + (p as i64).pow(3)), 4, &minus);
        assert_eq!(r, Cyclotomic::from_rational(rat(-192, 5)));
        let n = eisenstein_selfnorm(4, &minus);
        let base = g_selfnorm(4);
        assert_eq!(n, base.mul_ref(&OmegaExpr::from_rational(&rat(-192, 5))));
    }

    #[test]
    fn weight_two_common_factor_vanishes() {
        let minus = SignCharacter::enumerate(5).unwrap()[1].clone();
        let (c, _) = eisenstein_selfnorm_parts(2, &minus);
        assert_eq!(c, rat(0, 1));
    }
}
