use crate::arith::intmath::factorial;
use crate::arith::{bernoulli, Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use crate::modforms::{eisenstein_g_chi, eisenstein_h_chi};
use crate::series::{BiJet, QSeries};
use num_bigint::BigInt;
use std::collections::HashMap;

fn inv_fact2(r: usize, s: usize) -> Rational {
    Rational::new(BigInt::from(1), factorial(r as u64) * factorial(s as u64))
}

/// Jet of F^chi from the Eisenstein side: the (r, s) entry with r + s odd is
/// -theta^min(r,s) (G_{k,conj chi} + H_{k,chi}) / (r! s!), k = |r - s| + 1.
pub fn kron_laurent(chi: &DirichletCharacter, prec: usize, degree: usize) -> BiJet<Cyclotomic> {
    let cb = chi.conj();
    let mut fam: HashMap<usize, QSeries<Cyclotomic>> = HashMap::new();
    for k in (2..=degree + 1).step_by(2) {
        let s = eisenstein_g_chi(k as u32, &cb, prec).add(&eisenstein_h_chi(k as u32, chi, prec));
        fam.insert(k, s);
    }
    let c0 = chi.value(0);
    BiJet::from_fn(degree, prec, (c0.clone(), c0), |r, s| {
        if (r + s) % 2 == 0 {
            return QSeries::zero(prec);
        }
        let k = r.abs_diff(s) + 1;
        match fam.get(&k) {
            Some(base) => base.theta(r.min(s) as u32).scale_rational(&(-inv_fact2(r, s))),
            None => QSeries::zero(prec),
        }
    })
}

/// Jet of F^chi read off the Fourier expansion: the q^0 terms come from the
/// generating function of twisted Bernoulli numbers and the q^n terms from
/// -sum_{d e = n} (chi(d) + chi(e)) sinh(d u + e v).
pub fn kron_fourier(chi: &DirichletCharacter, prec: usize, degree: usize) -> BiJet<Cyclotomic> {
    let n = chi.modulus() as i64;
    let c0 = chi.value(0);
    let vals: Vec<Cyclotomic> = (0..prec).map(|a| chi.value(a as i64)).collect();
    // u^{j-1} coefficient of the q^0 part of each single-variable piece
    let constant = |j: usize| -> Cyclotomic {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let npow = Rational::from_integer(BigInt::from(n)).pow(j as i32 - 1);
        let extra = c0.scale(&(bernoulli(j) * npow * Rational::from_integer(sign.into())));
        (&chi.twisted_bernoulli(j) + &extra).scale(&Rational::new(1.into(), factorial(j as u64) * 2))
    };
    let polar = constant(0);
    BiJet::from_fn(degree, prec, (polar.clone(), polar), |r, s| {
        if (r + s) % 2 == 0 {
            return QSeries::zero(prec);
        }
        let mut coeffs = vec![Cyclotomic::zero(); prec];
        if s == 0 {
            coeffs[0] = constant(r + 1);
        } else if r == 0 {
            coeffs[0] = constant(s + 1);
        }
        let scale = -inv_fact2(r, s);
        for d in 1..prec {
            for e in 1..=(prec - 1) / d {
                let w = &vals[d % n as usize] + &vals[e % n as usize];
                if w.is_zero() {
                    continue;
                }
                let mono = Rational::from_integer(BigInt::from(d).pow(r as u32) * BigInt::from(e).pow(s as u32));
                coeffs[d * e] += &w.scale(&(mono * &scale));
            }
        }
        QSeries::new(coeffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn routes_agree_small() {
        for (n, idx) in [(1u64, 0usize), (5, 1)] {
            let chi = DirichletCharacter::by_index(n, idx).unwrap();
            assert_eq!(kron_laurent(&chi, 8, 5), kron_fourier(&chi, 8, 5), "N={n}");
        }
    }

    #[test]
    fn level_one_low_terms() {
        // F(u, v) = 1/u + 1/v - 2 G_2 (u + v) + ...
        let one = DirichletCharacter::trivial(1);
        let j = kron_laurent(&one, 3, 2);
        assert_eq!(j.polar().0, &Cyclotomic::one());
        assert_eq!(j.entry(1, 0).coeffs()[0], Cyclotomic::from_rational(rat(1, 12)));
        assert_eq!(j.entry(1, 0).coeffs()[1], Cyclotomic::from_int(-2));
    }
}
