use super::sign::SignCharacter;
use crate::arith::{Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub enum LocalKind {
    /// G_{k,chi}
    GChi(DirichletCharacter),
    /// H_{k,chi}
    HChi(DirichletCharacter),
    /// A normalised Hecke eigenform of the given level, described by its
    /// eigenvalue at the prime and, when the prime divides the level, its
    /// Atkin-Lehner sign there.
    Eigenform { level: u64, a_ell: Cyclotomic, eps_ell: i64 },
}

/// numerator(X) / denominator(X), coefficients from X^0 up.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor {
    pub prime: u64,
    pub numerator: Vec<Cyclotomic>,
    pub denominator: Vec<Cyclotomic>,
}

fn poly_mul(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn ipow(l: u64, e: u32) -> Cyclotomic {
    Cyclotomic::from_rational(Rational::from_integer(BigInt::from(l).pow(e)))
}

/// The Euler factor at `ell` of the Dirichlet series attached to `kind`,
/// optionally after raising the level with a sign character.
pub fn local_factor(kind: &LocalKind, ell: u64, k: u32, raise: Option<&SignCharacter>) -> LocalFactor {
    let one = Cyclotomic::one();
    let lin = |c: Cyclotomic| vec![one.clone(), -c];
    let denominator = match kind {
        LocalKind::GChi(chi) => poly_mul(&lin(one.clone()), &lin(&chi.conj().value(ell as i64) * &ipow(ell, k - 1))),
        LocalKind::HChi(chi) => poly_mul(&lin(chi.value(ell as i64)), &lin(ipow(ell, k - 1))),
        LocalKind::Eigenform { level, a_ell, eps_ell } => {
            if level % ell == 0 {
                vec![one.clone(), ipow(ell, k / 2 - 1).scale(&Rational::from_integer(BigInt::from(*eps_ell)))]
            } else {
                vec![one.clone(), -a_ell, ipow(ell, k - 1)]
            }
        }
    };
    let numerator = match raise {
        Some(eps) if eps.level() % ell == 0 => {
            vec![one.clone(), ipow(ell, k / 2).scale(&Rational::from_integer(BigInt::from(eps.eval(ell))))]
        }
        _ => vec![one],
    };
    LocalFactor { prime: ell, numerator, denominator }
}

impl LocalFactor {
    /// Power-series coefficients of X^0 .. X^(n-1).
    pub fn expand(&self, n: usize) -> Vec<Cyclotomic> {
        let mut out: Vec<Cyclotomic> = Vec::with_capacity(n);
        let d0inv = self.denominator[0].inv().expect("constant term of denominator is 1");
        for j in 0..n {
            let mut v = self.numerator.get(j).cloned().unwrap_or_else(Cyclotomic::zero);
            for (i, d) in self.denominator.iter().enumerate().skip(1) {
                if i <= j {
                    v -= &(d * &out[j - i]);
                }
            }
            out.push(&v * &d0inv);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modforms::{eisenstein_g, eisenstein_g_chi, eisenstein_h_chi, level_raise};

    fn check_against(series: &[Cyclotomic], lf: &LocalFactor) {
        let ell = lf.prime as usize;
        let mut pw = 1;
        let mut j = 0;
        let exp = lf.expand(8);
        while pw < series.len() {
            assert_eq!(series[pw], exp[j], "ell={ell} j={j}");
            pw *= ell;
            j += 1;
        }
    }

    #[test]
    fn twisted_families_match_q_expansions() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        for k in [2u32, 4] {
            let g = eisenstein_g_chi(k, &chi, 130);
            let h = eisenstein_h_chi(k, &chi, 130);
            for ell in [2u64, 3, 5, 11] {
                check_against(g.coeffs(), &local_factor(&LocalKind::GChi(chi.clone()), ell, k, None));
                check_against(h.coeffs(), &local_factor(&LocalKind::HChi(chi.clone()), ell, k, None));
            }
        }
    }

    #[test]
    fn closed_form_when_character_is_one_at_ell() {
        // coefficient of X^n is (l^{(k-1)(n+1)} - 1)/(l^{k-1} - 1) when chi(l) = 1
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let lf = local_factor(&LocalKind::GChi(chi), 11, 4, None);
        for (n, c) in lf.expand(4).iter().enumerate() {
            let want = (11i64.pow(3 * (n as u32 + 1)) - 1) / (11i64.pow(3) - 1);
            assert_eq!(c, &Cyclotomic::from_int(want));
        }
    }

    #[test]
    fn raised_level_factor() {
        let eps = SignCharacter::enumerate(5).unwrap()[1].clone();
        let f = level_raise(&eisenstein_g(4, 130), 4, &eps);
        let kind = LocalKind::Eigenform { level: 1, a_ell: Cyclotomic::from_int(1 + 125), eps_ell: 0 };
        check_against(f.coeffs(), &local_factor(&kind, 5, 4, Some(&eps)));
        let kind2 = LocalKind::Eigenform { level: 1, a_ell: Cyclotomic::from_int(1 + 8), eps_ell: 0 };
        check_against(f.coeffs(), &local_factor(&kind2, 2, 4, Some(&eps)));
    }
}
