use crate::arith::{Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::modforms::parity_matches;
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisKind {
    /// G_{r,chi}
    G,
    /// H_{r,chi}
    H,
}

/// lim_{tau -> i infinity} (E |_r W_M)(tau) for E = G_{r,chi} or H_{r,chi}.
///
/// G only has a constant term at infinity; H picks one up at W_N through
/// H_{r,chi} |_r W_N = (W(chi)/N^{r/2}) G_{r,chi}.
pub fn cusp_limit(kind: EisKind, r: u32, chi: &DirichletCharacter, m: u64) -> Result<Cyclotomic> {
    let n = chi.modulus();
    if n % m != 0 {
        return Err(Error::NotDivisor(m, n));
    }
    if r % 2 == 1 {
        return Err(Error::BadWeight(r as i64));
    }
    if !parity_matches(r, chi) {
        return Ok(Cyclotomic::zero());
    }
    let base = chi.conj().twisted_bernoulli(r as usize).scale(&(Rational::new(BigInt::from(-1), BigInt::from(2 * r))));
    Ok(match kind {
        EisKind::G if m == 1 => base,
        EisKind::H if m == n => {
            let npow = Rational::from_integer(BigInt::from(n).pow(r / 2));
            (&chi.gauss_sum() * &base).scale(&(Rational::from_integer(1.into()) / npow))
        }
        _ => Cyclotomic::zero(),
    })
}
