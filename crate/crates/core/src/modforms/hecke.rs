use crate::arith::intmath::gcd;
use crate::arith::{Rational, Ring};
use crate::series::QSeries;
use num_bigint::BigInt;
use serde::Serialize;

/// T_p on weight k, level N. The output is known to floor(P/p) coefficients.
pub fn hecke_tp<R: Ring>(f: &QSeries<R>, k: u32, level: u64, p: u64) -> QSeries<R> {
    let p = p as usize;
    let out_prec = f.prec() / p;
    let pk = Rational::from_integer(BigInt::from(p).pow(k - 1));
    let coprime = level % p as u64 != 0;
    QSeries::from_fn(out_prec, |n| {
        let mut v = f.coeffs()[n * p].clone();
        if coprime && n % p == 0 {
            v = v.add_ref(&f.coeffs()[n / p].scale_rational(&pk));
        }
        v
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HeckeCheck {
    pub prime: u64,
    pub eigenvalue: String,
    pub checked_through: usize,
    pub pass: bool,
}

/// Check T_p f = a_p f on all known coefficients.
pub fn is_hecke_eigen<R: Ring + std::fmt::Display>(f: &QSeries<R>, k: u32, level: u64, p: u64) -> HeckeCheck {
    let t = hecke_tp(f, k, level, p);
    let ap = f.coeffs()[p as usize].clone();
    let scaled = f.truncate(t.prec()).scale(&ap);
    HeckeCheck { prime: p, eigenvalue: ap.to_string(), checked_through: t.prec(), pass: t == scaled }
}

/// Pairs (m, n), coprime with mn < P, where a(mn) != a(m) a(n).
pub fn multiplicativity_defects<R: Ring>(f: &QSeries<R>) -> Vec<(usize, usize)> {
    let p = f.prec();
    let a = f.coeffs();
    let mut bad = Vec::new();
    for m in 2..p {
        for n in m + 1..p {
            if m * n >= p {
                break;
            }
            if gcd(m as u64, n as u64) == 1 && a[m * n] != a[m].mul_ref(&a[n]) {
                bad.push((m, n));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclotomic;
    use crate::modforms::eisenstein_g;

    #[test]
    fn g4_is_eigen() {
        let g = eisenstein_g(4, 40);
        for p in [2, 3, 5] {
            let c = is_hecke_eigen(&g, 4, 1, p);
            assert!(c.pass, "T_{p}");
            assert_eq!(c.eigenvalue, Cyclotomic::from_int(1 + (p as i64).pow(3)).to_string());
        }
        assert_eq!(hecke_tp(&g, 4, 1, 3).prec(), 13);
        assert!(multiplicativity_defects(&g).is_empty());
    }
}
