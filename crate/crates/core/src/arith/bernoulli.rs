use super::intmath::binomial;
use super::ring::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Mutex;

static CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number B_n with B_1 = -1/2.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        let b = if m == 0 {
            Rational::one()
        } else {
            // sum_{j<=m} C(m+1, j) B_j = 0
            let mut s = Rational::zero();
            for (j, bj) in cache.iter().enumerate() {
                s += Rational::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
            }
            -s / Rational::from_integer(BigInt::from(m + 1))
        };
        cache.push(b);
    }
    cache[n].clone()
}

/// Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j x^(n-j).
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for j in (0..=n).rev() {
        acc += Rational::from_integer(binomial(n as i64, j as i64)) * bernoulli(j) * &xp;
        xp *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(14), rat(7, 6));
    }

    #[test]
    fn polynomial_symmetry() {
        let x = rat(2, 7);
        for n in 0..10 {
            let a = bernoulli_poly(n, &x);
            let b = bernoulli_poly(n, &(rat(1, 1) - &x));
            let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(a, sign * b);
        }
        assert_eq!(bernoulli_poly(1, &rat(1, 1)), rat(1, 2));
    }
}
