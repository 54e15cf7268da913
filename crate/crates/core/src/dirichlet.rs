//! Dirichlet characters with cyclotomic values.

use crate::arith::intmath::{factor, gcd, lcm};
use crate::arith::{bernoulli_poly, rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::numeric::special::hurwitz_zeta;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    order: u32,
    /// chi(a) = zeta_order^exps[a], or None when gcd(a, N) > 1.
    exps: Vec<Option<u32>>,
}

#[derive(Serialize)]
pub struct CharacterRecord {
    pub modulus: u64,
    pub values: Vec<Cyclotomic>,
    pub even: bool,
    pub primitive: bool,
}

/// Cyclic components of (Z/N)^*, as (generator mod N, order).
fn unit_generators(n: u64) -> Vec<(u64, u64)> {
    let mut gens = Vec::new();
    for (p, e) in factor(n) {
        let q = p.pow(e);
        let rest = n / q;
        // lift a generator mod q to N, congruent to 1 mod N/q
        let lift = |g: u64| -> u64 {
            (0..q).map(|t| 1 + t * rest).find(|x| x % q == g % q).unwrap() % n.max(1)
        };
        if p == 2 {
            if e == 2 {
                gens.push((lift(3), 2));
            } else if e >= 3 {
                gens.push((lift(q - 1), 2));
                gens.push((lift(5), q / 4));
            }
        } else {
            let phi = q / p * (p - 1);
            let g = (2..q)
                .find(|&g| {
                    let mut x = 1u64;
                    for k in 1..=phi {
                        x = x * g % q;
                        if x == 1 {
                            return k == phi;
                        }
                    }
                    false
                })
                .unwrap();
            gens.push((lift(g), phi));
        }
    }
    gens
}

impl DirichletCharacter {
    pub fn trivial(n: u64) -> Self {
        let exps = (0..n).map(|a| if gcd(a, n) == 1 { Some(0) } else { None }).collect();
        DirichletCharacter { modulus: n, order: 1, exps }
    }

    /// All characters mod N, ordered by character order and then by the
    /// tuple of value phases.
    pub fn enumerate(n: u64) -> Vec<Self> {
        assert!(n >= 1);
        if n == 1 {
            return vec![Self::trivial(1)];
        }
        let gens = unit_generators(n);
        let big_l = gens.iter().fold(1, |acc, &(_, o)| lcm(acc, o));
        // discrete logs of every unit
        let mut logs: Vec<Option<Vec<u64>>> = vec![None; n as usize];
        let total: u64 = gens.iter().map(|g| g.1).product();
        for idx in 0..total {
            let mut rem = idx;
            let mut js = Vec::with_capacity(gens.len());
            let mut a = 1u64;
            for &(g, o) in &gens {
                let j = rem % o;
                rem /= o;
                js.push(j);
                for _ in 0..j {
                    a = a * g % n;
                }
            }
            logs[a as usize] = Some(js);
        }
        let mut out = Vec::new();
        for idx in 0..total {
            let mut rem = idx;
            let cs: Vec<u64> = gens
                .iter()
                .map(|&(_, o)| {
                    let c = rem % o;
                    rem /= o;
                    c
                })
                .collect();
            let ord = gens.iter().zip(&cs).fold(1, |acc, (&(_, o), &c)| lcm(acc, o / gcd(c, o)));
            let exps = logs
                .iter()
                .map(|l| {
                    l.as_ref().map(|js| {
                        let e: u64 = js
                            .iter()
                            .zip(&cs)
                            .zip(&gens)
                            .map(|((j, c), (_, o))| j * c * (big_l / o))
                            .sum::<u64>()
                            % big_l;
                        (e / (big_l / ord)) as u32
                    })
                })
                .collect();
            out.push(DirichletCharacter { modulus: n, order: ord as u32, exps });
        }
        let key = |c: &DirichletCharacter| {
            let scale = big_l / c.order as u64;
            let ph: Vec<u64> = c.exps.iter().map(|e| e.map_or(0, |e| e as u64 * scale)).collect();
            (c.order, ph)
        };
        out.sort_by_key(key);
        out
    }

    /// The `index`-th character in `enumerate` order.
    pub fn by_index(n: u64, index: usize) -> Result<Self> {
        Self::enumerate(n)
            .into_iter()
            .nth(index)
            .ok_or_else(|| Error::InvalidCharacter(format!("no character with index {index} mod {n}")))
    }

    /// Even primitive characters mod N, in enumeration order.
    pub fn even_primitive(n: u64) -> Vec<Self> {
        Self::enumerate(n).into_iter().filter(|c| c.is_even() && c.is_primitive()).collect()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn exp_at(&self, a: i64) -> Option<u32> {
        self.exps[a.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn value(&self, a: i64) -> Cyclotomic {
        match self.exp_at(a) {
            Some(e) => Cyclotomic::root_of_unity(self.order, e as i64),
            None => Cyclotomic::zero(),
        }
    }

    pub fn value_complex(&self, a: i64) -> Complex64 {
        match self.exp_at(a) {
            Some(e) => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / self.order as f64),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn values(&self) -> Vec<Cyclotomic> {
        (0..self.modulus as i64).map(|a| self.value(a)).collect()
    }

    pub fn is_even(&self) -> bool {
        self.exp_at(-1) == Some(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// No proper divisor d of N has chi trivial on units congruent to 1 mod d.
    pub fn is_primitive(&self) -> bool {
        let n = self.modulus;
        for (p, _) in factor(n) {
            let d = n / p;
            let induced = (0..n)
                .filter(|&a| gcd(a, n) == 1 && a % d == 1 % d)
                .all(|a| self.exps[a as usize] == Some(0));
            if induced {
                return false;
            }
        }
        true
    }

    pub fn conj(&self) -> Self {
        DirichletCharacter {
            modulus: self.modulus,
            order: self.order,
            exps: self.exps.iter().map(|e| e.map(|e| (self.order - e) % self.order)).collect(),
        }
    }

    /// W(chi) = sum_h chi(h) zeta_N^h.
    pub fn gauss_sum(&self) -> Cyclotomic {
        let n = self.modulus as u32;
        let mut acc = Cyclotomic::zero();
        for h in 0..n as i64 {
            let c = self.value(h);
            if !c.is_zero() {
                acc += &(&c * &Cyclotomic::root_of_unity(n, h));
            }
        }
        acc
    }

    /// B_{n,chi} = N^{n-1} sum_{h mod N} chi(h) B_n(h/N).
    pub fn twisted_bernoulli(&self, n: usize) -> Cyclotomic {
        let nn = self.modulus as i64;
        let mut acc = Cyclotomic::zero();
        for h in 0..nn {
            let c = self.value(h);
            if c.is_zero() {
                continue;
            }
            let b = bernoulli_poly(n, &rat(h, nn));
            acc += &c.scale(&b);
        }
        let npow = Rational::from_integer(BigInt::from(nn)).pow(n as i32 - 1);
        acc.scale(&npow)
    }

    /// L(chi, 1-k) = -B_{k,chi}/k for k of the same parity as chi.
    pub fn l_value_negative(&self, k: usize) -> Result<Cyclotomic> {
        if k == 0 || self.is_even() != (k % 2 == 0) {
            return Err(Error::ParityMismatch { weight: k as i64 });
        }
        Ok(self.twisted_bernoulli(k).scale(&(-Rational::one() / Rational::from_integer(BigInt::from(k)))))
    }

    /// L(chi, s) = N^{-s} sum_a chi(a) zeta(s, a/N), for Re(s) > 1.
    pub fn l_value_numeric(&self, s: Complex64) -> Result<Complex64> {
        if s.re <= 1.0 {
            return Err(Error::NonConvergent(s.re));
        }
        let n = self.modulus as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for a in 1..=self.modulus as i64 {
            let c = self.value_complex(a);
            if c.norm() > 0.0 {
                acc += c * hurwitz_zeta(s, a as f64 / n);
            }
        }
        Ok(acc * (-s * n.ln()).exp())
    }

    pub fn record(&self) -> CharacterRecord {
        CharacterRecord {
            modulus: self.modulus,
            values: self.values(),
            even: self.is_even(),
            primitive: self.is_primitive(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_to_f64;

    #[test]
    fn quadratic_mod_five_is_index_one() {
        let chars = DirichletCharacter::enumerate(5);
        assert_eq!(chars.len(), 4);
        assert!(chars[0].is_trivial());
        let chi = &chars[1];
        assert_eq!(chi.order(), 2);
        let vals: Vec<i64> = (0..5).map(|a| if chi.value(a).is_zero() { 0 } else if chi.value(a) == Cyclotomic::one() { 1 } else { -1 }).collect();
        assert_eq!(vals, vec![0, 1, -1, -1, 1]);
        assert!(chi.is_even() && chi.is_primitive());
        assert_eq!(DirichletCharacter::even_primitive(5).len(), 1);
    }

    #[test]
    fn gauss_sum_norm() {
        for n in [5u64, 7, 8, 12, 13, 15] {
            for chi in DirichletCharacter::enumerate(n).into_iter().filter(|c| c.is_primitive()) {
                let w = chi.gauss_sum();
                let wb = chi.conj().gauss_sum();
                let sign = if chi.is_even() { 1 } else { -1 };
                assert_eq!(&w * &wb, Cyclotomic::from_int(sign * n as i64), "n={n}");
            }
        }
    }

    #[test]
    fn twisted_bernoulli_values() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        assert_eq!(chi.twisted_bernoulli(2), Cyclotomic::from_rational(rat(4, 5)));
        assert!(chi.twisted_bernoulli(0).is_zero());
        assert!(chi.twisted_bernoulli(3).is_zero());
        let one = DirichletCharacter::trivial(1);
        assert_eq!(one.twisted_bernoulli(12), Cyclotomic::from_rational(rat(-691, 2730)));
        assert_eq!(one.twisted_bernoulli(1), Cyclotomic::from_rational(rat(-1, 2)));
    }

    #[test]
    fn primitivity() {
        let prim: Vec<bool> = DirichletCharacter::enumerate(12).iter().map(|c| c.is_primitive()).collect();
        assert_eq!(prim.iter().filter(|&&p| p).count(), 1);
        assert_eq!(DirichletCharacter::enumerate(8).iter().filter(|c| c.is_primitive()).count(), 2);
        assert_eq!(DirichletCharacter::enumerate(13).iter().filter(|c| c.is_primitive()).count(), 11);
    }

    #[test]
    fn zeta_two() {
        let z = DirichletCharacter::trivial(1).l_value_numeric(Complex64::new(2.0, 0.0)).unwrap();
        assert!((z.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let l = chi.l_value_negative(2).unwrap();
        assert!((rat_to_f64(&l.to_rational().unwrap()) + 0.4).abs() < 1e-15);
        assert!(chi.l_value_negative(3).is_err());
        assert!(chi.l_value_numeric(Complex64::new(1.0, 0.0)).is_err());
    }
}
