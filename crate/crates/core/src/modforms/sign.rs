use crate::arith::intmath::{is_squarefree, primes_dividing};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A choice of sign at each prime dividing a square-free level, extended
/// multiplicatively to divisors of the level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignCharacter {
    level: u64,
    signs: BTreeMap<u64, i8>,
}

impl SignCharacter {
    pub fn new(level: u64, signs: BTreeMap<u64, i8>) -> Result<Self> {
        if !is_squarefree(level) {
            return Err(Error::NotSquareFree(level));
        }
        let ps = primes_dividing(level);
        if ps.len() != signs.len() || ps.iter().any(|p| !matches!(signs.get(p), Some(1) | Some(-1))) {
            return Err(Error::Config(format!("need a sign +/-1 for every prime of {level}")));
        }
        Ok(SignCharacter { level, signs })
    }

    pub fn trivial(level: u64) -> Result<Self> {
        Self::new(level, primes_dividing(level).into_iter().map(|p| (p, 1)).collect())
    }

    /// All 2^t sign characters of the level, trivial first.
    pub fn enumerate(level: u64) -> Result<Vec<Self>> {
        if !is_squarefree(level) {
            return Err(Error::NotSquareFree(level));
        }
        let ps = primes_dividing(level);
        Ok((0..1u32 << ps.len())
            .map(|mask| SignCharacter {
                level,
                signs: ps.iter().enumerate().map(|(i, &p)| (p, if mask >> i & 1 == 1 { -1 } else { 1 })).collect(),
            })
            .collect())
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn sign_at(&self, p: u64) -> i8 {
        self.signs[&p]
    }

    /// eps(M) for M dividing the level.
    pub fn eval(&self, m: u64) -> i64 {
        assert!(self.level % m == 0, "{m} does not divide {}", self.level);
        self.signs.iter().filter(|(p, _)| m % **p == 0).map(|(_, &s)| s as i64).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.signs.values().all(|&s| s == 1)
    }

    pub fn times(&self, o: &Self) -> Self {
        assert_eq!(self.level, o.level);
        SignCharacter { level: self.level, signs: self.signs.iter().map(|(p, s)| (*p, s * o.signs[p])).collect() }
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.signs.iter().map(|(p, s)| format!("{p}{}", if *s > 0 { "+" } else { "-" })).collect();
        write!(f, "{}", parts.join(","))
    }
}
