use super::poly::Poly2;
use super::qseries::QSeries;
use crate::arith::Ring;
use crate::error::{Error, Result};
use crate::exec;
use std::collections::BTreeMap;

/// Truncated two-variable Laurent jet
/// `pu/u + pv/v + sum_{r+s <= D} c_{r,s}(q) u^r v^s`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiJet<R> {
    degree: usize,
    prec: usize,
    polar_u: R,
    polar_v: R,
    entries: Vec<QSeries<R>>,
}

fn idx(r: usize, s: usize) -> usize {
    let t = r + s;
    t * (t + 1) / 2 + s
}

impl<R: Ring> BiJet<R> {
    pub fn zero(degree: usize, prec: usize) -> Self {
        let n = idx(0, degree + 1);
        BiJet { degree, prec, polar_u: R::zero(), polar_v: R::zero(), entries: vec![QSeries::zero(prec); n] }
    }

    /// Build from a function giving the (r, s) entry.
    pub fn from_fn(degree: usize, prec: usize, polar: (R, R), f: impl Fn(usize, usize) -> QSeries<R> + Sync + Send) -> Self {
        let cells: Vec<(usize, usize)> = (0..=degree).flat_map(|t| (0..=t).map(move |s| (t - s, s))).collect();
        let entries = exec::map(&cells, |&(r, s)| f(r, s));
        BiJet { degree, prec, polar_u: polar.0, polar_v: polar.1, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn polar(&self) -> (&R, &R) {
        (&self.polar_u, &self.polar_v)
    }

    pub fn entry(&self, r: usize, s: usize) -> &QSeries<R> {
        assert!(r + s <= self.degree);
        &self.entries[idx(r, s)]
    }

    pub fn set_entry(&mut self, r: usize, s: usize, v: QSeries<R>) {
        self.entries[idx(r, s)] = v;
    }

    pub fn truncate(&self, degree: usize, prec: usize) -> Self {
        let degree = degree.min(self.degree);
        let mut out = BiJet::zero(degree, prec.min(self.prec));
        out.polar_u = self.polar_u.clone();
        out.polar_v = self.polar_v.clone();
        for t in 0..=degree {
            for s in 0..=t {
                out.set_entry(t - s, s, self.entry(t - s, s).truncate(prec));
            }
        }
        out
    }

    /// Substitute u = su.coef * X^a Y^b * T and likewise for v.
    pub fn substitute(&self, u: &Substitution, v: &Substitution) -> SubstitutedJet<R> {
        let mut by_t: BTreeMap<i32, Poly2<QSeries<R>>> = BTreeMap::new();
        let pol = |c: &R, s: &Substitution| -> Option<(i32, i32, R)> {
            if c.is_zero() {
                None
            } else {
                let c = if s.negate { c.neg_ref() } else { c.clone() };
                Some((-s.x, -s.y, c))
            }
        };
        let mut polar = Poly2::new();
        for (c, s) in [(&self.polar_u, u), (&self.polar_v, v)] {
            if let Some((a, b, c)) = pol(c, s) {
                polar.add_term(a, b, QSeries::constant(c, self.prec));
            }
        }
        if !polar.is_empty() {
            by_t.insert(-1, polar);
        }
        for t in 0..=self.degree {
            let mut p = Poly2::new();
            for s in 0..=t {
                let r = t - s;
                let e = self.entry(r, s);
                let negate = (u.negate && r % 2 == 1) ^ (v.negate && s % 2 == 1);
                let a = r as i32 * u.x + s as i32 * v.x;
                let b = r as i32 * u.y + s as i32 * v.y;
                p.add_term(a, b, if negate { e.neg() } else { e.clone() });
            }
            by_t.insert(t as i32, p);
        }
        SubstitutedJet { max_t: self.degree as i32, prec: self.prec, by_t }
    }
}

/// Monomial substitution `var = (+/-) X^x Y^y T`.
#[derive(Clone, Copy, Debug)]
pub struct Substitution {
    pub x: i32,
    pub y: i32,
    pub negate: bool,
}

impl<R: Ring + serde::Serialize> BiJet<R> {
    /// {"degree", "prec", "polar": {"u", "v"}, "entries": {"r_s": QSeries}}
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = serde_json::Map::new();
        for t in 0..=self.degree {
            for s in 0..=t {
                entries.insert(format!("{}_{}", t - s, s), serde_json::to_value(self.entry(t - s, s)).unwrap_or_default());
            }
        }
        serde_json::json!({
            "degree": self.degree,
            "prec": self.prec,
            "polar": { "u": self.polar_u, "v": self.polar_v },
            "entries": entries,
        })
    }
}

impl Substitution {
    pub const fn new(x: i32, y: i32, negate: bool) -> Self {
        Substitution { x, y, negate }
    }
}

/// A jet after substitution: polynomials in X, Y indexed by the power of T.
#[derive(Clone, Debug)]
pub struct SubstitutedJet<R> {
    max_t: i32,
    prec: usize,
    by_t: BTreeMap<i32, Poly2<QSeries<R>>>,
}

impl<R: Ring> SubstitutedJet<R> {
    pub fn max_t(&self) -> i32 {
        self.max_t
    }

    pub fn get(&self, t: i32) -> Option<&Poly2<QSeries<R>>> {
        self.by_t.get(&t)
    }

    pub fn min_t(&self) -> i32 {
        *self.by_t.keys().next().unwrap_or(&0)
    }

    /// Product, keeping only the powers of T that are fully determined by
    /// both truncated factors.
    pub fn mul(&self, o: &Self) -> Result<SubstitutedJet<R>> {
        if self.prec != o.prec {
            return Err(Error::RingMismatch(format!("jet precisions differ: {} vs {}", self.prec, o.prec)));
        }
        let max_t = (self.max_t + o.min_t()).min(o.max_t + self.min_t());
        let lo = self.min_t() + o.min_t();
        let ts: Vec<i32> = (lo..=max_t).collect();
        let polys = exec::map(&ts, |&t| {
            let mut acc = Poly2::new();
            for (&t1, p1) in &self.by_t {
                if let Some(p2) = o.by_t.get(&(t - t1)) {
                    acc = acc.add(&p1.mul(p2));
                }
            }
            acc
        });
        let by_t = ts.into_iter().zip(polys).filter(|(_, p)| !p.is_empty()).collect();
        Ok(SubstitutedJet { max_t, prec: self.prec, by_t })
    }

    pub fn into_map(self) -> BTreeMap<i32, Poly2<QSeries<R>>> {
        self.by_t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    #[test]
    fn substitution_signs() {
        let mut j: BiJet<Rational> = BiJet::zero(2, 3);
        j.set_entry(0, 1, QSeries::new(vec![rat(1, 1), rat(0, 1), rat(0, 1)]));
        j.set_entry(1, 1, QSeries::new(vec![rat(2, 1), rat(0, 1), rat(0, 1)]));
        let s = j.substitute(&Substitution::new(0, 0, false), &Substitution::new(1, 1, true));
        assert_eq!(s.get(1).unwrap().get(1, 1).unwrap().coeffs()[0], rat(-1, 1));
        assert_eq!(s.get(2).unwrap().get(1, 1).unwrap().coeffs()[0], rat(-2, 1));
    }
}
