use super::sign::SignCharacter;
use crate::arith::linalg::{rank, solve};
use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::series::{Poly2, QSeries};

/// One Eisenstein basis vector with its constant terms at the cusps W_M(inf),
/// listed in the same order as the cusp constants of the slice.
#[derive(Clone, Debug)]
pub struct EisBasisElem {
    pub sign: SignCharacter,
    pub series: QSeries<Cyclotomic>,
    pub cusp_constants: Vec<Cyclotomic>,
}

#[derive(Clone, Debug)]
pub struct Extraction {
    /// Polynomial multiplier of each basis vector.
    pub eisenstein: Vec<(SignCharacter, Poly2<Cyclotomic>)>,
    pub remainder: Poly2<QSeries<Cyclotomic>>,
    pub rank: usize,
    /// For rank 1: the normalised eigenform f and the polynomial R with
    /// remainder = R f.
    pub cusp: Option<(Poly2<Cyclotomic>, QSeries<Cyclotomic>)>,
}

/// Split a weight-k slice into an Eisenstein part (fixed by the constant
/// terms at every cusp W_M(inf)) and a cuspidal remainder of rank 0 or 1.
///
/// `cusp_constants` gives, per monomial, the constant terms of the slice at
/// the cusps in the same order as each basis element's `cusp_constants`.
pub fn extract_rank_one_cusp(
    slice: &Poly2<QSeries<Cyclotomic>>,
    cusp_constants: &Poly2<CuspVec>,
    basis: &[EisBasisElem],
) -> Result<Extraction> {
    let ncusps = basis.first().map(|b| b.cusp_constants.len()).unwrap_or(1);
    let a: Vec<Vec<Cyclotomic>> =
        (0..ncusps).map(|m| basis.iter().map(|b| b.cusp_constants[m].clone()).collect()).collect();
    let mut mults: Vec<Poly2<Cyclotomic>> = vec![Poly2::new(); basis.len()];
    let mut remainder = Poly2::new();
    for (&(x, y), s) in slice.terms() {
        let c = cusp_constants.get(x, y).map(|v| v.0.clone()).unwrap_or_else(|| vec![Cyclotomic::zero(); ncusps]);
        let sol = if basis.is_empty() {
            if c.iter().any(|v| !v.is_zero()) {
                return Err(Error::InconsistentEisenstein);
            }
            vec![]
        } else {
            solve(&a, &c).ok_or(Error::InconsistentEisenstein)?
        };
        let mut r = s.clone();
        for (i, xi) in sol.iter().enumerate() {
            if !xi.is_zero() {
                mults[i].add_term(x, y, xi.clone());
                r = r.sub(&basis[i].series.truncate(s.prec()).scale(xi));
            }
        }
        if !r.coeffs()[0].is_zero() {
            return Err(Error::InconsistentEisenstein);
        }
        remainder.add_term(x, y, r);
    }
    let remainder = remainder.pruned();
    let rows: Vec<Vec<Cyclotomic>> = remainder.terms().map(|(_, s)| s.coeffs()[1..].to_vec()).collect();
    let rk = rank(&rows);
    let eisenstein = basis.iter().zip(mults).map(|(b, m)| (b.sign.clone(), m.pruned())).collect();
    if rk > 1 {
        return Err(Error::RankTooLarge { rank: rk });
    }
    let cusp = if rk == 1 {
        let (_, first) = remainder.terms().next().unwrap();
        let a1 = first.coeffs()[1].clone();
        let inv = a1.inv().ok_or_else(|| Error::NotRankOne("first coefficient of the cusp remainder vanishes".into()))?;
        let f = first.scale(&inv);
        let mut r_poly = Poly2::new();
        for (&(x, y), s) in remainder.terms() {
            let c = s.coeffs()[1].clone();
            if s != &f.scale(&c) {
                return Err(Error::NotRankOne(format!("monomial X^{x} Y^{y} is not a multiple of the eigenform")));
            }
            r_poly.add_term(x, y, c);
        }
        Some((r_poly, f))
    } else {
        None
    };
    Ok(Extraction { eisenstein, remainder, rank: rk, cusp })
}

/// Constant terms of one monomial at the cusps W_M(inf).
#[derive(Clone, Debug, PartialEq)]
pub struct CuspVec(pub Vec<Cyclotomic>);

impl crate::series::Algebra for CuspVec {
    fn is_zero_el(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
    fn add_el(&self, o: &Self) -> Self {
        CuspVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    fn sub_el(&self, o: &Self) -> Self {
        CuspVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
    fn mul_el(&self, o: &Self) -> Self {
        CuspVec(self.0.iter().zip(&o.0).map(|(a, b)| a * b).collect())
    }
    fn neg_el(&self) -> Self {
        CuspVec(self.0.iter().map(|a| -a).collect())
    }
    fn scale_rat(&self, q: &crate::arith::Rational) -> Self {
        CuspVec(self.0.iter().map(|a| a.scale(q)).collect())
    }
}
