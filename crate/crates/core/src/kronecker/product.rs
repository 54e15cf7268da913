use super::bracket::{g_coefficient, g_coefficient_convolution, Families};
use super::jet::kron_laurent;
use crate::arith::intmath::factorial;
use crate::arith::{Cyclotomic, Rational};
use crate::modforms::{cusp_limit, CuspVec, EisKind};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::exec;
use crate::series::{Poly2, QSeries, Substitution, TriGen};
use std::collections::BTreeMap;

/// (X^{k1-1} + Y^{k1-1}) (1 - (XY)^{k2-1}) (XY)^m
pub fn slice_poly(k1: u32, k2: u32, m: i32) -> Poly2<Cyclotomic> {
    let a = k1 as i32 - 1;
    let b = k2 as i32 - 1;
    let one = Cyclotomic::one();
    let mut p = Poly2::new();
    for (x, y) in [(a, 0), (0, a)] {
        p.add_term(x + m, y + m, one.clone());
        p.add_term(x + b + m, y + b + m, -&one);
    }
    p
}

/// (X + Y)(XY - 1) / (X^2 Y^2)
pub fn principal_poly() -> Poly2<Cyclotomic> {
    let one = Cyclotomic::one();
    let mut p = Poly2::new();
    p.add_term(0, -1, one.clone());
    p.add_term(-1, 0, one.clone());
    p.add_term(-1, -2, -&one);
    p.add_term(-2, -1, -&one);
    p
}

fn triples(kmax: u32) -> Vec<(u32, u32, i32)> {
    let mut out = Vec::new();
    for k1 in (2..=kmax + 2).step_by(2) {
        for k2 in (2..=kmax + 2).step_by(2) {
            for m in -1..=(kmax as i32) {
                let k = k1 as i32 + k2 as i32 + 2 * m;
                if (2..=kmax as i32).contains(&k) {
                    out.push((k1, k2, m));
                }
            }
        }
    }
    out
}

/// F^chi(XT, YT) F^{conj chi}(T, -XYT) up to T^{kmax-2}, assembled from the
/// bracket closed form g_{k1,k2,m}. With `check` the convolution route is
/// evaluated as well and any disagreement is an error.
pub fn product_b(chi: &DirichletCharacter, kmax: u32, prec: usize, check: bool) -> Result<TriGen<Cyclotomic>> {
    let fam = Families::new(chi, kmax + 2, prec);
    let ts = triples(kmax);
    let gs = exec::map(&ts, |&(k1, k2, m)| {
        let g = g_coefficient(&fam, k1, k2, m);
        if check && g != g_coefficient_convolution(&fam, k1, k2, m) {
            return Err(Error::RouteMismatch(format!("g_{{{k1},{k2},{m}}}: bracket vs convolution")));
        }
        Ok(g)
    });
    let mut slices: BTreeMap<i32, Poly2<QSeries<Cyclotomic>>> = BTreeMap::new();
    for k in (2..=kmax as i32).step_by(2) {
        slices.insert(k, Poly2::new());
    }
    for (&(k1, k2, m), g) in ts.iter().zip(gs) {
        let g = g?;
        if g.is_zero() {
            continue;
        }
        let k = k1 as i32 + k2 as i32 + 2 * m;
        let s = slices.get_mut(&k).unwrap();
        *s = s.add(&Poly2::from_poly_series(&slice_poly(k1, k2, m), &g));
    }
    let slices = slices.into_iter().map(|(k, p)| (k, p.pruned())).collect();
    let c0 = chi.value(0);
    Ok(TriGen { principal: (!c0.is_zero()).then_some(c0), slices })
}

/// The same product computed by substituting and multiplying the raw jets.
pub fn product_b_from_jets(chi: &DirichletCharacter, kmax: u32, prec: usize) -> Result<TriGen<Cyclotomic>> {
    let degree = kmax as usize;
    let f1 = kron_laurent(chi, prec, degree).substitute(&Substitution::new(1, 0, false), &Substitution::new(0, 1, false));
    let f2 = kron_laurent(&chi.conj(), prec, degree)
        .substitute(&Substitution::new(0, 0, false), &Substitution::new(1, 1, true));
    let prod = f1.mul(&f2)?;
    let mut out = TriGen::new();
    for (t, p) in prod.into_map() {
        let p = p.pruned();
        if t == -2 {
            let c0 = chi.value(0);
            let want = Poly2::from_poly_series(&principal_poly(), &QSeries::constant(c0.clone(), prec)).pruned();
            if p != want {
                return Err(Error::RouteMismatch("principal part of the jet product".into()));
            }
            out.principal = (!c0.is_zero()).then_some(c0);
        } else if t % 2 != 0 {
            if !p.is_zero() {
                return Err(Error::RouteMismatch(format!("odd power T^{t} survives in the jet product")));
            }
        } else if t + 2 <= kmax as i32 {
            out.slices.insert(t + 2, p);
        }
    }
    for k in (2..=kmax as i32).step_by(2) {
        out.slices.entry(k).or_default();
    }
    Ok(out)
}

impl TriGen<Cyclotomic> {
    /// Exact comparison of the weight slices up to `kmax` and the principal part.
    pub fn agrees_with(&self, o: &Self, kmax: i32) -> bool {
        if self.principal != o.principal {
            return false;
        }
        (2..=kmax).step_by(2).all(|k| {
            let a = self.slices.get(&k).cloned().unwrap_or_default();
            let b = o.slices.get(&k).cloned().unwrap_or_default();
            a.sub(&b).is_zero()
        })
    }
}

/// Constant term at W_M(inf) of the jet coefficient g_{k,m} of F^chi (or of
/// F^{conj chi} when `conj`). Only m = 0 and m = -1 have one.
fn jet_cusp_constant(chi: &DirichletCharacter, k: u32, m: i32, conj: bool, cusp: u64) -> Result<Cyclotomic> {
    let (c, cb) = if conj { (chi.conj(), chi.clone()) } else { (chi.clone(), chi.conj()) };
    Ok(match m {
        -1 if k == 2 => chi.value(0),
        0 => {
            let a = &cusp_limit(EisKind::G, k, &cb, cusp)? + &cusp_limit(EisKind::H, k, &c, cusp)?;
            a.scale(&Rational::new((-1).into(), factorial(k as u64 - 1)))
        }
        _ => Cyclotomic::zero(),
    })
}

/// Constant terms of every monomial of the weight-k slice at the cusps
/// W_M(inf), M running over `cusps`. Slash operators commute with the
/// products in the convolution, so each constant is the convolution of the
/// constants of the jet coefficients.
pub fn slice_cusp_constants(chi: &DirichletCharacter, k: u32, cusps: &[u64]) -> Result<Poly2<CuspVec>> {
    let mut out = Poly2::new();
    for (k1, k2, m) in triples(k).into_iter().filter(|&(a, b, m)| a as i32 + b as i32 + 2 * m == k as i32) {
        let mut v = Vec::with_capacity(cusps.len());
        for &cusp in cusps {
            let mut acc = Cyclotomic::zero();
            for m1 in -1..=m + 1 {
                let m2 = m - m1;
                if m2 < -1 {
                    continue;
                }
                let t = &jet_cusp_constant(chi, k1, m1, false, cusp)? * &jet_cusp_constant(chi, k2, m2, true, cusp)?;
                acc = if m2.rem_euclid(2) == 1 { &acc - &t } else { &acc + &t };
            }
            v.push(acc);
        }
        let cv = CuspVec(v);
        for (&(a, b), c) in slice_poly(k1, k2, m).terms() {
            out.add_term(a, b, CuspVec(cv.0.iter().map(|x| x * c).collect()));
        }
    }
    Ok(out.pruned())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_jet_product() {
        for (n, idx) in [(1u64, 0usize), (5, 1)] {
            let chi = DirichletCharacter::by_index(n, idx).unwrap();
            let a = product_b(&chi, 8, 10, true).unwrap();
            let b = product_b_from_jets(&chi, 8, 10).unwrap();
            assert!(a.agrees_with(&b, 8), "N={n}");
        }
    }

    #[test]
    fn weight_two_slice_vanishes() {
        for (n, idx) in [(1u64, 0usize), (5, 1)] {
            let chi = DirichletCharacter::by_index(n, idx).unwrap();
            let b = product_b(&chi, 4, 10, false).unwrap();
            assert!(b.slice(2).unwrap().is_zero());
        }
    }
}
