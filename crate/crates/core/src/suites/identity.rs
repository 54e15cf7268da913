//! The product identity, weight by weight: exact Eisenstein part against the
//! period side, then the cusp part through Hecke checks, numeric periods and
//! a fitted Petersson norm.

use crate::arith::intmath::{divisors, factorial, primes_below};
use crate::arith::{Cyclotomic, Rational};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::kronecker::{product_b, slice_cusp_constants};
use crate::modforms::{
    eisenstein_g, extract_rank_one_cusp, is_hecke_eigen, level_raise, multiplicativity_defects, EisBasisElem, Extraction,
    HeckeCheck, SignCharacter,
};
use crate::numeric::periods::twist_sign;
use crate::numeric::{cusp_periods, twisted_cusp_periods, PeriodOptions, PeriodValue};
use crate::periods::{assemble_r, generating_c_eisenstein, petersson_fit, PeterssonFit};
use crate::report::{CheckRecord, SuiteReport};
use crate::series::{Poly2, QSeries, TriGen};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug)]
pub struct IdentityOptions {
    pub prec: usize,
    /// Relative tolerance for the Petersson fit.
    pub fit_tol: f64,
    /// Tolerance for the functional equations of the periods.
    pub fe_tol: f64,
    pub periods: PeriodOptions,
    /// Largest precision tried when the period sums need more coefficients.
    pub max_prec: usize,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        IdentityOptions { prec: 40, fit_tol: 1e-6, fe_tol: 1e-8, periods: PeriodOptions::default(), max_prec: 320 }
    }
}

/// Everything learned about the cusp part of one weight.
#[derive(Clone, Debug, Serialize)]
pub struct CuspReport {
    pub weight: u32,
    pub level: u64,
    pub rank: usize,
    pub eigenform: QSeries<Cyclotomic>,
    #[serde(rename = "R_poly")]
    pub r_poly: Poly2<Cyclotomic>,
    pub hecke_checks: Vec<HeckeCheck>,
    pub multiplicativity_defects: usize,
    /// Atkin-Lehner sign at the full level.
    pub wn_sign: i64,
    pub periods: Vec<PeriodValue>,
    pub twisted_periods: Vec<PeriodValue>,
    pub petersson: PeterssonFit,
    pub prec_used: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub weight: u32,
    pub rank: usize,
    pub eisenstein: Vec<EisensteinEntry>,
    pub cusp: Option<CuspReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EisensteinEntry {
    pub sign: String,
    pub multiplier: Poly2<Cyclotomic>,
    pub matches_period_side: bool,
}

fn weights_of(kmax: u32) -> impl Iterator<Item = u32> {
    (2..=kmax).step_by(2)
}

/// The Eisenstein basis G^eps of weight k with constant terms at W_M(inf),
/// M over `cusps`, using G^eps |_k W_M = eps(M) G^eps.
pub fn eisenstein_basis(k: u32, level: u64, cusps: &[u64], prec: usize) -> Result<Vec<EisBasisElem>> {
    let g = eisenstein_g(k, prec);
    Ok(SignCharacter::enumerate(level)?
        .into_iter()
        .filter(|e| !(k == 2 && e.is_trivial()))
        .map(|e| {
            let series = level_raise(&g, k, &e);
            let c0 = series.coeffs()[0].clone();
            let cusp_constants = cusps.iter().map(|&m| c0.scale(&Rational::from_integer(e.eval(m).into()))).collect();
            EisBasisElem { sign: e, series, cusp_constants }
        })
        .collect())
}

/// Extract one weight of a product, checking the cusp constants against the
/// q^0 coefficients at the identity cusp.
pub fn extract_weight(chi: &DirichletCharacter, tg: &TriGen<Cyclotomic>, k: u32, checks: &mut Vec<CheckRecord>) -> Result<Extraction> {
    let n = chi.modulus();
    let cusps = divisors(n);
    let empty = Poly2::new();
    let slice = tg.slice(k as i32).unwrap_or(&empty);
    let consts = slice_cusp_constants(chi, k, &cusps)?;
    let at_inf: Poly2<Cyclotomic> = consts.map(|v| v.0[0].clone()).pruned();
    let q0: Poly2<Cyclotomic> = slice.map(|s| s.coeffs()[0].clone()).pruned();
    checks.push(CheckRecord::exact(
        "cusp constants at infinity",
        format!("N={n} k={k}"),
        format!("{} monomials", at_inf.len()),
        format!("{} monomials", q0.len()),
        at_inf == q0,
    ));
    // empty slices report an unbounded precision
    let prec = std::iter::once(slice).chain(tg.slices.values()).map(|s| s.prec()).filter(|&p| p != usize::MAX).min().unwrap_or(1);
    let basis = eisenstein_basis(k, n, &cusps, prec.max(1))?;
    extract_rank_one_cusp(slice, &consts, &basis)
}

/// a_p = -eps(p) p^{k/2-1} at p || N gives the Atkin-Lehner sign.
pub(crate) fn atkin_lehner_sign(f: &QSeries<Cyclotomic>, k: u32, level: u64) -> Result<i64> {
    let mut sign = 1i64;
    for p in crate::arith::intmath::primes_dividing(level) {
        let ap = f.coeff(p as usize)?;
        let unit = Cyclotomic::from_rational(Rational::from_integer(BigInt::from(p).pow(k / 2 - 1)));
        if *ap == unit {
            sign = -sign;
        } else if *ap != -&unit {
            return Err(Error::NotEigenform(f64::NAN));
        }
    }
    Ok(sign)
}

fn cusp_numerics(
    chi: &DirichletCharacter,
    k: u32,
    r_exact: &Poly2<Cyclotomic>,
    f: &QSeries<Cyclotomic>,
    opts: &IdentityOptions,
    checks: &mut Vec<CheckRecord>,
) -> Result<(Vec<PeriodValue>, Vec<PeriodValue>, PeterssonFit, i64)> {
    let n = chi.modulus();
    let eps = atkin_lehner_sign(f, k, n)?;
    let ns: Vec<u32> = (0..=k - 2).collect();
    let rf = cusp_periods(f.coeffs(), k, n, eps, &ns, &opts.periods)?;
    let rfx = twisted_cusp_periods(f.coeffs(), k, chi, &ns, &opts.periods)?;
    let rfxb = if chi.is_real() { rfx.clone() } else { twisted_cusp_periods(f.coeffs(), k, &chi.conj(), &ns, &opts.periods)? };
    let w = (k - 2) as usize;
    let lam = twist_sign(chi).to_complex();
    for i in 0..=w {
        let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
        let nf = n as f64;
        let want = rf[i].value() * sign * eps as f64 * nf.powf(1.0 + i as f64 - k as f64 / 2.0);
        checks.push(CheckRecord::numeric("untwisted functional equation", format!("N={n} k={k} n={i}"), rf[w - i].value(), want, opts.fe_tol));
        let want = rfxb[i].value() * lam * sign * nf.powi(2 * i as i32 + 2 - k as i32);
        checks.push(CheckRecord::numeric("twisted functional equation", format!("N={n} k={k} n={i}"), rfx[w - i].value(), want, opts.fe_tol));
    }
    let vf: Vec<Complex64> = rf.iter().map(|p| p.value()).collect();
    let vfx: Vec<Complex64> = rfx.iter().map(|p| p.value()).collect();
    let numeric = assemble_r(k, chi, &vf, &vfx, Complex64::new(1.0, 0.0))?;
    let exact_r = r_exact.scale_rat(&Rational::from_integer(factorial(k as u64 - 2)));
    let fit = petersson_fit(&exact_r, &numeric, opts.fit_tol)?;
    let res = fit.residual.max(fit.leakage);
    checks.push(CheckRecord::flag("Petersson fit residual", format!("N={n} k={k}"), res, opts.fit_tol, res <= opts.fit_tol));
    Ok((rf, rfx, fit, eps))
}

fn weight_report(
    chi: &DirichletCharacter,
    tg: &TriGen<Cyclotomic>,
    k: u32,
    opts: &IdentityOptions,
    checks: &mut Vec<CheckRecord>,
) -> Result<WeightReport> {
    let n = chi.modulus();
    let ex = extract_weight(chi, tg, k, checks)?;
    let cside = generating_c_eisenstein(k, chi)?;
    let mut eisenstein = Vec::new();
    for ((sign, mult), c) in ex.eisenstein.iter().zip(&cside) {
        let ok = sign == &c.sign && mult == &c.r;
        checks.push(CheckRecord::exact(
            "Eisenstein multiplier equals period side",
            format!("N={n} k={k} eps={sign}"),
            format!("{} monomials", mult.len()),
            format!("{} monomials", c.r.len()),
            ok,
        ));
        eisenstein.push(EisensteinEntry { sign: sign.to_string(), multiplier: mult.clone(), matches_period_side: ok });
    }
    checks.push(CheckRecord::exact("cusp rank at most one", format!("N={n} k={k}"), ex.rank.to_string(), "<= 1".into(), ex.rank <= 1));
    let cusp = match &ex.cusp {
        None => None,
        Some((r_poly, f)) => {
            let mut hecke = Vec::new();
            for p in primes_below(50).into_iter().map(|p| p as u64).filter(|p| n % p != 0).take(2) {
                let h = is_hecke_eigen(f, k, n, p);
                checks.push(CheckRecord::exact(
                    "Hecke eigenform",
                    format!("N={n} k={k} p={p}"),
                    format!("T_{p} f"),
                    format!("{} f", h.eigenvalue),
                    h.pass,
                ));
                hecke.push(h);
            }
            let defects = multiplicativity_defects(f).len();
            checks.push(CheckRecord::exact("coefficients multiplicative", format!("N={n} k={k}"), format!("{defects} defects"), "0".into(), defects == 0));
            let mut local = Vec::new();
            let (rf, rfx, fit, eps) = cusp_numerics(chi, k, r_poly, f, opts, &mut local)?;
            checks.extend(local);
            Some(CuspReport {
                weight: k,
                level: n,
                rank: ex.rank,
                eigenform: f.clone(),
                r_poly: r_poly.clone(),
                hecke_checks: hecke,
                multiplicativity_defects: defects,
                wn_sign: eps,
                periods: rf,
                twisted_periods: rfx,
                petersson: fit,
                prec_used: f.prec(),
            })
        }
    };
    Ok(WeightReport { weight: k, rank: ex.rank, eisenstein, cusp })
}

/// Run the identity suite for all weights 2..=kmax.
///
/// When the period sums of a cusp form run out of coefficients, that weight
/// is recomputed at twice the precision, up to `opts.max_prec`.
pub fn identity(chi: &DirichletCharacter, kmax: u32, opts: &IdentityOptions) -> Result<SuiteReport> {
    if !chi.is_even() || !chi.is_primitive() {
        return Err(Error::InvalidCharacter("the identity needs an even primitive character".into()));
    }
    if !crate::arith::intmath::is_squarefree(chi.modulus()) {
        return Err(Error::NotSquareFree(chi.modulus()));
    }
    let mut checks = Vec::new();
    // building with `check` runs the convolution route as well
    let tg = product_b(chi, kmax, opts.prec, true)?;
    checks.push(CheckRecord::exact("bracket equals convolution", format!("N={} kmax={kmax}", chi.modulus()), "bracket".into(), "convolution".into(), true));
    let mut reports = Vec::new();
    for k in weights_of(kmax) {
        let mut prec = opts.prec;
        let mut local_tg = None;
        let rep = loop {
            let mut local = Vec::new();
            let t = local_tg.as_ref().unwrap_or(&tg);
            match weight_report(chi, t, k, &IdentityOptions { prec, ..*opts }, &mut local) {
                Err(Error::InsufficientPrecision { .. }) if prec * 2 <= opts.max_prec => {
                    prec *= 2;
                    local_tg = Some(product_b(chi, k, prec, false)?);
                }
                Err(e) => {
                    checks.push(CheckRecord::exact("weight completed", format!("N={} k={k}", chi.modulus()), e.to_string(), "ok".into(), false));
                    break None;
                }
                Ok(r) => {
                    checks.extend(local);
                    break Some(r);
                }
            }
        };
        if let Some(r) = rep {
            reports.push(r);
        }
    }
    let details = json!({ "level": chi.modulus(), "character": chi.record(), "kmax": kmax, "weights": reports });
    Ok(SuiteReport::new("identity", checks, details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_five_weight_two_and_four() {
        let chi = DirichletCharacter::by_index(5, 1).unwrap();
        let rep = identity(&chi, 4, &IdentityOptions::default()).unwrap();
        for c in rep.failures() {
            eprintln!("{c:?}");
        }
        eprintln!("{}", serde_json::to_string_pretty(&rep.details["weights"][1]["cusp"]["petersson"]).unwrap());
        assert!(rep.pass);
        assert!(rep.checks.len() >= 18);
    }

    #[test]
    fn level_one_through_fourteen() {
        let one = DirichletCharacter::trivial(1);
        let rep = identity(&one, 14, &IdentityOptions::default()).unwrap();
        for c in rep.failures() {
            eprintln!("{c:?}");
        }
        assert!(rep.pass);
        let fit = &rep.details["weights"][5]["cusp"]["petersson"];
        let norm = fit["re"].as_f64().unwrap();
        // <Delta, Delta>
        assert!((norm / 1.035362056804320922e-6 - 1.0).abs() < 1e-9, "{norm}");
        assert!(fit["monomials"].as_u64().unwrap() >= 20);
    }
}
