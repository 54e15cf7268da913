//! Period checks for the cusp eigenform of a weight: functional equations,
//! twisted functional equations and rationality of normalised products.

use super::identity::{atkin_lehner_sign, extract_weight, IdentityOptions};
use crate::arith::Cyclotomic;
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::kronecker::product_b;
use crate::numeric::periods::twist_sign;
use crate::numeric::{cusp_periods, twisted_cusp_periods, PeriodValue};
use crate::modforms::SignCharacter;
use crate::periods::{omega_minus, period_eisenstein, period_eisenstein_twisted, snap_rational, PeriodPoly, Snap};
use num_traits::Zero;
use crate::report::{CheckRecord, SuiteReport};
use crate::series::QSeries;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

/// The normalised eigenform spanning the cusp part of the weight-k slice of
/// the product for chi, read off by exact extraction.
pub fn extracted_eigenform(chi: &DirichletCharacter, k: u32, prec: usize) -> Result<QSeries<Cyclotomic>> {
    let tg = product_b(chi, k, prec, false)?;
    let ex = extract_weight(chi, &tg, k, &mut Vec::new())?;
    ex.cusp.map(|(_, f)| f).ok_or_else(|| Error::NotRankOne(format!("no cusp form at weight {k}")))
}

/// Functional equations of r_n(f) and of r_n(f_chi).
pub fn functional_equations(
    f: &QSeries<Cyclotomic>,
    k: u32,
    level: u64,
    chi: &DirichletCharacter,
    opts: &IdentityOptions,
) -> Result<(Vec<CheckRecord>, Vec<PeriodValue>, Vec<PeriodValue>)> {
    let eps = atkin_lehner_sign(f, k, level)?;
    let ns: Vec<u32> = (0..=k - 2).collect();
    let rf = cusp_periods(f.coeffs(), k, level, eps, &ns, &opts.periods)?;
    let rfx = twisted_cusp_periods(f.coeffs(), k, chi, &ns, &opts.periods)?;
    let rfxb = twisted_cusp_periods(f.coeffs(), k, &chi.conj(), &ns, &opts.periods)?;
    let lam = twist_sign(chi).to_complex();
    let (nf, cn) = (level as f64, chi.modulus() as f64);
    let w = (k - 2) as usize;
    let mut checks = Vec::new();
    for i in 0..=w {
        let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
        let want = rf[i].value() * sign * eps as f64 * nf.powf(1.0 + i as f64 - k as f64 / 2.0);
        checks.push(CheckRecord::numeric("untwisted functional equation", format!("N={level} k={k} n={i}"), rf[w - i].value(), want, opts.fe_tol));
        let want = rfxb[i].value() * lam * sign * cn.powi(2 * i as i32 + 2 - k as i32);
        checks.push(CheckRecord::numeric(
            "twisted functional equation",
            format!("N={level} cond={} k={k} n={i}", chi.modulus()),
            rfx[w - i].value(),
            want,
            opts.fe_tol,
        ));
    }
    Ok((checks, rf, rfx))
}

#[derive(Clone, Debug, Serialize)]
pub struct SnapEntry {
    pub n: u32,
    pub m: u32,
    pub value: f64,
    pub snap: Option<Snap>,
}

/// N^{n+1} r_n(f_chi) r_m(f) / ((2i)^{k-3} W(chi) <f, f>) for n - m odd,
/// snapped to rationals within `tol` relative. This is the scalar that builds
/// the X^{k-2-n} Y^m coefficient of C^, so it lies in the coefficient field. The imaginary part has to vanish as well.
pub fn rationality_snaps(
    k: u32,
    chi: &DirichletCharacter,
    rf: &[PeriodValue],
    rfx: &[PeriodValue],
    norm: f64,
    max_den: u64,
    tol: f64,
) -> (Vec<CheckRecord>, Vec<SnapEntry>) {
    let two_i = Complex64::new(0.0, 2.0);
    let den = two_i.powi(k as i32 - 3) * chi.gauss_sum().to_complex() * norm;
    let mut checks = Vec::new();
    let mut entries = Vec::new();
    for n in 0..=k - 2 {
        for m in 0..=k - 2 {
            if (n + m) % 2 == 0 {
                continue;
            }
            let scale = (chi.modulus() as f64).powi(n as i32 + 1);
            let v = rfx[n as usize].value() * rf[m as usize].value() * scale / den;
            // relative: an absolute window admits small fractions for small values
            let snap = snap_rational(v.re, max_den, tol * v.norm()).ok();
            let pass = snap.is_some() && v.im.abs() <= tol * v.norm();
            let shown = snap.map(|s| format!("{}/{}", s.num, s.den)).unwrap_or_else(|| "none".into());
            checks.push(CheckRecord {
                name: "rationality snap".into(),
                point: format!("n={n} m={m}"),
                lhs: format!("{v}"),
                rhs: shown,
                abs_err: snap.map(|s| s.error).unwrap_or(f64::INFINITY).max(v.im.abs()),
                rel_err: snap.map(|s| s.error).unwrap_or(f64::INFINITY).max(v.im.abs()),
                tolerance: tol,
                pass,
            });
            entries.push(SnapEntry { n, m, value: v.re, snap });
        }
    }
    (checks, entries)
}

/// Periods of the weight-k eigenform of level N = conductor of chi, their
/// functional equations, and (for N = 1) the rationality snaps against
/// `snap_chi`.
pub fn periods_suite(chi: &DirichletCharacter, k: u32, snap_chi: Option<&DirichletCharacter>, opts: &IdentityOptions) -> Result<SuiteReport> {
    let level = chi.modulus();
    let rep = super::identity::identity(chi, k, opts)?;
    let weight = rep.details["weights"]
        .as_array()
        .and_then(|ws| ws.iter().find(|w| w["weight"] == k))
        .ok_or_else(|| Error::NotRankOne(format!("weight {k} did not complete")))?;
    let norm = weight["cusp"]["petersson"]["re"]
        .as_f64()
        .ok_or_else(|| Error::NotRankOne(format!("no cusp form at weight {k} and level {level}")))?;
    let mut prec = weight["cusp"]["prec_used"].as_u64().unwrap_or(opts.prec as u64) as usize;
    let (mut checks, rf, rfx, rsx) = loop {
        let f = extracted_eigenform(chi, k, prec)?;
        let run = functional_equations(&f, k, level, chi, opts).and_then(|(c, a, b)| match snap_chi {
            Some(sc) => functional_equations(&f, k, level, sc, opts).map(|(c2, _, b2)| ([c, c2].concat(), a, b, Some(b2))),
            None => Ok((c, a, b, None)),
        });
        match run {
            Err(Error::InsufficientPrecision { .. }) if prec * 2 <= opts.max_prec => prec *= 2,
            Err(e) => return Err(e),
            Ok((c, a, b, s)) => break (c, a, b, s),
        }
    };
    let mut details = json!({ "level": level, "weight": k, "petersson": norm, "periods": rf, "twisted_periods": rfx, "prec_used": prec });
    if let (Some(sc), Some(rsx)) = (snap_chi, rsx) {
        let (sc_checks, entries) = rationality_snaps(k, sc, &rf, &rsx, norm, 1_000_000, 1e-6);
        checks.extend(sc_checks);
        details["snaps"] = json!({ "character": sc.record(), "entries": entries });
    }
    checks.extend(rep.checks.into_iter().filter(|c| c.name == "Petersson fit residual"));
    Ok(SuiteReport::new("periods", checks, details))
}

fn complex_poly_json(p: &crate::series::LaurentPoly<Complex64>) -> serde_json::Value {
    let m: serde_json::Map<String, serde_json::Value> = p.terms().map(|(e, c)| (format!("X^{e}"), json!([c.re, c.im]))).collect();
    serde_json::Value::Object(m)
}

/// Period report of the cusp eigenform at (level, k): periods, the even and
/// odd parts of r_f, and the functional-equation checks.
pub fn cusp_period_report(chi: &DirichletCharacter, k: u32, opts: &IdentityOptions) -> Result<SuiteReport> {
    let level = chi.modulus();
    let mut prec = opts.prec;
    let (f, checks, rf, rfx) = loop {
        let f = extracted_eigenform(chi, k, prec)?;
        match functional_equations(&f, k, level, chi, opts) {
            Err(Error::InsufficientPrecision { .. }) if prec * 2 <= opts.max_prec => prec *= 2,
            Err(e) => return Err(e),
            Ok((c, a, b)) => break (f, c, a, b),
        }
    };
    let values: Vec<Complex64> = rf.iter().map(|p| p.value()).collect();
    let pp = crate::periods::PeriodPoly::from_values(k, &values);
    let details = json!({
        "form": format!("cusp0 level {level} weight {k}"),
        "k": k,
        "periods": rf,
        "twisted_periods": rfx,
        "even": complex_poly_json(&pp.even),
        "odd": complex_poly_json(&pp.odd),
        "eigenform": f,
    });
    Ok(SuiteReport::new("periods", checks, details))
}

/// Exact period report of a level-N Eisenstein series, or of its twist by
/// `twist`, in units of w+.
pub fn eisenstein_period_report(k: u32, eps: &SignCharacter, twist: Option<&DirichletCharacter>) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let (form, p) = match twist {
        Some(chi) => {
            let p = period_eisenstein_twisted(k, chi)?;
            if chi.modulus() > 1 {
                let boundary = p.odd.coeff(-1).is_zero() && p.odd.coeff(k as i32 - 1).is_zero();
                checks.push(CheckRecord::exact("boundary exponents vanish", format!("k={k}"), "X^-1, X^(k-1)".into(), "0".into(), boundary));
                checks.push(CheckRecord::exact("no w+ term", format!("k={k}"), "even part".into(), "0".into(), p.even.is_zero()));
            }
            (format!("eisenstein level {} eps {eps} twisted by character mod {}", eps.level(), chi.modulus()), p)
        }
        None => (format!("eisenstein level {} eps {eps}", eps.level()), period_eisenstein(k, eps)?),
    };
    let full = p.full();
    let reassembled = PeriodPoly::from_poly(k, &full) == p;
    checks.push(CheckRecord::exact("parity split reassembles", format!("k={k}"), "even + odd".into(), "r".into(), reassembled));
    let details = json!({
        "form": form,
        "k": k,
        "periods": full,
        "even": p.even,
        "odd": p.odd,
        "omega_minus": omega_minus(k).to_string(),
    });
    Ok(SuiteReport::new("periods", checks, details))
}
