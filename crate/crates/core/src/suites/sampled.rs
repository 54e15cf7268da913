//! Sampled numeric checks of the twisted Kronecker function: modular and
//! elliptic transformation laws, the character-sum route against the exact
//! jet, and cusp limits of the Eisenstein families.

use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::kronecker::kron_laurent;
use crate::modforms::{cusp_limit, EisKind};
use crate::numeric::{eval_f_chi, eval_slashed_eisenstein};
use crate::report::{CheckRecord, SuiteReport};
use crate::series::BiJet;
use crate::arith::Cyclotomic;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::f64::consts::PI;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Minimal distance to the pole lattice accepted for a sample.
    pub pole_margin: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { samples: 24, seed: 0x6b72_6f6e, tol: 1e-9, pole_margin: 0.05 }
    }
}

fn fmt_point(tau: Complex64, u: Complex64, v: Complex64) -> String {
    format!("tau={tau:.6} u={u:.6} v={v:.6}")
}

/// Matrices of Gamma_0(N) used for the modular law.
pub fn gamma0_samples(n: u64) -> Vec<[i64; 4]> {
    let n = n as i64;
    let mut out = vec![[1, 0, n, 1], [1, 1, n, n + 1]];
    if n % 2 == 1 {
        out.push([2, 1, n, (n + 1) / 2]);
    }
    out
}

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn point(&mut self) -> (Complex64, Complex64, Complex64) {
        let r = &mut self.rng;
        let tau = Complex64::new(r.gen_range(-0.5..0.5), r.gen_range(0.8..1.4));
        let u = Complex64::new(r.gen_range(-0.6..0.6), r.gen_range(-0.6..0.6));
        let v = Complex64::new(r.gen_range(-0.6..0.6), r.gen_range(-0.6..0.6));
        (tau, u, v)
    }
}

fn sampler(seed: u64) -> Sampler {
    Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
}

/// F^chi(g tau, u/(c tau+d), v/(c tau+d)) = chi(d) (c tau+d) e^{c u v/(2 pi i (c tau+d))} F^chi(tau, u, v)
pub fn modular(chi: &DirichletCharacter, opts: &SampleOptions) -> Result<SuiteReport> {
    let mut s = sampler(opts.seed);
    let mut checks = Vec::new();
    let gammas = gamma0_samples(chi.modulus());
    let mut attempts = 0;
    while checks.len() < opts.samples {
        attempts += 1;
        if attempts > 50 * opts.samples {
            return Err(Error::Convergence("could not find sample points away from the poles".into()));
        }
        let (tau, u, v) = s.point();
        let [a, b, c, d] = gammas[checks.len() % gammas.len()];
        let j = c as f64 * tau + d as f64;
        let gt = (a as f64 * tau + b as f64) / j;
        let lhs = match eval_f_chi(chi, gt, u / j, v / j, opts.pole_margin) {
            Ok(x) => x,
            Err(Error::PoleProximity { .. }) => continue,
            Err(e) => return Err(e),
        };
        let base = match eval_f_chi(chi, tau, u, v, opts.pole_margin) {
            Ok(x) => x,
            Err(Error::PoleProximity { .. }) => continue,
            Err(e) => return Err(e),
        };
        let factor = chi.value_complex(d) * j * (c as f64 * u * v / (2.0 * PI * I * j)).exp();
        checks.push(CheckRecord::numeric(
            "modular law",
            format!("gamma=({a},{b};{c},{d}) {}", fmt_point(tau, u, v)),
            lhs,
            factor * base,
            opts.tol,
        ));
    }
    Ok(SuiteReport::new("modular", checks, json!({ "level": chi.modulus(), "seed": opts.seed, "gammas": gammas })))
}

/// Shifting u by 2 pi i (n N tau + s) and v by 2 pi i (m N tau + r) multiplies
/// F^chi by q^{-N^2 m n} xi^{-N m} eta^{-N n}.
pub fn elliptic(chi: &DirichletCharacter, opts: &SampleOptions) -> Result<SuiteReport> {
    let nn = chi.modulus() as f64;
    let mut s = sampler(opts.seed ^ 0x5eed);
    let mut checks = Vec::new();
    let shifts: Vec<(i32, i32, i32, i32)> = (-1i32..=1)
        .flat_map(|m| (-1i32..=1).map(move |n| (m, n)))
        .filter(|&(m, n)| (m, n) != (0, 0))
        .map(|(m, n)| (m, n, (m + n).rem_euclid(2), 1 - (m - n).rem_euclid(2)))
        .collect();
    let mut attempts = 0;
    while checks.len() < opts.samples {
        attempts += 1;
        if attempts > 50 * opts.samples {
            return Err(Error::Convergence("could not find sample points away from the poles".into()));
        }
        let (tau, u, v) = s.point();
        let (m, n, sh_s, sh_r) = shifts[checks.len() % shifts.len()];
        let du = 2.0 * PI * I * (n as f64 * nn * tau + sh_s as f64);
        let dv = 2.0 * PI * I * (m as f64 * nn * tau + sh_r as f64);
        let (lhs, base) = match (eval_f_chi(chi, tau, u + du, v + dv, opts.pole_margin), eval_f_chi(chi, tau, u, v, opts.pole_margin)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::PoleProximity { .. }), _) | (_, Err(Error::PoleProximity { .. })) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        let q = (2.0 * PI * I * tau).exp();
        let factor = q.powf(-(nn * nn) * (m * n) as f64) * (-nn * m as f64 * u).exp() * (-nn * n as f64 * v).exp();
        checks.push(CheckRecord::numeric(
            "elliptic law",
            format!("m={m} n={n} s={sh_s} r={sh_r} {}", fmt_point(tau, u, v)),
            lhs,
            factor * base,
            opts.tol,
        ));
    }
    Ok(SuiteReport::new("elliptic", checks, json!({ "level": chi.modulus(), "seed": opts.seed })))
}

/// Value of a jet at (u, v) and q = e^{2 pi i tau}, with a crude bound on the
/// omitted total degrees from the last included one.
pub fn eval_jet(jet: &BiJet<Cyclotomic>, tau: Complex64, u: Complex64, v: Complex64) -> (Complex64, f64) {
    let q = (2.0 * PI * I * tau).exp();
    let (pu, pv) = jet.polar();
    let mut acc = pu.to_complex() / u + pv.to_complex() / v;
    let mut last = 0.0f64;
    for t in 0..=jet.degree() {
        let mut level = Complex64::new(0.0, 0.0);
        for s in 0..=t {
            let series = jet.entry(t - s, s);
            let mut val = Complex64::new(0.0, 0.0);
            let mut qn = Complex64::new(1.0, 0.0);
            for c in series.coeffs() {
                val += c.to_complex() * qn;
                qn *= q;
            }
            level += val * u.powi((t - s) as i32) * v.powi(s as i32);
        }
        acc += level;
        if t + 2 >= jet.degree() {
            last = last.max(level.norm());
        }
    }
    (acc, last)
}

/// The character-sum evaluation against the exact jet at small (u, v).
pub fn jet_route(chi: &DirichletCharacter, opts: &SampleOptions, prec: usize, degree: usize) -> Result<SuiteReport> {
    let jet = kron_laurent(chi, prec, degree);
    let mut s = sampler(opts.seed ^ 0x1e7);
    let mut checks = Vec::new();
    for _ in 0..opts.samples.min(8) {
        let (tau, u, v) = s.point();
        let tau = Complex64::new(tau.re, tau.im + 0.4);
        let (u, v) = (u * 0.05, v * 0.05);
        let direct = eval_f_chi(chi, tau, u, v, 1e-6)?;
        let (jv, bound) = eval_jet(&jet, tau, u, v);
        let mut c = CheckRecord::numeric("character sum vs jet", fmt_point(tau, u, v), direct, jv, opts.tol);
        c.pass = c.abs_err <= opts.tol * jv.norm() + bound;
        checks.push(c);
    }
    Ok(SuiteReport::new("jet-route", checks, json!({ "level": chi.modulus(), "prec": prec, "degree": degree })))
}

/// Exact cusp limits of G_{r,chi}, H_{r,chi} at W_1 and W_N against the slashed
/// series evaluated at tau = 10 i.
pub fn cusp_limits(chi: &DirichletCharacter, weights: &[u32], tol: f64) -> Result<SuiteReport> {
    let n = chi.modulus();
    let tau = Complex64::new(0.0, 10.0);
    let mut checks = Vec::new();
    for &r in weights {
        for kind in [EisKind::G, EisKind::H] {
            let mut ms = vec![1];
            if n > 1 {
                ms.push(n);
            }
            for m in ms {
                let exact = cusp_limit(kind, r, chi, m)?.to_complex();
                let (val, tail) = eval_slashed_eisenstein(kind, r, chi, m, tau)?;
                let mut c = CheckRecord::numeric("cusp limit", format!("{kind:?} r={r} M={m} tau=10i"), val, exact, tol);
                // a vanishing limit is compared absolutely
                c.pass = c.abs_err <= tol * exact.norm().max(1.0) + tail;
                checks.push(c);
            }
        }
    }
    Ok(SuiteReport::new("cusp-limits", checks, json!({ "level": n, "weights": weights })))
}
