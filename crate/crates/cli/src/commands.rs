use crate::config::{Form, RunConfig, Suite};
use crate::{CliError, Command};
use kronlab::kronecker::{kron_fourier, kron_laurent, product_b};
use kronlab::numeric::PeriodOptions;
use kronlab::report::SuiteReport;
use kronlab::suites::{self, IdentityOptions, SampleOptions};
use kronlab::DirichletCharacter;
use serde_json::{json, Value};
use std::time::{SystemTime, UNIX_EPOCH};

fn emit(config: &RunConfig, command: Value, body: Value) -> Result<(), CliError> {
    let ts = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let doc = json!({ "config": config, "command": command, "timestamp": ts, "report": body });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Config(e.to_string()))?;
    match &config.out {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => {
            use std::io::Write;
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    Ok(())
}

fn summary(r: &SuiteReport) -> Value {
    let failed: Vec<_> = r.failures().map(|c| json!({ "name": c.name, "point": c.point })).collect();
    json!({
        "suite": r.suite,
        "pass": r.pass,
        "checks": r.checks.len(),
        "failed": failed,
        "max_rel_err": r.max_rel_err(),
    })
}

fn identity_options(c: &RunConfig) -> IdentityOptions {
    let d = IdentityOptions::default();
    IdentityOptions {
        prec: c.qprec,
        fit_tol: c.tol.unwrap_or(d.fit_tol),
        periods: PeriodOptions { bigfloat: c.bigfloat, ..d.periods },
        ..d
    }
}

pub fn run(c: &RunConfig, cmd: &Command) -> Result<bool, CliError> {
    match cmd {
        Command::Expand { product, fourier } => {
            let chi = c.even_primitive()?;
            let body = if *product {
                product_b(&chi, c.kmax, c.qprec, false)?.to_json()
            } else if *fourier {
                kron_fourier(&chi, c.qprec, c.deg).to_json()
            } else {
                kron_laurent(&chi, c.qprec, c.deg).to_json()
            };
            emit(c, json!({ "expand": { "product": product, "fourier": fourier } }), json!({ "character": chi.record(), "series": body }))?;
            Ok(true)
        }
        Command::Verify { suite, weight, samples, snap_level } => {
            let chi = c.even_primitive()?;
            let samp = SampleOptions { samples: *samples, seed: c.seed, tol: c.tol.unwrap_or(1e-9), ..SampleOptions::default() };
            let report = match suite {
                Suite::Expansions => suites::expansions(&chi, c.qprec, c.deg, Some(c.kmax))?,
                Suite::Modular => suites::modular(&chi, &samp)?,
                Suite::Elliptic => {
                    let e = suites::elliptic(&chi, &samp)?;
                    let j = suites::jet_route(&chi, &samp, c.qprec, c.deg.max(12))?;
                    let checks = e.checks.into_iter().chain(j.checks).collect();
                    SuiteReport::new("elliptic", checks, json!({ "shifts": e.details, "jet_route": j.details }))
                }
                Suite::CuspLimits => {
                    let ws: Vec<u32> = (2..=c.kmax.max(2)).step_by(2).collect();
                    suites::cusp_limits(&chi, &ws, c.tol.unwrap_or(1e-8))?
                }
                Suite::Identity => suites::identity(&chi, c.kmax, &identity_options(c))?,
                Suite::Periods => {
                    let k = weight.unwrap_or(if c.level == 1 { 12 } else { 4 });
                    let snap = match snap_level {
                        Some(m) => Some(
                            DirichletCharacter::even_primitive(*m)
                                .into_iter()
                                .next()
                                .ok_or_else(|| CliError::Config(format!("no even primitive character mod {m}")))?,
                        ),
                        None => None,
                    };
                    suites::periods_suite(&chi, k, snap.as_ref(), &identity_options(c))?
                }
            };
            let pass = report.pass;
            emit(c, json!({ "verify": suite, "summary": summary(&report) }), serde_json::to_value(&report).unwrap_or_default())?;
            Ok(pass)
        }
        Command::Periods { weight, form, eps, twisted } => {
            let report = match form {
                Form::Cusp0 => suites::cusp_period_report(&c.even_primitive()?, *weight, &identity_options(c))?,
                Form::Eis => {
                    let signs = c.signs(eps.as_deref())?;
                    let twist = if *twisted { Some(c.even_primitive()?) } else { None };
                    suites::eisenstein_period_report(*weight, &signs, twist.as_ref())?
                }
            };
            let pass = report.pass;
            emit(c, json!({ "periods": { "form": form, "weight": weight, "eps": eps, "twisted": twisted } }), serde_json::to_value(&report).unwrap_or_default())?;
            Ok(pass)
        }
    }
}
