use clap::{Args, ValueEnum};
use kronlab::modforms::SignCharacter;
use kronlab::DirichletCharacter;
use serde::Serialize;

use crate::CliError;

/// Options shared by every subcommand. Each flag can also be set through a
/// KRONLAB_* environment variable.
#[derive(Args, Debug, Clone, Serialize)]
pub struct RunConfig {
    /// Level N (the conductor of the character)
    #[arg(long, global = true, default_value_t = 1, env = "KRONLAB_LEVEL")]
    pub level: u64,

    /// Character: "trivial" or an index into the sorted characters mod N.
    /// Defaults to the first even primitive character.
    #[arg(long = "char", global = true, env = "KRONLAB_CHAR")]
    pub character: Option<String>,

    /// q-precision
    #[arg(long, global = true, default_value_t = 30, env = "KRONLAB_QPREC")]
    pub qprec: usize,

    /// Largest weight
    #[arg(long, visible_alias = "tmax", global = true, default_value_t = 8, env = "KRONLAB_KMAX")]
    pub kmax: u32,

    /// Jet degree
    #[arg(long, global = true, default_value_t = 8, env = "KRONLAB_DEG")]
    pub deg: usize,

    /// Override the relative tolerance of numeric checks
    #[arg(long, global = true, env = "KRONLAB_TOL")]
    pub tol: Option<f64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true, env = "KRONLAB_OUT")]
    pub out: Option<std::path::PathBuf>,

    /// Double-double arithmetic for the period sums
    #[arg(long, global = true, env = "KRONLAB_BIGFLOAT")]
    pub bigfloat: bool,

    /// Disable the data-parallel kernels
    #[arg(long, global = true, env = "KRONLAB_SEQUENTIAL")]
    pub sequential: bool,

    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0x6b72_6f6e, env = "KRONLAB_SEED")]
    pub seed: u64,
}

impl RunConfig {
    pub fn character(&self) -> Result<DirichletCharacter, CliError> {
        let n = self.level;
        if n == 0 {
            return Err(CliError::Config("level must be positive".into()));
        }
        match self.character.as_deref() {
            None => DirichletCharacter::even_primitive(n)
                .into_iter()
                .next()
                .ok_or_else(|| CliError::Config(format!("no even primitive character mod {n}"))),
            Some("trivial") => {
                if n == 1 {
                    Ok(DirichletCharacter::trivial(1))
                } else {
                    Err(CliError::Config(format!("the trivial character mod {n} is not primitive")))
                }
            }
            Some(s) => {
                let i: usize = s.parse().map_err(|_| CliError::Config(format!("bad character selector {s:?}")))?;
                Ok(DirichletCharacter::by_index(n, i)?)
            }
        }
    }

    /// The character, required to be even and primitive.
    pub fn even_primitive(&self) -> Result<DirichletCharacter, CliError> {
        let chi = self.character()?;
        if !chi.is_primitive() {
            return Err(CliError::Config(format!("character {:?} mod {} is not primitive", self.character, self.level)));
        }
        if !chi.is_even() {
            return Err(CliError::Config(format!("character {:?} mod {} is odd", self.character, self.level)));
        }
        Ok(chi)
    }

    /// Signs from "+1,-1,..." listed by increasing prime divisor of N.
    pub fn signs(&self, signs_arg: Option<&str>) -> Result<SignCharacter, CliError> {
        let primes = kronlab::arith::intmath::primes_dividing(self.level);
        let Some(signs_arg) = signs_arg else {
            return Ok(SignCharacter::trivial(self.level)?);
        };
        let parsed: Vec<i8> = signs_arg
            .split(',')
            .map(|t| match t.trim() {
                "+" | "1" | "+1" => Ok(1),
                "-" | "-1" => Ok(-1),
                o => Err(CliError::Config(format!("bad sign {o:?}"))),
            })
            .collect::<Result<_, _>>()?;
        let signs = if parsed.len() == 1 { vec![parsed[0]; primes.len()] } else { parsed };
        if signs.len() != primes.len() {
            return Err(CliError::Config(format!("{} signs for {} primes", signs.len(), primes.len())));
        }
        Ok(SignCharacter::new(self.level, primes.into_iter().zip(signs).collect())?)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Laurent against Fourier jets; with --kmax also both product routes
    Expansions,
    /// The Gamma0(N) transformation law at sampled points
    Modular,
    /// The elliptic shifts at sampled points, plus the jet route
    Elliptic,
    /// Closed-form cusp limits against slashed evaluation at tau = 10i
    CuspLimits,
    /// The product identity weight by weight up to --kmax
    Identity,
    /// Functional equations of the periods, and rationality snaps with --snap-level
    Periods,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub enum Form {
    /// The cusp eigenform spanning the cuspidal part of the identity
    Cusp0,
    /// The level-N Eisenstein series with the given signs
    Eis,
}
