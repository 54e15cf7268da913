//! Floating-point evaluation: theta quotients, slashed Eisenstein series,
//! period integrals and special functions.

pub mod kronecker;
pub mod periods;
pub mod real;
pub mod slash;
pub mod special;

pub use kronecker::{eval_f, eval_f_chi, lattice_distance};
pub use periods::{cusp_period, cusp_periods, twisted_cusp_period, twisted_cusp_periods, PeriodOptions, PeriodValue};
pub use real::Real;
pub use slash::{eisenstein_coeffs_numeric, eval_series, eval_slashed_eisenstein, slash_eval};
