//! Exact and numeric tooling for twisted Kronecker series.
//!
//! The exact side works over cyclotomic fields with truncated q-series; the
//! numeric side evaluates theta quotients, slashed Eisenstein series and
//! period integrals in floating point.

pub mod arith;
pub mod dirichlet;
pub mod error;
pub mod exec;
pub mod kronecker;
pub mod modforms;
pub mod numeric;
pub mod periods;
pub mod report;
pub mod series;
pub mod suites;

pub use arith::{Cyclotomic, Rational, Ring};
pub use dirichlet::DirichletCharacter;
pub use error::{Error, Result};
pub use series::{LaurentPoly, Poly2, QSeries, TriGen};
