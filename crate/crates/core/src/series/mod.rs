//! Truncated q-series and the polynomial containers built on them.

mod bijet;
mod poly;
mod qseries;
mod trigen;

pub use bijet::{BiJet, Substitution, SubstitutedJet};
pub use poly::{Algebra, LaurentPoly, Poly2};
pub use qseries::QSeries;
pub use trigen::TriGen;
