//! Exact scalars: rationals, cyclotomic numbers, Bernoulli numbers and
//! small integer helpers.

mod bernoulli;
mod cyclotomic;
pub mod intmath;
pub mod linalg;
mod omega;
mod ring;

pub use bernoulli::{bernoulli, bernoulli_poly};
pub use cyclotomic::Cyclotomic;
pub use omega::OmegaExpr;
pub use ring::{rat, rat_to_f64, Rational, Ring};

pub use num_complex::Complex64 as ComplexApprox;
