//! The twisted Kronecker series as exact two-variable jets, Rankin-Cohen
//! brackets, and the product generating function.

mod bracket;
mod jet;
mod product;

pub use bracket::{g_coefficient, g_coefficient_convolution, jet_coefficient, rc_bracket, rc_bracket_modified, Families};
pub use jet::{kron_fourier, kron_laurent};
pub use product::{principal_poly, product_b, product_b_from_jets, slice_cusp_constants, slice_poly};
