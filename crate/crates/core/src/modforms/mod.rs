//! Eisenstein families, sign characters, Hecke operators, cusp limits,
//! local L-factors, Petersson ratios and cusp-part extraction.

mod cusp;
mod eisenstein;
mod extract;
mod hecke;
mod local;
mod petersson;
mod sign;

pub use cusp::{cusp_limit, EisKind};
pub use eisenstein::{
    divisor_sum_series, eisenstein_g, eisenstein_g_chi, eisenstein_h_chi, eisenstein_level, level_raise,
    parity_matches,
};
pub use extract::{extract_rank_one_cusp, CuspVec, EisBasisElem, Extraction};
pub use hecke::{hecke_tp, is_hecke_eigen, multiplicativity_defects, HeckeCheck};
pub use local::{local_factor, LocalFactor, LocalKind};
pub use petersson::{eisenstein_selfnorm, eisenstein_selfnorm_parts, g_selfnorm, petersson_ratio};
pub use sign::SignCharacter;
