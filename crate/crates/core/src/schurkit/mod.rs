//! Schur polynomials, Littlewood–Richardson coefficients and Schur
//! log-concavity checks.
//!
//! Expansions live in the ring of symmetric functions unless a variable
//! count is given, in which case `s_ν` with `ℓ(ν) > n` vanishes.

mod checks;
mod lr;
mod poly;

pub use checks::{
    expansions_csv, pieri_strips, schur_nonneg_grid, schur_nonneg_witness,
    verify_line_logconcavity, verify_pieri, verify_power_logconcavity, verify_schur_nonneg,
    StripKind,
};
pub use lr::{lr_coefficient, lr_coefficients, schur_product};
pub use poly::{
    schur_dimension, schur_expand_symmetric, schur_monomial_expansion, schur_polynomial_or_zero,
    verify_lr_oracle, MonomialPoly, SchurExpansion,
};
