//! Exact verification engine for equivariant Kähler packages.
//!
//! The crate builds three families of finite-dimensional graded spaces with
//! explicit bases (tensor products of polynomial pieces, and two gradings of
//! tensor products of exterior algebras), materializes the raising, lowering
//! and grading operators together with the Poincaré pairings as exact rational
//! matrices, and checks Poincaré duality, hard Lefschetz and the Hodge–Riemann
//! relations degree by degree. Around that core sit the symmetric group
//! character machinery used for equivariant log-concavity checks and a small
//! symmetric-function layer (Schur polynomials, Littlewood–Richardson
//! coefficients).
//!
//! Everything is computed over ℚ; nothing in the crate touches floating point.

pub mod combel;
pub mod error;
pub mod kahler;
pub mod ratlin;
pub mod schurkit;
pub mod snrep;
pub mod spaces;

pub use error::{Error, Result};
