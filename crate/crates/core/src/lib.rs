//! Exact construction, verification and exhaustive search of polynomials with
//! nonnegative coefficients that are identically 1 on the hyperplane
//! `x_1 + ... + x_n = 1`.
//!
//! Such a polynomial `p` with `N` terms is the same thing as a proper monomial
//! map from the unit sphere in C^n to the unit sphere in C^N: replace `x_j` by
//! `|z_j|²` and take square roots of the coefficients. Every computation is
//! done in exact rational arithmetic; floating point appears only in the
//! numeric sphere check of [`map::MonomialMap::check_sphere_numeric`].
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod families;
pub mod gaps;
pub mod json;
pub mod linalg;
pub mod map;
pub mod pell;
pub mod poly;
pub mod report;
pub mod search;

pub use error::{ConstructionError, FamilyError, GapError, PellError, PolyError, SearchError};
pub use map::MonomialMap;
pub use poly::{ExponentVector, Polynomial, Signature};
