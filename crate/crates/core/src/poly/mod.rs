//! Exact polynomial arithmetic: univariate, binary forms and three-variable
//! polynomials, with gcds, factorization and the bivariate gcd used for
//! squarefreeness tests.

pub mod binary;
pub mod bivariate;
pub mod factor;
pub mod tri;
pub mod uni;

pub use binary::{substitute_forms, BinaryForm};
pub use factor::{kronecker_factor, Factorization, KroneckerConfig};
pub use tri::{Mono, TriPoly};
pub use uni::UniPoly;

/// Slot indices of the projective coordinates.
pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
