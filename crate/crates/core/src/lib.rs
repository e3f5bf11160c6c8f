//! Exact computations on plane algebraic curves over ℚ: singular points and
//! genus, rational parametrizations, implicitization by resultants, and
//! re-checkable certificates for non-parametrizability and for polynomial
//! Diophantine problems (Mason–Stothers, polynomial Pell, local solvability).

pub mod diophantine;
pub mod error;
pub mod parametrize;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod scalar;
pub mod singular;

pub use error::{Error, ErrorClass, Result};
pub use scalar::{Field, QuadExt, Rat};
