use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse outcome class of an error, used by front ends to pick an exit
/// status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input or a violated precondition.
    Input,
    /// A definite negative answer (not parametrizable by the requested
    /// method, hypothesis of a theorem fails, ...).
    Negative,
    /// A bounded search or an elimination could not decide.
    Inconclusive,
    /// The computation contradicts a theorem; always a bug.
    Contradiction,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    InvalidInput(String),
    #[error("incompatible quadratic fields: sqrt({0}) and sqrt({1})")]
    IncompatibleField(i64, i64),
    #[error("{0} must be nonzero")]
    ZeroPolynomial(&'static str),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} exceeds the configured cap {cap}; raise --degree-cap to proceed")]
    DegreeCap { degree: usize, cap: usize },
    #[error("search budget exhausted: {0}")]
    BudgetExceeded(String),
    #[error("point {0} does not lie on the curve")]
    NotOnCurve(String),
    #[error("curve is not squarefree (it has a repeated component)")]
    NotSquarefree,
    #[error("curve has a linear component {0}")]
    Reducible(String),
    #[error("unresolved cluster of singular points of degree {0}")]
    UnresolvedCluster(usize),
    #[error("singular point {point} has multiplicity {multiplicity}; only double points are supported")]
    HigherMultiplicity { point: String, multiplicity: usize },
    #[error("{found} double points exceed the bound {bound} for an irreducible curve")]
    TooManyDoublePoints { found: usize, bound: usize },
    #[error("polynomials have degree 0 in {0}")]
    DegreeZeroIn(String),
    #[error("the resultant vanishes identically: the map components share a factor")]
    ResultantVanishes,
    #[error("the map is constant")]
    ConstantMap,
    #[error("the map does not parametrize the curve")]
    NotAParametrization,
    #[error("{0}")]
    MethodInapplicable(String),
    #[error("no rational point of height <= {bound} on the conic {conic}")]
    NoRationalPoint { conic: String, bound: u64 },
    #[error("theorem contradiction: {0}")]
    Contradiction(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse(_) | InvalidInput(_) | IncompatibleField(..) | ZeroPolynomial(_) | NotHomogeneous
            | DegreeCap { .. } | NotOnCurve(_) | NotSquarefree | DegreeZeroIn(_)
            | ResultantVanishes => ErrorClass::Input,
            ConstantMap | NotAParametrization | Reducible(_) | MethodInapplicable(_)
            | TooManyDoublePoints { .. } => ErrorClass::Negative,
            BudgetExceeded(_) | UnresolvedCluster(_) | HigherMultiplicity { .. }
            | NoRationalPoint { .. } => ErrorClass::Inconclusive,
            Contradiction(_) => ErrorClass::Contradiction,
        }
    }
}
