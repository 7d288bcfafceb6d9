//! Exact symbolic kernels for deciding σ-Galois groups of linear differential
//! equations over C(x), where the difference operator is the shift
//! σ(f(x)) = f(x+1) and the derivation is δ = d/dx.
//!
//! The crate is organized bottom-up:
//!
//! * [`gauss`]: arbitrary-precision Gaussian rationals Q(i), the coefficient
//!   field of every exact computation here.
//! * [`poly`] / [`ratfunc`]: dense univariate polynomials and reduced
//!   rational functions over Q(i), with δ, σ and root extraction.
//! * [`partfrac`]: partial fraction decompositions, the logarithmic part,
//!   rational antiderivatives, logarithmic-derivative and d-th-power tests.
//! * [`shiftrel`]: the shift-orbit cancellation machinery with complete
//!   classifiers for the σ-Galois groups of the three building-block
//!   equations (multiplicative, additive, cyclic) plus brute-force oracles.
//! * [`mpoly`] / [`groebner`] / [`diffpoly`]: an exact multivariate kernel
//!   with Buchberger's algorithm, used for truncated Zariski closures of
//!   difference algebraic groups and their dimensions.
//! * [`sgroups`]: σ-closed subgroups of GL_n with family constructors,
//!   σ-reduced/σ-connected predicates, generated-subgroup truncations.
//! * [`realize`]: realizability and non-realizability verdicts with
//!   certificate data: building-block equations, generator decompositions
//!   and cited criteria.

pub mod diffpoly;
pub mod gauss;
pub mod groebner;
pub mod mpoly;
pub mod partfrac;
pub mod poly;
pub mod ratfunc;
pub mod realize;
pub mod sgroups;
pub mod shiftrel;

use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero in K(x) or Q(i).
    DivisionByZero,
    /// A denominator (or numerator, where factorization is required) has an
    /// irreducible factor of degree >= 2 over Q(i); the input leaves the
    /// supported coefficient field.
    RequiresExtension,
    /// Cyclic order d < 2 (or d < 1 for the d-th power test).
    InvalidOrder,
    /// A family constructor received invalid parameters.
    InvalidParameter(String),
    /// A building block failed its own classifier self-check. This signals an
    /// implementation bug and aborts the construction.
    ClassifierMismatch(String),
    /// A Groebner computation hit the degree/size cap or its deadline.
    ResourceBudgetExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::RequiresExtension => {
                write!(f, "input does not split over Q(i); an extension field would be required")
            }
            Error::InvalidOrder => write!(f, "order must be at least 2"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::ClassifierMismatch(msg) => write!(f, "classifier self-check failed: {msg}"),
            Error::ResourceBudgetExceeded => write!(f, "resource budget exceeded"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
