//! Exact rational scalars, sparse multivariate Laurent polynomials and
//! fraction-free linear algebra.

mod linalg;
mod poly;
mod scalar;
mod var;

pub use linalg::{solve_linear, LinearSolveReport, QEchelon, RatFn};
pub use poly::{Exp, Monomial, Poly, TermAccumulator};
pub use scalar::Scalar;
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactAlgError {
    #[error("division is not exact, remainder {remainder}")]
    NotDivisible { remainder: Poly },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{var} carries a negative exponent but its substitute is not a single term")]
    NegativeExponentOnNonLaurent { var: Var },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}
