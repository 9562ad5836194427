//! Exact arithmetic: rationals, polynomials, rational functions, and linear
//! systems over the rational function field.

mod linsolve;
mod poly;
mod ratfun;

pub use linsolve::solve_linear_system;
pub(crate) use poly::forward_owned;
pub use poly::Poly;
pub use ratfun::RatFun;
pub(crate) use ratfun::{is_sum, split_fraction};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("pole at {at}")]
    Pole { at: BigRat },
    #[error("singular system: no nonzero pivot in column {stage}")]
    Singular { stage: usize },
    #[error("shape mismatch: {rows}x{cols} matrix with right-hand side of length {rhs}")]
    Shape { rows: usize, cols: usize, rhs: usize },
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// Wire form of a rational: always `p/q`, with `q = 1` for integers.
pub fn rat_string(q: &BigRat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
