//! Definite sums over factorial bases.
//!
//! Given a recurrence operator `L` in `n` and a factorial basis built from
//! products of binomial coefficients `C(a_i n + b_i, k)`, this crate computes a
//! recurrence operator `L'` in `k` such that every sequence `h` annihilated by
//! `L'` (with suitable initial values) yields a solution
//! `y(n) = sum_k h(k) P_k(n)` of `L y = 0`.
//!
//! ```
//! use defsum::{parse_operator, reduce_first_column, BasisSpec};
//!
//! // central binomial coefficients: sum_k C(n, k)^2
//! let l = parse_operator("(n+1)*E - 2*(2*n+1)").unwrap();
//! let basis = BasisSpec::from_ints(&[1, 1], &[0, 0]).unwrap();
//! let r = reduce_first_column(&l, &basis).unwrap();
//! assert_eq!(r.lprime.to_string(), "E - 1");
//! ```

pub mod arith;
pub mod basis;
pub mod oracle;
pub mod ore;
pub mod reducer;
pub mod syntax;

pub use arith::{ArithError, BigRat, Poly, RatFun};
pub use basis::{BasisError, BasisSpec, CompatReport, ExpansionTable};
pub use oracle::{unroll, verify_solution, KernelSpec, OracleError, Sequence, VerifyReport};
pub use ore::{gcrd, OreError, OreOp, Var};
pub use reducer::{reduce_first_column, reduce_full_matrix, InputOperator, OpMatrix, ReduceError, Reducer, ReductionResult};
pub use syntax::{parse_operator, parse_ore, ParseError};
