//! Exact scalars: Gaussian rationals and polynomials over them.

mod gaussian;
mod poly;

pub use gaussian::{format_rational, gr_arith, parse_rational, ArithOp, GaussianRational};
pub use poly::{poly_limit_at_zero, ScalarPolynomial};
