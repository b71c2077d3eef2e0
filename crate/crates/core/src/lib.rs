//! Exact determinantal (Cramer-rule) representations of the Drazin and group
//! inverses over the Gaussian rationals, with the restricted matrix equations
//! and singular linear matrix ODEs they solve.

pub mod drazin;
pub mod error;
pub mod exactnum;
pub mod matrix;
pub mod minors;
pub mod ode;
pub mod solvers;

pub use drazin::{
    drazin_col, drazin_denominator, drazin_oracle, drazin_oracle_with, drazin_row, group_inverse, index_of, proj_aad,
    proj_ada, verify_drazin, DrazinAxioms, DrazinResult, LimitSide, Method,
};
pub use error::{Error, Result};
pub use exactnum::{GaussianRational, ScalarPolynomial};
pub use matrix::{CMatrix, IndexProfile};
pub use ode::{ode_left_partial, ode_right_partial, residual_left, residual_right, MatrixPolynomial};
pub use solvers::{solve_ax, solve_axb, solve_vector, solve_xa, SolveReport};
