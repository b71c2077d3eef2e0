//! Cramer-rule Drazin-inverse solutions of `AX = B`, `XA = B` and `AXB = D`.
//!
//! Each solver returns the Drazin-inverse solution (`A^D B`, `B A^D`,
//! `A^D D B^D`) whether or not the range/null-space restriction that makes it
//! the unique restricted solution holds; the flag in [`SolveReport`] says
//! which case applies.

use num_traits::Zero;

use crate::drazin::{require_square, Determinantal};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::matrix::{check_len, nullspace_contained, range_contained, CMatrix, IndexProfile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub x: CMatrix,
    /// `R(B) ⊆ R(A^k)`, `N(B) ⊇ N(A^k)`, or both hypotheses for `AXB = D`.
    pub restriction_satisfied: bool,
    pub profile_a: IndexProfile,
    pub profile_b: Option<IndexProfile>,
    /// Common denominator of every entry of `x`.
    pub denominator: GaussianRational,
    /// `A^k B`, `B A^k` or `A^{k1} D B^{k2}`: the matrix whose columns or rows
    /// feed the minor sums.
    pub transformed_rhs: CMatrix,
    /// For `AXB = D`: the column vectors `d^B_{.j}`, one per column of `X`.
    pub d_b_columns: Option<Vec<Vec<GaussianRational>>>,
    /// For `AXB = D`: the row vectors `d^A_{i.}`, one per row of `X`.
    pub d_a_rows: Option<Vec<Vec<GaussianRational>>>,
}

fn mismatch(op: &'static str, left: &CMatrix, right: &CMatrix) -> Error {
    Error::DimensionMismatch {
        op,
        left: left.shape(),
        right: right.shape(),
    }
}

/// `X = A^D B` with `x_ij` from minors of `A^{k+1}` with column `i`
/// replaced by column `j` of `A^k B`.
pub fn solve_ax(a: &CMatrix, b: &CMatrix) -> Result<SolveReport> {
    let n = require_square(a, "solve_ax")?;
    if b.rows() != n {
        return Err(mismatch("solve_ax", a, b));
    }
    let det = Determinantal::new(a)?;
    let b_hat = &det.power_k * b;
    let x = det.col_form(&b_hat)?;
    Ok(SolveReport {
        x,
        restriction_satisfied: range_contained(b, &det.power_k)?,
        profile_a: det.profile,
        profile_b: None,
        denominator: det.denominator,
        transformed_rhs: b_hat,
        d_b_columns: None,
        d_a_rows: None,
    })
}

/// `x = A^D y` for a single right-hand side, through `f = A^k y`.
pub fn solve_vector(a: &CMatrix, y: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    let n = require_square(a, "solve_vector")?;
    check_len("solve_vector", y.len(), n)?;
    let det = Determinantal::new(a)?;
    let f = &det.power_k * &CMatrix::column_vector(y.to_vec())?;
    let f = f.column(1);
    (1..=n)
        .map(|j| det.col_numerator(j, &f)?.checked_div(&det.denominator))
        .collect()
}

/// `X = B A^D` with `x_ij` from minors of `A^{k+1}` with row `j` replaced by
/// row `i` of `B A^k`.
pub fn solve_xa(a: &CMatrix, b: &CMatrix) -> Result<SolveReport> {
    let m = require_square(a, "solve_xa")?;
    if b.cols() != m {
        return Err(mismatch("solve_xa", a, b));
    }
    let det = Determinantal::new(a)?;
    let b_check = b * &det.power_k;
    let x = det.row_form(&b_check)?;
    Ok(SolveReport {
        x,
        restriction_satisfied: nullspace_contained(&det.power_k, b)?,
        profile_a: det.profile,
        profile_b: None,
        denominator: det.denominator,
        transformed_rhs: b_check,
        d_b_columns: None,
        d_a_rows: None,
    })
}

/// `X = A^D D B^D`, evaluated along both the `d^B` column route and the `d^A`
/// row route. The two must agree exactly.
pub fn solve_axb(a: &CMatrix, b: &CMatrix, d: &CMatrix) -> Result<SolveReport> {
    let n = require_square(a, "solve_axb")?;
    let m = require_square(b, "solve_axb")?;
    if d.shape() != (n, m) {
        return Err(Error::DimensionMismatch {
            op: "solve_axb",
            left: (n, m),
            right: d.shape(),
        });
    }
    let det_a = Determinantal::new(a)?;
    let det_b = Determinantal::new(b)?;
    let d_tilde = &(&det_a.power_k * d) * &det_b.power_k;
    let denominator = &det_a.denominator * &det_b.denominator;

    // d^B_{.j}[l]: minors of B^{k2+1} through j with row j set to row l of D̃
    let d_b_columns = (1..=m)
        .map(|j| {
            (1..=n)
                .map(|l| det_b.row_numerator(j, &d_tilde.row(l)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    // d^A_{i.}[t]: minors of A^{k1+1} through i with column i set to column t of D̃
    let d_a_rows = (1..=n)
        .map(|i| {
            (1..=m)
                .map(|t| det_a.col_numerator(i, &d_tilde.column(t)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut entries = Vec::with_capacity(n * m);
    for i in 1..=n {
        for j in 1..=m {
            let via_columns = det_a.col_numerator(i, &d_b_columns[j - 1])?;
            let via_rows = det_b.row_numerator(j, &d_a_rows[i - 1])?;
            if via_columns != via_rows {
                return Err(Error::RepresentationMismatch { row: i, col: j });
            }
            entries.push(via_columns.checked_div(&denominator)?);
        }
    }
    let x = CMatrix::new(n, m, entries)?;
    let restriction_satisfied = range_contained(d, &det_a.power_k)? && nullspace_contained(&det_b.power_k, d)?;
    Ok(SolveReport {
        x,
        restriction_satisfied,
        profile_a: det_a.profile,
        profile_b: Some(det_b.profile),
        denominator,
        transformed_rhs: d_tilde,
        d_b_columns: Some(d_b_columns),
        d_a_rows: Some(d_a_rows),
    })
}

impl SolveReport {
    /// Whether `x` has any nonzero entry.
    pub fn is_trivial(&self) -> bool {
        self.x.entries().iter().all(Zero::is_zero)
    }
}
