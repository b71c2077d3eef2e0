//! Drazin and group inverses by Cramer-type minor sums.
//!
//! With `k = Ind A`, `r = rank A^k` and `d_r` the sum of the order-`r`
//! principal minors of `A^{k+1}`, the column form of entry `(i, j)` is the
//! sum of order-`r` principal minors through `i` of `A^{k+1}` with column `i`
//! replaced by column `j` of `A^k`, divided by `d_r`. The row form replaces
//! row `j` of `A^{k+1}` by row `i` of `A^k`. Both are checked against an
//! independent evaluation of `lim_{λ→0} (λI + A^{k+1})^{-1} A^k` over
//! polynomials in `λ`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{poly_limit_at_zero, GaussianRational, ScalarPolynomial};
use crate::matrix::{CMatrix, IndexProfile};
use crate::minors::{sum_minors_col_replaced, sum_minors_row_replaced, sum_principal_minors};

/// Which evaluation produced a [`DrazinResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Column,
    Row,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Column => "column",
            Method::Row => "row",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: CMatrix,
    pub profile: IndexProfile,
    /// `d_r`, shared by every entry. Equals 1 (the empty minor) when `r = 0`.
    pub denominator: GaussianRational,
    pub method: Method,
}

/// Powers and the common denominator every determinantal formula needs.
#[derive(Debug, Clone)]
pub(crate) struct Determinantal {
    pub profile: IndexProfile,
    /// `A^k`
    pub power_k: CMatrix,
    /// `A^{k+1}`
    pub power_k1: CMatrix,
    pub denominator: GaussianRational,
}

impl Determinantal {
    pub fn new(a: &CMatrix) -> Result<Self> {
        let profile = index_of(a)?;
        let power_k = a.pow(profile.k)?;
        let power_k1 = &power_k * a;
        let denominator = if profile.r == 0 {
            GaussianRational::one()
        } else {
            sum_principal_minors(&power_k1, profile.r)?
        };
        // rank A^{k+1} = r forces d_r != 0
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            profile,
            power_k,
            power_k1,
            denominator,
        })
    }

    pub fn n(&self) -> usize {
        self.power_k.rows()
    }

    /// Column-form numerator: minors through `i` of `A^{k+1}` with column `i` set to `b`.
    pub fn col_numerator(&self, i: usize, b: &[GaussianRational]) -> Result<GaussianRational> {
        if self.profile.r == 0 {
            return Ok(GaussianRational::zero());
        }
        sum_minors_col_replaced(&self.power_k1, i, b, self.profile.r)
    }

    /// Row-form numerator: minors through `j` of `A^{k+1}` with row `j` set to `b`.
    pub fn row_numerator(&self, j: usize, b: &[GaussianRational]) -> Result<GaussianRational> {
        if self.profile.r == 0 {
            return Ok(GaussianRational::zero());
        }
        sum_minors_row_replaced(&self.power_k1, j, b, self.profile.r)
    }

    /// Matrix with entry `(i, j) = col_numerator(i, rhs column j) / d_r`.
    /// Linear in `rhs`, and `col_form(A^k Y) = A^D Y`.
    pub fn col_form(&self, rhs: &CMatrix) -> Result<CMatrix> {
        let n = self.n();
        let columns: Vec<_> = (1..=rhs.cols()).map(|j| rhs.column(j)).collect();
        let mut out = Vec::with_capacity(n * rhs.cols());
        for i in 1..=n {
            for col in &columns {
                out.push(self.col_numerator(i, col)?.checked_div(&self.denominator)?);
            }
        }
        CMatrix::new(n, rhs.cols(), out)
    }

    /// Matrix with entry `(i, j) = row_numerator(j, rhs row i) / d_r`;
    /// `row_form(Y A^k) = Y A^D`.
    pub fn row_form(&self, rhs: &CMatrix) -> Result<CMatrix> {
        let n = self.n();
        let mut out = Vec::with_capacity(rhs.rows() * n);
        for i in 1..=rhs.rows() {
            let row = rhs.row(i);
            for j in 1..=n {
                out.push(self.row_numerator(j, &row)?.checked_div(&self.denominator)?);
            }
        }
        CMatrix::new(rhs.rows(), n, out)
    }

    fn result(&self, inverse: CMatrix, method: Method) -> DrazinResult {
        DrazinResult {
            inverse,
            profile: self.profile,
            denominator: self.denominator.clone(),
            method,
        }
    }
}

pub(crate) fn require_square(a: &CMatrix, op: &'static str) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            op,
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Smallest `k` with `rank A^{k+1} = rank A^k`, and that rank.
pub fn index_of(a: &CMatrix) -> Result<IndexProfile> {
    let n = require_square(a, "index_of")?;
    let mut power = CMatrix::identity(n);
    let mut rank = n;
    for k in 0..=n {
        let next = &power * a;
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok(IndexProfile { k, r: rank });
        }
        power = next;
        rank = next_rank;
    }
    unreachable!("rank sequence of powers stabilizes within n steps")
}

/// Drazin inverse from the column-replacement minor sums. `k = 0` reduces
/// to Cramer's rule for `A^{-1}`; `r = 0` (nilpotent `A`) gives zero.
pub fn drazin_col(a: &CMatrix) -> Result<DrazinResult> {
    let det = Determinantal::new(a)?;
    let inverse = det.col_form(&det.power_k)?;
    Ok(det.result(inverse, Method::Column))
}

/// Drazin inverse from the row-replacement minor sums.
pub fn drazin_row(a: &CMatrix) -> Result<DrazinResult> {
    let det = Determinantal::new(a)?;
    let inverse = det.row_form(&det.power_k)?;
    Ok(det.result(inverse, Method::Row))
}

/// The index profile and the common denominator `d_r` without computing
/// any numerator.
pub fn drazin_denominator(a: &CMatrix) -> Result<(IndexProfile, GaussianRational)> {
    let det = Determinantal::new(a)?;
    Ok((det.profile, det.denominator))
}

/// Group inverse, defined for matrices of index at most one.
pub fn group_inverse(a: &CMatrix) -> Result<DrazinResult> {
    let det = Determinantal::new(a)?;
    if det.profile.k > 1 {
        return Err(Error::IndexTooLarge(det.profile.k));
    }
    let inverse = det.col_form(&det.power_k)?;
    Ok(det.result(inverse, Method::Column))
}

/// `A^D A`, from minors of `A^{k+1}` with a column replaced by a column of `A^{k+1}`.
pub fn proj_ada(a: &CMatrix) -> Result<CMatrix> {
    let det = Determinantal::new(a)?;
    det.col_form(&det.power_k1)
}

/// `A A^D`, from minors of `A^{k+1}` with a row replaced by a row of `A^{k+1}`.
pub fn proj_aad(a: &CMatrix) -> Result<CMatrix> {
    let det = Determinantal::new(a)?;
    det.row_form(&det.power_k1)
}

/// Which side of `(λI + A^{k+1})^{-1}` the factor `A^k` sits on in the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitSide {
    /// `lim (λI + A^{k+1})^{-1} A^k`
    Right,
    /// `lim A^k (λI + A^{k+1})^{-1}`
    Left,
}

/// `A^D` as the entrywise limit `λ → 0` of `(λI + A^{k+1})^{-1} A^k`,
/// evaluated symbolically through the adjugate of `λI + A^{k+1}`.
pub fn drazin_oracle(a: &CMatrix) -> Result<CMatrix> {
    drazin_oracle_with(a, LimitSide::Right)
}

pub fn drazin_oracle_with(a: &CMatrix, side: LimitSide) -> Result<CMatrix> {
    let n = require_square(a, "drazin_oracle")?;
    let profile = index_of(a)?;
    let power_k = a.pow(profile.k)?;
    let power_k1 = &power_k * a;

    // λI + A^{k+1}, entries as polynomials in λ
    let shifted: Vec<Vec<ScalarPolynomial>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let constant = ScalarPolynomial::constant(power_k1.at(r, c).clone());
                    if r == c {
                        &constant + &ScalarPolynomial::monomial(GaussianRational::one(), 1)
                    } else {
                        constant
                    }
                })
                .collect()
        })
        .collect();
    let det = poly_det(shifted.clone())?;
    let adj = poly_adjugate(&shifted)?;

    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let num = (0..n).fold(ScalarPolynomial::zero(), |acc, s| {
                let term = match side {
                    LimitSide::Right => adj[i][s].scale(power_k.at(s, j)),
                    LimitSide::Left => adj[s][j].scale(power_k.at(i, s)),
                };
                &acc + &term
            });
            out.push(poly_limit_at_zero(&num, &det)?);
        }
    }
    CMatrix::new(n, n, out)
}

/// Fraction-free elimination over the polynomial ring; every division is exact.
fn poly_det(mut a: Vec<Vec<ScalarPolynomial>>) -> Result<ScalarPolynomial> {
    let n = a.len();
    if n == 0 {
        return Ok(ScalarPolynomial::one());
    }
    let mut prev = ScalarPolynomial::one();
    let mut negate = false;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Ok(ScalarPolynomial::zero());
        };
        if p != c {
            a.swap(p, c);
            negate = !negate;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = &(&a[i][j] * &a[c][c]) - &(&a[i][c] * &a[c][j]);
                a[i][j] = v.div_exact(&prev)?;
            }
            a[i][c] = ScalarPolynomial::zero();
        }
        prev = a[c][c].clone();
    }
    Ok(if negate { -&prev } else { prev })
}

/// `adj(P)[i][j] = (-1)^{i+j} det(P without row j and column i)`.
fn poly_adjugate(p: &[Vec<ScalarPolynomial>]) -> Result<Vec<Vec<ScalarPolynomial>>> {
    let n = p.len();
    let mut adj = vec![vec![ScalarPolynomial::zero(); n]; n];
    for (i, adj_row) in adj.iter_mut().enumerate() {
        for (j, slot) in adj_row.iter_mut().enumerate() {
            let minor: Vec<Vec<ScalarPolynomial>> = p
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = poly_det(minor)?;
            *slot = if (i + j) % 2 == 0 { d } else { -&d };
        }
    }
    Ok(adj)
}

/// Outcome of substituting a candidate into the Drazin equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrazinAxioms {
    pub profile: IndexProfile,
    /// `A^{k+1} X = A^k`
    pub power_left: bool,
    /// `X A X = X`
    pub outer: bool,
    /// `A X = X A`
    pub commutes: bool,
    /// `X A^{k+1} = A^k`
    pub power_right: bool,
}

impl DrazinAxioms {
    pub fn all_hold(&self) -> bool {
        self.power_left && self.outer && self.commutes && self.power_right
    }
}

pub fn verify_drazin(a: &CMatrix, x: &CMatrix) -> Result<DrazinAxioms> {
    let n = require_square(a, "verify_drazin")?;
    if x.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            op: "verify_drazin",
            left: a.shape(),
            right: x.shape(),
        });
    }
    let profile = index_of(a)?;
    let power_k = a.pow(profile.k)?;
    let power_k1 = &power_k * a;
    let ax = a * x;
    Ok(DrazinAxioms {
        profile,
        power_left: &power_k1 * x == power_k,
        outer: &(x * a) * x == *x,
        commutes: ax == x * a,
        power_right: x * &power_k1 == power_k,
    })
}
