//! Dense matrices over the Gaussian rationals.
//!
//! Public operations use 1-based row and column indices; storage is row-major.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Largest dimension the front ends accept unless configured otherwise.
/// Minor sums grow combinatorially with the dimension.
pub const DEFAULT_MAX_DIM: usize = 10;

/// The index `k` of a square matrix together with `r = rank A^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexProfile {
    pub k: usize,
    pub r: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl CMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "CMatrix::new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    /// Builds a matrix from a function of the 1-based position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                op: "CMatrix::from_rows",
                left: (n, m),
                right: (1, bad.len()),
            });
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from Gaussian-integer pairs `(re, im)`.
    pub fn from_gaussian_ints<R: AsRef<[(i64, i64)]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&p| p.into()).collect())
            .collect();
        Self::from_rows(rows).expect("ragged rows")
    }

    /// Builds an `n x 1` matrix.
    pub fn column_vector(entries: Vec<GaussianRational>) -> Result<Self> {
        let n = entries.len();
        Self::new(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    #[inline]
    pub(crate) fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut GaussianRational {
        &mut self.data[r * self.cols + c]
    }

    /// Column `j` (1-based).
    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        assert!((1..=self.cols).contains(&j), "column {j} outside 1..={}", self.cols);
        (0..self.rows).map(|r| self.at(r, j - 1).clone()).collect()
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> Vec<GaussianRational> {
        assert!((1..=self.rows).contains(&i), "row {i} outside 1..={}", self.rows);
        self.data[(i - 1) * self.cols..i * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact product `self * rhs`.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for s in 0..self.cols {
                let a = self.at(r, s);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(s, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: &'static str,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `self^p` by repeated squaring; `p = 0` gives the identity.
    pub fn pow(&self, p: usize) -> Result<Self> {
        let n = self.require_square("mat_pow")?;
        let mut result = Self::identity(n);
        let mut base = self.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn det(&self) -> Result<GaussianRational> {
        let n = self.require_square("det")?;
        Ok(det_rows(self.to_row_vecs(), n))
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(&mut self.to_row_vecs(), self.cols).rank
    }

    /// Inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square("inverse")?;
        let mut aug: Vec<Vec<GaussianRational>> = (0..n)
            .map(|r| {
                let mut row = self.data[r * n..(r + 1) * n].to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].inv()?;
            for x in aug[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r == col || aug[r][col].is_zero() {
                    continue;
                }
                let factor = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                    *x -= &(&factor * p);
                }
            }
        }
        Self::new(n, n, aug.into_iter().flat_map(|r| r.into_iter().skip(n)).collect())
    }

    /// Copy with column `j` (1-based) replaced by `b`.
    pub fn replace_col(&self, j: usize, b: &[GaussianRational]) -> Result<Self> {
        check_index("column", j, self.cols)?;
        check_len("replace_col", b.len(), self.rows)?;
        let mut out = self.clone();
        for (r, v) in b.iter().enumerate() {
            *out.at_mut(r, j - 1) = v.clone();
        }
        Ok(out)
    }

    /// Copy with row `i` (1-based) replaced by `b`.
    pub fn replace_row(&self, i: usize, b: &[GaussianRational]) -> Result<Self> {
        check_index("row", i, self.rows)?;
        check_len("replace_row", b.len(), self.cols)?;
        let mut out = self.clone();
        out.data[(i - 1) * self.cols..i * self.cols].clone_from_slice(b);
        Ok(out)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j <= self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `self` stacked on top of `rhs`.
    pub fn vstack(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Self::new(self.rows + rhs.rows, self.cols, data)
    }

    fn to_row_vecs(&self) -> Vec<Vec<GaussianRational>> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }
}

pub(crate) fn check_index(what: &'static str, value: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, value, max })
    }
}

pub(crate) fn check_len(op: &'static str, got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            left: (want, 1),
            right: (got, 1),
        })
    }
}

/// `R(m) ⊆ R(n)`: the columns of `m` lie in the column space of `n`.
pub fn range_contained(m: &CMatrix, n: &CMatrix) -> Result<bool> {
    Ok(n.hstack(m)?.rank() == n.rank())
}

/// `N(m) ⊇ N(n_of)`: every null vector of `n_of` is a null vector of `m`,
/// i.e. the rows of `m` lie in the row space of `n_of`.
pub fn nullspace_contained(n_of: &CMatrix, m: &CMatrix) -> Result<bool> {
    Ok(n_of.vstack(m)?.rank() == n_of.rank())
}

struct Echelon {
    rank: usize,
    /// Product of the row-swap signs, as `true` for an odd permutation.
    odd: bool,
    /// The last Bareiss pivot, equal to `±det` for a full-rank square input.
    last_pivot: GaussianRational,
}

/// In-place fraction-free (Bareiss) elimination to row echelon form.
///
/// Each update `a[i][j] = (a[i][j]*p - a[i][c]*a[row][j]) / prev` is an exact
/// division, so entries stay minors of the input.
fn bareiss_echelon(a: &mut [Vec<GaussianRational>], cols: usize) -> Echelon {
    let rows = a.len();
    let mut prev = GaussianRational::one();
    let mut row = 0;
    let mut odd = false;
    for c in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if p != row {
            a.swap(p, row);
            odd = !odd;
        }
        let prev_inv = prev.inv().expect("bareiss pivots are nonzero");
        for i in row + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let v = &(&a[i][j] * &a[row][c]) - &(&lead * &a[row][j]);
                a[i][j] = &v * &prev_inv;
            }
            a[i][c] = GaussianRational::zero();
        }
        prev = a[row][c].clone();
        row += 1;
    }
    Echelon {
        rank: row,
        odd,
        last_pivot: prev,
    }
}

fn det_rows(mut rows: Vec<Vec<GaussianRational>>, n: usize) -> GaussianRational {
    let e = bareiss_echelon(&mut rows, n);
    if e.rank < n {
        GaussianRational::zero()
    } else if e.odd {
        -e.last_pivot
    } else {
        e.last_pivot
    }
}

/// Determinant of a small square matrix given as row vectors.
pub(crate) fn det_of(rows: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = rows.len();
    match n {
        0 => GaussianRational::one(),
        1 => rows[0][0].clone(),
        2 => &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]),
        _ => det_rows(rows, n),
    }
}

impl<'a> Mul<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    /// Panics on a dimension mismatch; see [`CMatrix::mat_mul`].
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.mat_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Add<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.chunks(self.cols).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
