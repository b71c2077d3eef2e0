//! Polynomial partial solutions of `X' + AX = B` and `X' + XA = B` for
//! singular `A`, and the residual checks that certify them.
//!
//! With `k = Ind A` the left solution is
//! `X(t) = A^D B + Σ_{m=1..k} ((-1)^{m-1}/m!) (A^{m-1} B - A^D A^m B) t^m`.
//! Every `A^D`-product is evaluated from minors of `A^{k+1}` with a column
//! (or, on the right, a row) replaced by one of `A^{k+m} B` (`B A^{k+m}`).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::drazin::{require_square, Determinantal};
use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, ScalarPolynomial};
use crate::matrix::CMatrix;

/// A matrix-valued polynomial `Σ C_m t^m`, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixPolynomial {
    rows: usize,
    cols: usize,
    coeffs: Vec<CMatrix>,
    var: char,
}

impl MatrixPolynomial {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            coeffs: Vec::new(),
            var: 't',
        }
    }

    pub fn constant(c: CMatrix) -> Self {
        let (rows, cols) = c.shape();
        Self::from_parts(rows, cols, vec![c])
    }

    /// All coefficients must be `rows × cols`; trailing zero matrices are dropped.
    pub fn from_coeffs(rows: usize, cols: usize, coeffs: Vec<CMatrix>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.shape() != (rows, cols)) {
            return Err(Error::DimensionMismatch {
                op: "MatrixPolynomial::from_coeffs",
                left: (rows, cols),
                right: bad.shape(),
            });
        }
        Ok(Self::from_parts(rows, cols, coeffs))
    }

    fn from_parts(rows: usize, cols: usize, mut coeffs: Vec<CMatrix>) -> Self {
        while coeffs.last().is_some_and(CMatrix::is_zero) {
            coeffs.pop();
        }
        Self {
            rows,
            cols,
            coeffs,
            var: 't',
        }
    }

    /// Same polynomial printed with a different variable name.
    pub fn with_variable(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn variable(&self) -> char {
        self.var
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn coeffs(&self) -> &[CMatrix] {
        &self.coeffs
    }

    /// Coefficient of `t^m`; the zero matrix beyond the degree.
    pub fn coeff(&self, m: usize) -> CMatrix {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| CMatrix::zeros(self.rows, self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Entry `(i, j)` (1-based) as a scalar polynomial.
    pub fn entry(&self, i: usize, j: usize) -> ScalarPolynomial {
        ScalarPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.get(i, j).clone()).collect())
    }

    pub fn eval(&self, t: &GaussianRational) -> CMatrix {
        self.coeffs
            .iter()
            .rev()
            .fold(CMatrix::zeros(self.rows, self.cols), |acc, c| &acc.scale(t) + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c.scale(&GaussianRational::from(m as i64)))
            .collect();
        Self::from_parts(self.rows, self.cols, coeffs).with_variable(self.var)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, "MatrixPolynomial::add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, "MatrixPolynomial::sub", |a, b| a - b)
    }

    fn zip(&self, rhs: &Self, op: &'static str, f: impl Fn(&CMatrix, &CMatrix) -> CMatrix) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|m| f(&self.coeff(m), &rhs.coeff(m))).collect();
        Ok(Self::from_parts(self.rows, self.cols, coeffs).with_variable(self.var))
    }

    /// `M · X(t)`.
    pub fn left_mul(&self, m: &CMatrix) -> Result<Self> {
        if m.cols() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "MatrixPolynomial::left_mul",
                left: m.shape(),
                right: self.shape(),
            });
        }
        let coeffs = self.coeffs.iter().map(|c| m.mat_mul(c)).collect::<Result<_>>()?;
        Ok(Self::from_parts(m.rows(), self.cols, coeffs).with_variable(self.var))
    }

    /// `X(t) · M`.
    pub fn right_mul(&self, m: &CMatrix) -> Result<Self> {
        if self.cols != m.rows() {
            return Err(Error::DimensionMismatch {
                op: "MatrixPolynomial::right_mul",
                left: self.shape(),
                right: m.shape(),
            });
        }
        let coeffs = self.coeffs.iter().map(|c| c.mat_mul(m)).collect::<Result<_>>()?;
        Ok(Self::from_parts(self.rows, m.cols(), coeffs).with_variable(self.var))
    }

    pub fn transpose(&self) -> Self {
        Self::from_parts(
            self.cols,
            self.rows,
            self.coeffs.iter().map(CMatrix::transpose).collect(),
        )
        .with_variable(self.var)
    }
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 ({}x{})", self.rows, self.cols);
        }
        for i in 1..=self.rows {
            let cells: Vec<String> = (1..=self.cols)
                .map(|j| self.entry(i, j).to_string().replace('x', &self.var.to_string()))
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(-1)^{m-1} / m!`
fn series_weight(m: usize) -> GaussianRational {
    let fact: BigInt = (1..=m).map(BigInt::from).product();
    let sign = if m % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    GaussianRational::real(BigRational::new(sign, fact))
}

/// Partial solution (`G = 0`) of `X' + AX = B`. `B` may be any `n × p`.
pub fn ode_left_partial(a: &CMatrix, b: &CMatrix) -> Result<MatrixPolynomial> {
    let n = require_square(a, "ode_left_partial")?;
    if b.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "ode_left_partial",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let det = Determinantal::new(a)?;
    let k = det.profile.k;
    // powers[m] = A^m B for m < k
    let mut powers = vec![b.clone()];
    for m in 1..k {
        powers.push(a * &powers[m - 1]);
    }
    // A^k B is the column source for A^D B; A^{k+m} B for A^D A^m B
    let mut high = &det.power_k * b;
    let mut coeffs = vec![det.col_form(&high)?];
    for m in 1..=k {
        high = a * &high;
        let projected = det.col_form(&high)?;
        coeffs.push((&powers[m - 1] - &projected).scale(&series_weight(m)));
    }
    MatrixPolynomial::from_coeffs(n, b.cols(), coeffs)
}

/// Partial solution (`G = 0`) of `X' + XA = B`. `B` may be any `p × n`.
pub fn ode_right_partial(a: &CMatrix, b: &CMatrix) -> Result<MatrixPolynomial> {
    let n = require_square(a, "ode_right_partial")?;
    if b.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "ode_right_partial",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let det = Determinantal::new(a)?;
    let k = det.profile.k;
    let mut powers = vec![b.clone()];
    for m in 1..k {
        powers.push(&powers[m - 1] * a);
    }
    let mut high = b * &det.power_k;
    let mut coeffs = vec![det.row_form(&high)?];
    for m in 1..=k {
        high = &high * a;
        let projected = det.row_form(&high)?;
        coeffs.push((&powers[m - 1] - &projected).scale(&series_weight(m)));
    }
    MatrixPolynomial::from_coeffs(b.rows(), n, coeffs)
}

/// `X'(t) + A X(t) - B`.
pub fn residual_left(a: &CMatrix, b: &CMatrix, x: &MatrixPolynomial) -> Result<MatrixPolynomial> {
    x.derivative()
        .checked_add(&x.left_mul(a)?)?
        .checked_sub(&MatrixPolynomial::constant(b.clone()))
}

/// `X'(t) + X(t) A - B`.
pub fn residual_right(a: &CMatrix, b: &CMatrix, x: &MatrixPolynomial) -> Result<MatrixPolynomial> {
    x.derivative()
        .checked_add(&x.right_mul(a)?)?
        .checked_sub(&MatrixPolynomial::constant(b.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::drazin_oracle;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn m(rows: &[&[(i64, i64)]]) -> CMatrix {
        CMatrix::from_gaussian_ints(rows)
    }

    fn q(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    fn ex2() -> (CMatrix, CMatrix) {
        (
            m(&[
                &[(1, 0), (-1, 0), (1, 0)],
                &[(0, 1), (0, -1), (0, 1)],
                &[(-1, 0), (1, 0), (2, 0)],
            ]),
            m(&[
                &[(1, 0), (0, 1), (1, 0)],
                &[(0, 1), (0, 0), (1, 0)],
                &[(1, 0), (0, 1), (0, 0)],
            ]),
        )
    }

    /// The closed form evaluated with plain products against the limit oracle.
    fn direct_left(a: &CMatrix, b: &CMatrix) -> MatrixPolynomial {
        let ad = drazin_oracle(a).unwrap();
        let k = crate::drazin::index_of(a).unwrap().k;
        let mut coeffs = vec![&ad * b];
        for mm in 1..=k {
            let term = &(&a.pow(mm - 1).unwrap() * b) - &(&(&ad * &a.pow(mm).unwrap()) * b);
            coeffs.push(term.scale(&series_weight(mm)));
        }
        MatrixPolynomial::from_coeffs(b.rows(), b.cols(), coeffs).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(series_weight(1), GaussianRational::one());
        assert_eq!(series_weight(2), GaussianRational::from_ratio(-1, 2));
        assert_eq!(series_weight(3), GaussianRational::from_ratio(1, 6));
    }

    #[test]
    fn example_two_entries() {
        let (a, b) = ex2();
        let x = ode_left_partial(&a, &b).unwrap();
        assert_eq!(x.degree(), Some(1));
        let c0 = m(&[
            &[(1, 1), (-1, -1), (0, 0)],
            &[(-1, 1), (1, -1), (0, 0)],
            &[(4, 0), (-1, 3), (0, 0)],
        ])
        .scale(&GaussianRational::from_ratio(1, 6));
        assert_eq!(x.coeff(0), c0);
        let half = q((1, 2), (1, 2));
        let c1 = CMatrix::from_rows(vec![
            vec![0.into(), half.clone(), 1.into()],
            vec![0.into(), half, 1.into()],
            vec![0.into(), 0.into(), 0.into()],
        ])
        .unwrap();
        assert_eq!(x.coeff(1), c1);
        assert_eq!(
            x.entry(1, 2),
            ScalarPolynomial::from_coeffs(vec![q((-1, 6), (-1, 6)), q((1, 2), (1, 2))])
        );
        assert_eq!(
            x.entry(3, 1),
            ScalarPolynomial::constant(GaussianRational::from_ratio(2, 3))
        );
        assert_eq!(x.entry(1, 3), ScalarPolynomial::monomial(GaussianRational::one(), 1));
        assert!(residual_left(&a, &b, &x).unwrap().is_zero());
    }

    #[test]
    fn example_two_factored_display_disagrees() {
        // Pulling 1/6 out of the whole matrix, as the published display does,
        // leaves t in entries (1,3) and (2,3), i.e. t/6. The residual rejects that.
        let (a, b) = ex2();
        let x = ode_left_partial(&a, &b).unwrap();
        let mut c1 = x.coeff(1);
        let sixth = GaussianRational::from_ratio(1, 6);
        *c1.at_mut(0, 2) = sixth.clone();
        *c1.at_mut(1, 2) = sixth;
        let factored = MatrixPolynomial::from_coeffs(3, 3, vec![x.coeff(0), c1]).unwrap();
        assert_ne!(factored, x);
        assert!(!residual_left(&a, &b, &factored).unwrap().is_zero());
    }

    #[test]
    fn invertible_gives_constant() {
        let (_, d) = ex2();
        let b = m(&[
            &[(1, 0), (2, 0), (0, 0)],
            &[(0, 1), (0, 0), (1, -1)],
            &[(3, 0), (0, 0), (1, 0)],
        ]);
        let inv = d.inverse().unwrap();
        let x = ode_left_partial(&d, &b).unwrap();
        assert_eq!(x, MatrixPolynomial::constant(&inv * &b));
        let y = ode_right_partial(&d, &b).unwrap();
        assert_eq!(y, MatrixPolynomial::constant(&b * &inv));
        assert!(residual_right(&d, &b, &y).unwrap().is_zero());
    }

    #[test]
    fn nilpotent_index_two_with_identity() {
        let a = m(&[&[(0, 0), (1, 0)], &[(0, 0), (0, 0)]]);
        let i = CMatrix::identity(2);
        let x = ode_left_partial(&a, &i).unwrap();
        let want = MatrixPolynomial::from_coeffs(
            2,
            2,
            vec![
                CMatrix::zeros(2, 2),
                i.clone(),
                a.scale(&GaussianRational::from_ratio(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(x, want);
        assert!(residual_left(&a, &i, &x).unwrap().is_zero());
    }

    #[test]
    fn zero_rhs_gives_zero() {
        let (a, _) = ex2();
        let z = CMatrix::zeros(3, 3);
        assert!(ode_left_partial(&a, &z).unwrap().is_zero());
        assert!(ode_right_partial(&a, &z).unwrap().is_zero());
    }

    #[test]
    fn residual_trivial_cases() {
        let (_, b) = ex2();
        let a = CMatrix::zeros(3, 3);
        let r = residual_left(&a, &b, &MatrixPolynomial::zero(3, 3)).unwrap();
        assert_eq!(r, MatrixPolynomial::constant(-&b));
        let bt = MatrixPolynomial::from_coeffs(3, 3, vec![CMatrix::zeros(3, 3), b.clone()]).unwrap();
        assert!(residual_left(&a, &b, &bt).unwrap().is_zero());
        assert!(residual_right(&a, &b, &bt).unwrap().is_zero());
    }

    #[test]
    fn rectangular_rhs() {
        let (a, _) = ex2();
        let b = m(&[&[(1, 0)], &[(0, 1)], &[(2, -1)]]);
        let x = ode_left_partial(&a, &b).unwrap();
        assert_eq!(x.shape(), (3, 1));
        assert!(residual_left(&a, &b, &x).unwrap().is_zero());
        let y = ode_right_partial(&a, &b.transpose()).unwrap();
        assert!(residual_right(&a, &b.transpose(), &y).unwrap().is_zero());
        assert!(ode_left_partial(&a, &b.transpose()).is_err());
    }

    #[test]
    fn polynomial_arithmetic() {
        let (a, b) = ex2();
        let p = MatrixPolynomial::from_coeffs(3, 3, vec![a.clone(), b.clone(), CMatrix::zeros(3, 3)]).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.derivative(), MatrixPolynomial::constant(b.clone()));
        assert_eq!(p.eval(&2.into()), &a + &b.scale(&2.into()));
        assert!(p.checked_sub(&p).unwrap().is_zero());
        assert_eq!(p.transpose().coeff(1), b.transpose());
        assert!(MatrixPolynomial::from_coeffs(3, 3, vec![CMatrix::zeros(2, 2)]).is_err());
        assert!(p.checked_add(&MatrixPolynomial::zero(2, 3)).is_err());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
        proptest::collection::vec((-3i64..=3, -3i64..=3), n * n)
            .prop_map(move |v| CMatrix::new(n, n, v.into_iter().map(Into::into).collect()).unwrap())
    }

    fn arb_pair() -> impl Strategy<Value = (CMatrix, CMatrix)> {
        (2usize..=3)
            .prop_flat_map(|n| {
                // L·R with an inner dimension below n keeps A singular
                (arb_matrix(n), arb_matrix(n), arb_matrix(n), 1usize..n)
            })
            .prop_map(|(l, r, b, cut)| {
                let n = l.rows();
                let l = CMatrix::from_fn(n, n, |i, j| {
                    if j <= cut {
                        l.get(i, j).clone()
                    } else {
                        GaussianRational::zero()
                    }
                });
                (&l * &r, b)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn determinantal_matches_direct_products((a, b) in arb_pair()) {
            let x = ode_left_partial(&a, &b).unwrap();
            prop_assert_eq!(&x, &direct_left(&a, &b));
            prop_assert!(residual_left(&a, &b, &x).unwrap().is_zero());
            let k = crate::drazin::index_of(&a).unwrap().k;
            prop_assert!(x.degree().is_none_or(|d| d <= k));
        }

        #[test]
        fn right_is_transpose_dual((a, b) in arb_pair()) {
            let y = ode_right_partial(&a, &b).unwrap();
            prop_assert!(residual_right(&a, &b, &y).unwrap().is_zero());
            let dual = ode_left_partial(&a.transpose(), &b.transpose()).unwrap().transpose();
            prop_assert_eq!(y, dual);
        }
    }
}
