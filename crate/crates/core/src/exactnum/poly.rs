use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// A univariate polynomial over the Gaussian rationals, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and every other polynomial has a nonzero leading term.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ScalarPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl ScalarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: GaussianRational, degree: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients ordered lowest degree first.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^d`; zero beyond the degree.
    pub fn coeff(&self, d: usize) -> GaussianRational {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Multiplicity of the root `x = 0`; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lead_inv;
            for (d, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + d] -= &(&factor * c);
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }
}

/// `lim_{x -> 0} num(x) / den(x)` for polynomials with `ord(num) >= ord(den)`.
///
/// Equal orders give the ratio of the lowest nonzero coefficients; a strictly
/// higher numerator order (including a zero numerator) gives zero.
pub fn poly_limit_at_zero(num: &ScalarPolynomial, den: &ScalarPolynomial) -> Result<GaussianRational> {
    let den_order = den.order_at_zero().ok_or(Error::DivisionByZero)?;
    match num.order_at_zero() {
        None => Ok(GaussianRational::zero()),
        Some(num_order) if num_order < den_order => Err(Error::LimitDiverges { num_order, den_order }),
        Some(_) => num.coeff(den_order).checked_div(&den.coeffs[den_order]),
    }
}

impl<'a> Add<&'a ScalarPolynomial> for &'a ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn add(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPolynomial::from_coeffs((0..len).map(|d| &self.coeff(d) + &rhs.coeff(d)).collect())
    }
}

impl<'a> Sub<&'a ScalarPolynomial> for &'a ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn sub(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPolynomial::from_coeffs((0..len).map(|d| &self.coeff(d) - &rhs.coeff(d)).collect())
    }
}

impl<'a> Mul<&'a ScalarPolynomial> for &'a ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn mul(self, rhs: &ScalarPolynomial) -> ScalarPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPolynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ScalarPolynomial::from_coeffs(out)
    }
}

impl Neg for &ScalarPolynomial {
    type Output = ScalarPolynomial;
    fn neg(self) -> ScalarPolynomial {
        ScalarPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for ScalarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
