//! Strictly increasing index sets and the principal-minor sums built on them.
//!
//! `L(k, n)` is the family of all `k`-subsets of `{1..n}` in lexicographic
//! order; `L(k, n){i}` keeps the members that contain `i`. The replaced-minor
//! sums add up the principal minors over `L(r, n){i}` of a matrix whose column
//! (or row) `i` has been swapped for a given vector.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::matrix::{check_index, check_len, det_of, CMatrix};

/// A strictly increasing sequence of 1-based indices drawn from `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    elements: Vec<usize>,
    n: usize,
}

impl IndexSet {
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self> {
        for (pos, &e) in elements.iter().enumerate() {
            check_index("index set element", e, n)?;
            if pos > 0 && elements[pos - 1] >= e {
                return Err(Error::Parse(format!(
                    "index set {elements:?} is not strictly increasing"
                )));
            }
        }
        Ok(Self { elements, n })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }
}

/// All `C(n, k)` sets in `L(k, n)`, lexicographically. `k = 0` yields the
/// single empty set.
pub fn enum_l(k: usize, n: usize) -> Result<Vec<IndexSet>> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            what: "subset size",
            value: k,
            max: n,
        });
    }
    Ok((1..=n)
        .combinations(k)
        .map(|elements| IndexSet { elements, n })
        .collect())
}

/// The sets of `L(k, n)` that contain `i`, lexicographically.
pub fn enum_containing(k: usize, n: usize, i: usize) -> Result<Vec<IndexSet>> {
    check_index("subset size", k, n)?;
    check_index("member", i, n)?;
    Ok(enum_l(k, n)?.into_iter().filter(|s| s.contains(i)).collect())
}

fn square_dim(m: &CMatrix, op: &'static str) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::NotSquare {
            op,
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

fn principal_minor(m: &CMatrix, set: &[usize]) -> GaussianRational {
    det_of(
        set.iter()
            .map(|&p| set.iter().map(|&q| m.at(p - 1, q - 1).clone()).collect())
            .collect(),
    )
}

/// `d_s`: the sum of all principal minors of order `s`.
pub fn sum_principal_minors(m: &CMatrix, s: usize) -> Result<GaussianRational> {
    let n = square_dim(m, "sum_principal_minors")?;
    check_index("minor order", s, n)?;
    Ok(enum_l(s, n)?.iter().map(|set| principal_minor(m, set.elements())).sum())
}

#[derive(Clone, Copy)]
enum Axis {
    Column,
    Row,
}

fn replaced_minor_sum(
    m: &CMatrix,
    axis: Axis,
    idx: usize,
    b: &[GaussianRational],
    r: usize,
    op: &'static str,
) -> Result<GaussianRational> {
    let n = square_dim(m, op)?;
    check_index(
        match axis {
            Axis::Column => "column",
            Axis::Row => "row",
        },
        idx,
        n,
    )?;
    check_len(op, b.len(), n)?;
    let sets = enum_containing(r, n, idx)?;
    Ok(sets
        .iter()
        .map(|set| {
            let el = set.elements();
            let sub = el
                .iter()
                .map(|&p| {
                    el.iter()
                        .map(|&q| match axis {
                            Axis::Column if q == idx => b[p - 1].clone(),
                            Axis::Row if p == idx => b[q - 1].clone(),
                            _ => m.at(p - 1, q - 1).clone(),
                        })
                        .collect()
                })
                .collect();
            det_of(sub)
        })
        .sum())
}

/// `Σ_{β ∈ L(r,n){i}} |(M with column i replaced by b)_β^β|`.
pub fn sum_minors_col_replaced(m: &CMatrix, i: usize, b: &[GaussianRational], r: usize) -> Result<GaussianRational> {
    replaced_minor_sum(m, Axis::Column, i, b, r, "sum_minors_col_replaced")
}

/// `Σ_{α ∈ L(r,n){j}} |(M with row j replaced by b)_α^α|`.
pub fn sum_minors_row_replaced(m: &CMatrix, j: usize, b: &[GaussianRational], r: usize) -> Result<GaussianRational> {
    replaced_minor_sum(m, Axis::Row, j, b, r, "sum_minors_row_replaced")
}
