use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::det::determinant;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Default upper bound on the number of full square submatrices visited.
pub const DEFAULT_MINOR_CAP: u64 = 1_000_000;

/// Indices (rows when `rows >= cols`, columns otherwise) picking one full
/// square submatrix, in increasing order.
pub type IndexSet = Vec<usize>;

/// Iterator over the full square submatrices of a matrix, that is the square
/// submatrices of side `min(rows, cols)`.
///
/// Tall (or square) input selects row subsets and keeps every column; wide
/// input selects column subsets. Index sets come out in lexicographic order.
pub struct FullSquareSubmatrices<'a> {
    matrix: &'a IntMatrix,
    by_rows: bool,
    next: Option<IndexSet>,
}

impl<'a> FullSquareSubmatrices<'a> {
    fn new(matrix: &'a IntMatrix) -> Self {
        let by_rows = matrix.rows() >= matrix.cols();
        let side = matrix.rows().min(matrix.cols());
        Self {
            matrix,
            by_rows,
            next: Some((0..side).collect()),
        }
    }

    /// Whether index sets select rows (tall input) or columns (wide input).
    pub fn selects_rows(&self) -> bool {
        self.by_rows
    }
}

/// Advances `combo` to the next `combo.len()`-subset of `0..n`.
fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for pos in (0..k).rev() {
        if combo[pos] < n - k + pos {
            combo[pos] += 1;
            for t in pos + 1..k {
                combo[t] = combo[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl Iterator for FullSquareSubmatrices<'_> {
    type Item = (IndexSet, IntMatrix);

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let n = self.matrix.rows().max(self.matrix.cols());
        let mut following = current.clone();
        if advance(&mut following, n) {
            self.next = Some(following);
        }
        let sub = if self.by_rows {
            self.matrix.select_rows(&current)
        } else {
            self.matrix.select_cols(&current)
        }
        .expect("index sets are non-empty and in range");
        Some((current, sub))
    }
}

pub fn full_square_submatrices(e: &IntMatrix) -> FullSquareSubmatrices<'_> {
    FullSquareSubmatrices::new(e)
}

/// Number of full square submatrices, `None` if it does not fit in a `u128`.
pub fn full_square_count(e: &IntMatrix) -> Option<u128> {
    let n = e.rows().max(e.cols()) as u128;
    let k = e.rows().min(e.cols()) as u128;
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.checked_mul(n - i)? / (i + 1);
    }
    Some(c)
}

pub(crate) fn check_cap(e: &IntMatrix, cap: u64) -> Result<()> {
    match full_square_count(e) {
        Some(count) if count <= u128::from(cap) => Ok(()),
        count => Err(Error::EnumerationCap {
            rows: e.rows(),
            cols: e.cols(),
            count: count.map_or_else(|| "more than 2^128".to_string(), |c| c.to_string()),
            cap,
        }),
    }
}

/// gcd of the determinants of all full square submatrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorGcdResult {
    pub d: BigInt,
    /// Every (index set, determinant) pair that was evaluated, in enumeration order.
    pub witnesses: Vec<(IndexSet, BigInt)>,
    /// False when enumeration stopped early because the running gcd hit 1.
    pub exhausted: bool,
}

/// gcd of all full square minors, with the default enumeration cap.
///
/// With `early_exit`, enumeration stops once the running gcd reaches 1.
pub fn minor_gcd(e: &IntMatrix, early_exit: bool) -> Result<MinorGcdResult> {
    minor_gcd_capped(e, early_exit, DEFAULT_MINOR_CAP)
}

pub fn minor_gcd_capped(e: &IntMatrix, early_exit: bool, cap: u64) -> Result<MinorGcdResult> {
    check_cap(e, cap)?;
    let mut d = BigInt::zero();
    let mut witnesses = Vec::new();
    let mut subs = full_square_submatrices(e).peekable();
    while let Some((index, f)) = subs.next() {
        let det = determinant(&f)?;
        d = d.gcd(&det);
        witnesses.push((index, det));
        if early_exit && d.is_one() {
            let exhausted = subs.peek().is_none();
            return Ok(MinorGcdResult {
                d,
                witnesses,
                exhausted,
            });
        }
    }
    Ok(MinorGcdResult {
        d,
        witnesses,
        exhausted: true,
    })
}
