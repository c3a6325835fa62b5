use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

fn require_square(m: &IntMatrix, op: &'static str) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension {
            op,
            expected: "a square matrix".into(),
            found: format!("{}x{}", m.rows(), m.cols()),
        })
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    require_square(m, "determinant")?;
    let n = m.rows();
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let v = (&a[(i, j)] * &pivot - &lead * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = pivot;
    }

    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant of `m` with row `skip_row` and column `skip_col` removed.
fn minor(m: &IntMatrix, skip_row: usize, skip_col: usize) -> Result<BigInt> {
    let rows: Vec<usize> = (0..m.rows()).filter(|&i| i != skip_row).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&j| j != skip_col).collect();
    determinant(&m.select_rows(&rows)?.select_cols(&cols)?)
}

/// Transpose of the cofactor matrix. The adjugate of a 1x1 matrix is `[[1]]`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    require_square(m, "adjugate")?;
    let n = m.rows();
    if n == 1 {
        return IntMatrix::identity(1);
    }
    let mut adj = IntMatrix::zeros(n, n)?;
    for i in 0..n {
        for j in 0..n {
            let c = minor(m, i, j)?;
            adj[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    Ok(adj)
}

/// Rank over the rationals, by fraction-free elimination.
pub fn column_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut rank = 0;

    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(rank, p);
        let pivot = a[(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let v = (&a[(i, j)] * &pivot - &lead * &a[(rank, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
