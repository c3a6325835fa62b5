//! One-sided integer inverses built from scattered adjugates.
//!
//! For a tall `l x k` matrix `E`, every full square submatrix `F_r` on rows
//! `i_1 < ... < i_k` gives a `k x l` matrix `K~_r` whose column `i_t` is column
//! `t` of `adj(F_r)` and whose other columns vanish. Then
//! `K~_r * E = adj(F_r) * F_r = det(F_r) * I_k`, and any Bezout combination
//! `sum a_r det(F_r) = d` yields `K = sum a_r K~_r` with `K * E = d * I_k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bezout::{combine, gcd_with_bezout};
use super::det::adjugate;
use super::matrix::IntMatrix;
use super::minors::{full_square_submatrices, minor_gcd};
use crate::error::{Error, Result};

/// `matrix * E = d * I` (left) or `E * matrix = d * I` (right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledInverse {
    pub d: BigInt,
    pub matrix: IntMatrix,
    /// Set when `d = 0`, i.e. the input does not have full rank; `matrix` is then zero.
    pub degenerate: bool,
}

impl ScaledInverse {
    pub fn is_unit(&self) -> bool {
        self.d.is_one()
    }
}

fn require_tall(e: &IntMatrix, op: &'static str) -> Result<()> {
    if e.rows() >= e.cols() {
        Ok(())
    } else {
        Err(Error::Dimension {
            op,
            expected: "at least as many rows as columns".into(),
            found: format!("{}x{}", e.rows(), e.cols()),
        })
    }
}

fn require_wide(e: &IntMatrix, op: &'static str) -> Result<()> {
    if e.cols() >= e.rows() {
        Ok(())
    } else {
        Err(Error::Dimension {
            op,
            expected: "at least as many columns as rows".into(),
            found: format!("{}x{}", e.rows(), e.cols()),
        })
    }
}

/// The scattered adjugate `K~` of the full square submatrix on `rows`.
pub fn scattered_adjugate(e: &IntMatrix, rows: &[usize]) -> Result<IntMatrix> {
    let adj = adjugate(&e.select_rows(rows)?)?;
    let mut out = IntMatrix::zeros(e.cols(), e.rows())?;
    for (t, &i) in rows.iter().enumerate() {
        for a in 0..e.cols() {
            out[(a, i)] = adj[(a, t)].clone();
        }
    }
    Ok(out)
}

/// `(d, K)` with `K * E = d * I_k`, where `d` is the gcd of the full square minors.
pub fn scaled_left_inverse(e: &IntMatrix) -> Result<ScaledInverse> {
    build_left(e, None)
}

/// As [`scaled_left_inverse`], combining the scattered adjugates with caller
/// supplied coefficients, one per full square submatrix in lexicographic order.
/// The coefficients must combine the minors to their gcd.
pub fn scaled_left_inverse_with_coefficients(
    e: &IntMatrix,
    coefficients: &[BigInt],
) -> Result<ScaledInverse> {
    build_left(e, Some(coefficients))
}

fn build_left(e: &IntMatrix, coefficients: Option<&[BigInt]>) -> Result<ScaledInverse> {
    require_tall(e, "scaled_left_inverse")?;
    let minors = minor_gcd(e, false)?;
    let (k, l) = (e.cols(), e.rows());

    if minors.d.is_zero() {
        return Ok(ScaledInverse {
            d: minors.d,
            matrix: IntMatrix::zeros(k, l)?,
            degenerate: true,
        });
    }

    let dets: Vec<BigInt> = minors
        .witnesses
        .iter()
        .map(|(_, det)| det.clone())
        .collect();
    let alphas = match coefficients {
        Some(given) => {
            if given.len() != dets.len() {
                return Err(Error::Dimension {
                    op: "scaled_left_inverse coefficients",
                    expected: format!("{} coefficients", dets.len()),
                    found: given.len().to_string(),
                });
            }
            let found = combine(given, &dets);
            if found != minors.d {
                return Err(Error::BezoutMismatch {
                    expected: minors.d,
                    found,
                });
            }
            given.to_vec()
        }
        None => gcd_with_bezout(&dets)?.coefficients,
    };

    let mut out = IntMatrix::zeros(k, l)?;
    for ((rows, _), alpha) in full_square_submatrices(e).zip(&alphas) {
        if alpha.is_zero() {
            continue;
        }
        let adj = adjugate(&e.select_rows(&rows)?)?;
        for (t, &i) in rows.iter().enumerate() {
            for a in 0..k {
                out[(a, i)] += alpha * &adj[(a, t)];
            }
        }
    }

    debug_assert!((&out * e).is_scalar(&minors.d));
    Ok(ScaledInverse {
        d: minors.d,
        matrix: out,
        degenerate: false,
    })
}

/// `K` with `K * E = I` exactly when the full square minors of `E` are coprime.
pub fn left_inverse(e: &IntMatrix) -> Result<Option<IntMatrix>> {
    require_tall(e, "left_inverse")?;
    let s = scaled_left_inverse(e)?;
    Ok(s.is_unit().then_some(s.matrix))
}

/// `(d, R)` with `E * R = d * I_l`, through the transpose.
pub fn scaled_right_inverse(e: &IntMatrix) -> Result<ScaledInverse> {
    require_wide(e, "scaled_right_inverse")?;
    let s = scaled_left_inverse(&e.transpose())?;
    Ok(ScaledInverse {
        matrix: s.matrix.transpose(),
        ..s
    })
}

/// `R` with `E * R = I` exactly when the full square minors of `E` are coprime.
pub fn right_inverse(e: &IntMatrix) -> Result<Option<IntMatrix>> {
    require_wide(e, "right_inverse")?;
    Ok(left_inverse(&e.transpose())?.map(|k| k.transpose()))
}
