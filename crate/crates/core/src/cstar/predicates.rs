//! Decision procedures on multiplicity matrices, at the level of the algebras
//! and at the level of K0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::algebra::FdHom;
use crate::error::{Error, Result};
use crate::intlin::{
    column_rank, minor_gcd, scaled_left_inverse, smith_normal_form, IntMatrix, MinorGcdResult,
    SmithDecomposition,
};

/// Injective iff every source block lands somewhere: no zero column.
pub fn is_injective(h: &FdHom) -> bool {
    let e = h.matrix();
    (0..e.cols()).all(|j| e.col(j).any(|v| !v.is_zero()))
}

/// Unital iff no target block has a zero corner left over.
pub fn is_unital(h: &FdHom) -> bool {
    h.slack().iter().all(Zero::is_zero)
}

/// K0 of the map sends the unit class `V1` to `E V1`; unital iff that is `V2`.
pub fn k0_unital(h: &FdHom) -> bool {
    h.matrix() * &h.source().unit_class() == h.target().unit_class()
}

/// Every row has a single entry 1 and zeros elsewhere.
pub fn rows_are_unit_patterns(e: &IntMatrix) -> bool {
    first_non_unit_row(e).is_none()
}

fn first_non_unit_row(e: &IntMatrix) -> Option<usize> {
    (0..e.rows()).find(|&i| {
        let row = e.row(i);
        row.iter().filter(|v| v.is_one()).count() != 1
            || row.iter().any(|v| !v.is_zero() && !v.is_one())
    })
}

/// Every column has at most one nonzero entry.
pub fn columns_meet_at_most_one_row(e: &IntMatrix) -> bool {
    (0..e.cols()).all(|j| e.col(j).filter(|v| !v.is_zero()).count() <= 1)
}

/// Surjective iff every target block is a copy of exactly one source block,
/// no source block is used twice, and the map is unital.
pub fn is_surjective(h: &FdHom) -> bool {
    let e = h.matrix();
    rows_are_unit_patterns(e) && columns_meet_at_most_one_row(e) && is_unital(h)
}

/// K0 of the map is `X -> E X`, injective iff the columns of `E` are independent.
pub fn k0_injective(h: &FdHom) -> bool {
    column_rank(h.matrix()) == h.matrix().cols()
}

/// Surjective iff the columns of `E` generate `Z^l`.
pub fn k0_surjective(h: &FdHom) -> bool {
    columns_span_lattice(h.matrix())
}

pub fn columns_span_lattice(e: &IntMatrix) -> bool {
    smith_normal_form(e).columns_span_lattice()
}

/// For a matrix whose rows are all unit patterns, returns
/// `(each column meets at most one row, columns generate Z^l)`.
/// The two always agree under that hypothesis.
pub fn row_pattern_span_equivalence(e: &IntMatrix) -> Result<(bool, bool)> {
    if let Some(row) = first_non_unit_row(e) {
        return Err(Error::RowPattern { row });
    }
    Ok((columns_meet_at_most_one_row(e), columns_span_lattice(e)))
}

/// Which criterion settled torsion-freeness of the cokernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorsionCriterion {
    /// K0 injective: torsion-free iff the full square minors are coprime.
    MinorGcd,
    /// Otherwise: torsion-free iff every invariant factor is 1.
    SmithNormalForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionCertificate {
    MinorGcd {
        minors: MinorGcdResult,
        /// Present exactly when the minors are coprime; checked against `E`.
        left_inverse: Option<IntMatrix>,
    },
    Smith(SmithDecomposition),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionVerdict {
    pub torsion_free: bool,
    pub certificate: TorsionCertificate,
}

impl TorsionVerdict {
    pub fn criterion(&self) -> TorsionCriterion {
        match self.certificate {
            TorsionCertificate::MinorGcd { .. } => TorsionCriterion::MinorGcd,
            TorsionCertificate::Smith(_) => TorsionCriterion::SmithNormalForm,
        }
    }
}

/// Decides whether `Z^l / E Z^k` is torsion-free.
///
/// With independent columns this uses the minor gcd, producing a left inverse
/// when it is 1. Otherwise, or when there are too many minors to enumerate,
/// it falls back to the Smith normal form.
pub fn torsion_verdict(e: &IntMatrix) -> TorsionVerdict {
    if column_rank(e) == e.cols() {
        if let Ok(minors) = minor_gcd(e, false) {
            let torsion_free = minors.d.is_one();
            let left_inverse = torsion_free.then(|| {
                let s = scaled_left_inverse(e).expect("tall matrix within the enumeration cap");
                assert!(
                    (&s.matrix * e).is_identity(),
                    "left inverse failed verification"
                );
                s.matrix
            });
            return TorsionVerdict {
                torsion_free,
                certificate: TorsionCertificate::MinorGcd {
                    minors,
                    left_inverse,
                },
            };
        }
    }
    let snf = smith_normal_form(e);
    TorsionVerdict {
        torsion_free: snf.cokernel_torsion_free(),
        certificate: TorsionCertificate::Smith(snf),
    }
}

pub fn cokernel_torsion_free(h: &FdHom) -> TorsionVerdict {
    torsion_verdict(h.matrix())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdConditions {
    /// gcd of every entry.
    pub entry_gcd: BigInt,
    /// gcd of each column; 0 for a zero column.
    pub column_gcds: Vec<BigInt>,
}

pub(crate) fn gcd_profile(e: &IntMatrix) -> GcdConditions {
    let column_gcds: Vec<BigInt> = (0..e.cols())
        .map(|j| e.col(j).fold(BigInt::zero(), |g, v| g.gcd(v)))
        .collect();
    let entry_gcd = column_gcds.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    GcdConditions {
        entry_gcd,
        column_gcds,
    }
}

/// Entry and column gcds of a nonzero map. A torsion-free cokernel forces the
/// entry gcd to be 1, and with injective K0 every column gcd to be 1.
pub fn necessary_gcd_conditions(h: &FdHom) -> Result<GcdConditions> {
    if h.is_zero() {
        return Err(Error::ZeroHomomorphism);
    }
    Ok(gcd_profile(h.matrix()))
}
