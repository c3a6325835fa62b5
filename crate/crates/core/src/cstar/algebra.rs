use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// `M_{n_1}(C) + ... + M_{n_k}(C)`, stored as the block sizes in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FdAlgebra {
    blocks: Vec<u64>,
}

impl FdAlgebra {
    pub fn new(blocks: impl Into<Vec<u64>>) -> Result<Self> {
        let blocks = blocks.into();
        if blocks.is_empty() {
            return Err(Error::EmptyAlgebra);
        }
        if let Some(index) = blocks.iter().position(|&n| n == 0) {
            return Err(Error::ZeroBlock { index });
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// Number of summands; the rank of K0.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The column of block sizes, which is the class of the unit in K0.
    pub fn unit_class(&self) -> IntMatrix {
        IntMatrix::column(self.blocks.iter().copied()).expect("algebras are non-empty")
    }
}

impl fmt::Display for FdAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "M{n}")?;
        }
        Ok(())
    }
}

/// A *-homomorphism between finite-dimensional C*-algebras, up to unitary
/// equivalence: its multiplicity matrix and the resulting slack vector.
///
/// Entry `(i, j)` of the matrix counts how many times block `j` of the source
/// sits on the diagonal of block `i` of the target; `slack[i]` is the size of
/// the zero corner left over, `m_i - sum_j a_ij n_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FdHom {
    source: FdAlgebra,
    target: FdAlgebra,
    matrix: IntMatrix,
    slack: Vec<BigInt>,
}

/// Validates a multiplicity matrix against the two algebras and computes the slack.
pub fn make_hom(source: FdAlgebra, target: FdAlgebra, matrix: IntMatrix) -> Result<FdHom> {
    if matrix.rows() != target.len() || matrix.cols() != source.len() {
        return Err(Error::Dimension {
            op: "make_hom",
            expected: format!("{}x{} multiplicity matrix", target.len(), source.len()),
            found: format!("{}x{}", matrix.rows(), matrix.cols()),
        });
    }
    for i in 0..matrix.rows() {
        for j in 0..matrix.cols() {
            if matrix[(i, j)].is_negative() {
                return Err(Error::NegativeEntry {
                    row: i,
                    col: j,
                    value: matrix[(i, j)].clone(),
                });
            }
        }
    }
    let used = &matrix * &source.unit_class();
    let mut slack = Vec::with_capacity(target.len());
    for (i, &m) in target.blocks().iter().enumerate() {
        let available = BigInt::from(m);
        let required = &used[(i, 0)];
        if required > &available {
            return Err(Error::Infeasible {
                row: i,
                required: required.clone(),
                available,
            });
        }
        slack.push(available - required);
    }
    Ok(FdHom {
        source,
        target,
        matrix,
        slack,
    })
}

impl FdHom {
    pub fn new(source: FdAlgebra, target: FdAlgebra, matrix: IntMatrix) -> Result<Self> {
        make_hom(source, target, matrix)
    }

    pub fn identity(algebra: &FdAlgebra) -> Self {
        let matrix = IntMatrix::identity(algebra.len()).expect("algebras are non-empty");
        make_hom(algebra.clone(), algebra.clone(), matrix).expect("identity is feasible")
    }

    pub fn zero(source: &FdAlgebra, target: &FdAlgebra) -> Self {
        let matrix = IntMatrix::zeros(target.len(), source.len()).expect("algebras are non-empty");
        make_hom(source.clone(), target.clone(), matrix).expect("zero map is feasible")
    }

    pub fn source(&self) -> &FdAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FdAlgebra {
        &self.target
    }

    /// The multiplicity matrix, which is also the matrix of K0 of the map.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn slack(&self) -> &[BigInt] {
        &self.slack
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `g . f`: apply `f` first. The multiplicity matrix is the product `E_g * E_f`.
pub fn compose(g: &FdHom, f: &FdHom) -> Result<FdHom> {
    if f.target != g.source {
        return Err(Error::CompositionMismatch {
            inner: f.target.blocks.clone(),
            outer: g.source.blocks.clone(),
        });
    }
    let matrix = &g.matrix * &f.matrix;
    let composite = make_hom(f.source.clone(), g.target.clone(), matrix)?;
    debug_assert!(composite.slack.iter().all(|s| !s.is_negative()));
    Ok(composite)
}
