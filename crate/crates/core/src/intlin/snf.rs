use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::det::determinant;
use super::matrix::IntMatrix;

/// `D = U * E * V` with `U`, `V` unimodular and `D` diagonal in Smith form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `d`, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The cokernel `Z^rows / im(E)` has no torsion.
    pub fn cokernel_torsion_free(&self) -> bool {
        self.invariant_factors.iter().all(One::is_one)
    }

    /// The columns of `E` generate all of `Z^rows`.
    pub fn columns_span_lattice(&self) -> bool {
        self.rank() == self.d.rows() && self.cokernel_torsion_free()
    }

    /// Checks every structural property of the decomposition against `e`.
    pub fn verify(&self, e: &IntMatrix) -> bool {
        let (l, k) = (e.rows(), e.cols());
        if self.u.rows() != l || !self.u.is_square() || self.v.rows() != k || !self.v.is_square() {
            return false;
        }
        let unimodular = |m: &IntMatrix| determinant(m).map(|d| d.abs().is_one()).unwrap_or(false);
        if !unimodular(&self.u) || !unimodular(&self.v) {
            return false;
        }
        if (&(&self.u * e) * &self.v) != self.d {
            return false;
        }
        for i in 0..l {
            for j in 0..k {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diagonal: Vec<&BigInt> = (0..l.min(k)).map(|i| &self.d[(i, i)]).collect();
        if diagonal.iter().any(|x| x.is_negative()) {
            return false;
        }
        // nonzero entries come first
        if let Some(first_zero) = diagonal.iter().position(|x| x.is_zero()) {
            if diagonal[first_zero..].iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        let nonzero: Vec<BigInt> = diagonal
            .into_iter()
            .filter(|x| !x.is_zero())
            .cloned()
            .collect();
        nonzero.windows(2).all(|w| (&w[1] % &w[0]).is_zero()) && nonzero == self.invariant_factors
    }
}

/// Smallest nonzero entry by absolute value in the block `[t.., t..]`, ties row-major.
fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = &d[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(e: &IntMatrix) -> SmithDecomposition {
    let (l, k) = (e.rows(), e.cols());
    let mut d = e.clone();
    let mut u = IntMatrix::identity(l).expect("rows >= 1");
    let mut v = IntMatrix::identity(k).expect("cols >= 1");

    for t in 0..l.min(k) {
        while let Some((pi, pj)) = find_pivot(&d, t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..l {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..k {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a remainder smaller than the pivot is left; pick it up next round
                continue;
            }

            // divisibility fix-up: fold an offending row into the pivot row
            let offending =
                (t + 1..l).find(|&i| (t + 1..k).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let invariant_factors = (0..l.min(k))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect();
    SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}
