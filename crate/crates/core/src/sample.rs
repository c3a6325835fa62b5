//! Random instance generators for property checks and benchmarks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::cstar::{make_hom, FdAlgebra, FdHom};
use crate::intlin::{column_rank, IntMatrix};

pub const MAX_BLOCKS: usize = 4;
pub const MAX_BLOCK_SIZE: u64 = 5;
pub const MAX_MULTIPLICITY: i64 = 3;
pub const MAX_SLACK: u64 = 2;

pub fn matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(lo..=hi)))
        .expect("positive dimensions")
}

/// Tall matrix with independent columns, `rows <= max_rows`, entries in `[-9, 9]`.
///
/// A third of the draws scale a random column by 2 or 3, which forces every
/// full square minor to share that factor, so both outcomes of the torsion
/// tests are well represented.
pub fn full_column_rank<R: Rng + ?Sized>(rng: &mut R, max_rows: usize) -> IntMatrix {
    loop {
        let l = rng.gen_range(1..=max_rows);
        let k = rng.gen_range(1..=l);
        let e = match rng.gen_range(0..3) {
            0 => {
                let factor: i64 = rng.gen_range(2..=3);
                let bound = 9 / factor;
                let col = rng.gen_range(0..k);
                let base = matrix(rng, l, k, -9, 9);
                IntMatrix::from_fn(l, k, |i, j| {
                    if j == col {
                        BigInt::from(rng.gen_range(-bound..=bound) * factor)
                    } else {
                        base[(i, j)].clone()
                    }
                })
                .expect("positive dimensions")
            }
            // small entries make unit and small-gcd minors common
            1 => matrix(rng, l, k, -1, 1),
            _ => matrix(rng, l, k, -9, 9),
        };
        if column_rank(&e) == k {
            return e;
        }
    }
}

/// Tall matrix with at least two columns, the last a combination of the others.
pub fn rank_deficient<R: Rng + ?Sized>(rng: &mut R, max_rows: usize) -> IntMatrix {
    let l = rng.gen_range(2..=max_rows.max(2));
    let k = rng.gen_range(2..=l);
    let base = matrix(rng, l, k, -9, 9);
    let weights: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(-2..=2)).collect();
    IntMatrix::from_fn(l, k, |i, j| {
        if j + 1 < k {
            base[(i, j)].clone()
        } else {
            (0..k - 1).map(|t| &base[(i, t)] * weights[t]).sum()
        }
    })
    .expect("positive dimensions")
}

pub fn algebra<R: Rng + ?Sized>(rng: &mut R) -> FdAlgebra {
    let k = rng.gen_range(1..=MAX_BLOCKS);
    FdAlgebra::new(
        (0..k)
            .map(|_| rng.gen_range(1..=MAX_BLOCK_SIZE))
            .collect::<Vec<_>>(),
    )
    .expect("positive sizes")
}

/// A valid homomorphism out of `source`: multiplicities are drawn first and the
/// target sizes are `m_i = sum_j a_ij n_j + s_i` with `s_i` in `0..=2`.
///
/// Draws alternate between the plain recipe (multiplicities `0..=3`), sparse
/// 0/1 matrices, and block permutations/projections with no slack, so that
/// surjective maps actually occur.
pub fn hom_from<R: Rng + ?Sized>(rng: &mut R, source: &FdAlgebra) -> FdHom {
    let k = source.len();
    let l = rng.gen_range(1..=MAX_BLOCKS);
    let (e, slack_max) = match rng.gen_range(0..3) {
        0 => (matrix(rng, l, k, 0, MAX_MULTIPLICITY), MAX_SLACK),
        1 => (matrix(rng, l, k, 0, 1), rng.gen_range(0..=1)),
        _ => {
            // each target block copies one source block
            let mut cols: Vec<usize> = (0..k).collect();
            cols.shuffle(rng);
            let distinct = rng.gen_bool(0.7);
            let e = IntMatrix::from_fn(l, k, |i, j| {
                let pick = if distinct && i < k {
                    cols[i]
                } else {
                    cols[i % k]
                };
                BigInt::from(i64::from(j == pick))
            })
            .expect("positive dimensions");
            (e, u64::from(rng.gen_bool(0.2)))
        }
    };
    let used = &e * &source.unit_class();
    let blocks: Vec<u64> = (0..l)
        .map(|i| {
            let u: u64 = u64::try_from(&used[(i, 0)]).expect("small multiplicities");
            let s = rng.gen_range(0..=slack_max);
            // target blocks must be nonzero
            (u + s).max(1)
        })
        .collect();
    let target = FdAlgebra::new(blocks).expect("positive sizes");
    make_hom(source.clone(), target, e).expect("feasible by construction")
}

pub fn hom<R: Rng + ?Sized>(rng: &mut R) -> FdHom {
    let source = algebra(rng);
    hom_from(rng, &source)
}

/// `len` composable homomorphisms, each starting where the previous one ends.
pub fn chain<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<FdHom> {
    let mut out: Vec<FdHom> = Vec::with_capacity(len);
    let mut source = algebra(rng);
    for _ in 0..len {
        let h = hom_from(rng, &source);
        source = h.target().clone();
        out.push(h);
    }
    out
}

/// Matrix whose rows are each a single 1, in a random column.
pub fn unit_rows<R: Rng + ?Sized>(rng: &mut R, max_rows: usize, max_cols: usize) -> IntMatrix {
    let l = rng.gen_range(1..=max_rows);
    let k = rng.gen_range(1..=max_cols);
    let picks: Vec<usize> = (0..l).map(|_| rng.gen_range(0..k)).collect();
    IntMatrix::from_fn(l, k, |i, j| BigInt::from(i64::from(picks[i] == j)))
        .expect("positive dimensions")
}
